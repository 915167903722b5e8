#pragma once

#include <vector>

#include "rgsched/distribution.hpp"

namespace rgsched {

/// One precomputed scheduling decision: run `job` for `length` further time
/// units after `offset` attained time, or until it finishes.
struct Quantum {
  size_t job;
  Rat offset;  // attained processing time when the quantum starts
  Rat length;  // positive
  Rat rank;

  friend bool operator==(const Quantum& a, const Quantum& b) {
    return a.job == b.job && a.offset == b.offset && a.length == b.length &&
           a.rank == b.rank;
  }
};

/// E[min{P - y, q} ; P > y] without the conditioning divisor. Defined (and
/// zero) even when P(P > y) = 0, which the cost evaluator relies on.
Rat weighted_investment(const FiniteDist& d, const Rat& q, const Rat& y);

/// Expected processing time of quantum (q) given y attained:
/// E[min{P - y, q} | P > y].
Rat investment(const FiniteDist& d, const Rat& q, const Rat& y);

/// Completion probability of the quantum divided by its investment:
/// P(P - y <= q | P > y) / investment(d, q, y).
Rat rank(const FiniteDist& d, const Rat& q, const Rat& y);

/// Recursive per-job quanta: starting from y = 0, pick the rank-maximizing
/// quantum among support-point distances (smallest length on ties), advance,
/// and stop when y reaches the largest support point. Quantum boundaries are
/// always support points and the per-job rank sequence never increases.
std::vector<Quantum> compute_quanta(const FiniteDist& d, size_t job = 0);

/// All quanta of an instance in the global priority order: decreasing rank,
/// ties broken by lower job index, then by per-job quantum index.
struct QuantaOrder {
  std::vector<Quantum> quanta;
};

QuantaOrder gipp_order(const Instance& inst);

/// Half-open range [lo, hi) of positions in a global order.
struct SpanRange {
  size_t lo;
  size_t hi;
};

/// Prefix-difference sets over an arbitrary job sequence: for job j's i-th
/// appearance at position p_i, the span (p_{i-1}, p_i] as [lo, hi). Every
/// position up to a job's last appearance lands in exactly one of its spans.
std::vector<std::vector<SpanRange>> positional_history(
    const std::vector<size_t>& job_at_position, size_t job_count);

/// The disjointified history sets of a quanta order, indexed [job][i].
std::vector<std::vector<SpanRange>> history_sets(const QuantaOrder& order,
                                                 size_t job_count);

}  // namespace rgsched
