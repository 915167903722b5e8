#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rgsched/schedule.hpp"

namespace rgsched {

/// Size limits for the exhaustive oracles. A zero passed to the operations
/// below means "use these defaults"; the RGSCHED_MAX_STATES environment
/// variable overrides both.
struct EvalCaps {
  std::uint64_t enum_cap = 1'000'000;  // joint realizations
  std::uint64_t dp_cap = 100'000;      // DP states

  static EvalCaps defaults();
};

/// Exact expected total completion time of a fixed schedule under `truth`,
/// computed positionally from the schedule's own offsets, lengths and entry
/// order:
///   sum_j sum_i [ W_j(q_ji, y_ji) + S_j(y_ji) * sum_{(k,l) in H'(j,i), k!=j}
///                 W_k(q_kl, y_kl) ]
/// with W the unconditional weighted investment and S the survival function,
/// both under `truth`. Valid for any entry order whose per-job lengths cover
/// the job's largest support point.
Rat expected_cost_closed_form(const Schedule& s, const Instance& truth);

/// Independent oracle: sums probability * execute(...).total over the full
/// product support of `truth`, in exact rational arithmetic.
Rat expected_cost_enumeration(const Schedule& s, const Instance& truth,
                              std::uint64_t cap = 0);

struct MonteCarloResult {
  double estimate;
  double std_error;
  std::uint64_t samples;
};

/// Seeded sample mean and standard error of execute totals. Runs in float
/// arithmetic; deterministic for a fixed seed.
MonteCarloResult monte_carlo_cost(const Schedule& s, const Instance& truth,
                                  std::uint64_t samples, std::uint64_t seed);

/// Optimal expected total completion time over nonanticipatory preemptive
/// policies, by exact value iteration over per-job attained-support-point
/// states. Decision epochs are restricted to support points, where all
/// completions happen and between which no information arrives.
Rat brute_force_opt(const Instance& inst, std::uint64_t cap = 0);

/// Evaluation result with method tag and diagnostics, as written by the CLI.
struct CostReport {
  std::string method;  // closed-form | enumeration | monte-carlo | dp-opt
  std::optional<Rat> value;
  double value_decimal = 0.0;
  std::optional<double> std_error;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  double runtime_ms = 0.0;
};

}  // namespace rgsched
