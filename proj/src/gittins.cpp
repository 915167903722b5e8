#include "rgsched/gittins.hpp"

#include <algorithm>

namespace rgsched {

Rat weighted_investment(const FiniteDist& d, const Rat& q, const Rat& y) {
  if (q.sign() <= 0) fail(Err::InvalidParams, "quantum length must be positive");
  Rat acc(0);
  for (const Atom& a : d.atoms()) {
    if (a.size > y && a.size <= y + q) acc += (a.size - y) * a.prob;
  }
  return acc + q * d.survival(y + q);
}

Rat investment(const FiniteDist& d, const Rat& q, const Rat& y) {
  Rat sy = d.survival(y);
  if (sy.sign() == 0) {
    fail(Err::ConditionOnZeroEvent, "investment conditioned on P > " + y.str());
  }
  return weighted_investment(d, q, y) / sy;
}

Rat rank(const FiniteDist& d, const Rat& q, const Rat& y) {
  Rat sy = d.survival(y);
  if (sy.sign() == 0) {
    fail(Err::ConditionOnZeroEvent, "rank conditioned on P > " + y.str());
  }
  // The conditioning divisor cancels between numerator and investment.
  return (sy - d.survival(y + q)) / weighted_investment(d, q, y);
}

std::vector<Quantum> compute_quanta(const FiniteDist& d, size_t job) {
  std::vector<Quantum> out;
  const Rat maxs = d.max_support();
  Rat y(0);
  while (y < maxs) {
    // Candidates are distances to support points above y; a maximizer of
    // this form always exists. Ascending scan keeps the smallest tied q.
    bool have = false;
    Rat best_q, best_rank;
    for (const Atom& a : d.atoms()) {
      if (a.size <= y) continue;
      Rat q = a.size - y;
      Rat r = rank(d, q, y);
      if (!have || r > best_rank) {
        have = true;
        best_q = q;
        best_rank = r;
      }
    }
    if (!out.empty() && best_rank > out.back().rank) {
      fail(Err::OrderInversion,
           "per-job rank increased across consecutive quanta (rank computation bug)");
    }
    out.push_back(Quantum{job, y, best_q, best_rank});
    y += best_q;
  }
  return out;
}

QuantaOrder gipp_order(const Instance& inst) {
  struct Keyed {
    Quantum q;
    size_t index;  // per-job quantum index
  };
  std::vector<Keyed> all;
  for (size_t j = 0; j < inst.size(); ++j) {
    auto quanta = compute_quanta(inst.job(j), j);
    for (size_t i = 0; i < quanta.size(); ++i) all.push_back({quanta[i], i});
  }
  std::sort(all.begin(), all.end(), [](const Keyed& a, const Keyed& b) {
    if (a.q.rank != b.q.rank) return a.q.rank > b.q.rank;
    if (a.q.job != b.q.job) return a.q.job < b.q.job;
    return a.index < b.index;
  });

  // Per-job offsets must come out increasing; anything else means the rank
  // monotonicity assertion above was not enough.
  std::vector<long> last_index(inst.size(), -1);
  for (const Keyed& k : all) {
    if (static_cast<long>(k.index) <= last_index[k.q.job]) {
      fail(Err::OrderInversion, "global order breaks per-job quantum order");
    }
    last_index[k.q.job] = static_cast<long>(k.index);
  }

  QuantaOrder order;
  order.quanta.reserve(all.size());
  for (Keyed& k : all) order.quanta.push_back(std::move(k.q));
  return order;
}

std::vector<std::vector<SpanRange>> positional_history(
    const std::vector<size_t>& job_at_position, size_t job_count) {
  std::vector<std::vector<SpanRange>> spans(job_count);
  std::vector<size_t> prev_end(job_count, 0);
  for (size_t pos = 0; pos < job_at_position.size(); ++pos) {
    size_t j = job_at_position[pos];
    if (j >= job_count) fail(Err::InvalidParams, "job index out of range");
    spans[j].push_back(SpanRange{prev_end[j], pos + 1});
    prev_end[j] = pos + 1;
  }
  return spans;
}

std::vector<std::vector<SpanRange>> history_sets(const QuantaOrder& order,
                                                 size_t job_count) {
  std::vector<size_t> jobs;
  jobs.reserve(order.quanta.size());
  for (const Quantum& q : order.quanta) jobs.push_back(q.job);
  return positional_history(jobs, job_count);
}

}  // namespace rgsched
