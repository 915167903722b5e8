#include "rgsched/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <vector>

namespace rgsched {

EvalCaps EvalCaps::defaults() {
  EvalCaps caps;
  if (const char* env = std::getenv("RGSCHED_MAX_STATES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) {
      caps.enum_cap = v;
      caps.dp_cap = v;
    }
  }
  return caps;
}

namespace {

void require_coverage(const Schedule& s, const Instance& truth) {
  if (s.job_count() > truth.size()) {
    fail(Err::ScheduleDoesNotCover, "schedule references more jobs than the instance has");
  }
  for (size_t j = 0; j < truth.size(); ++j) {
    if (s.total_length(j) < truth.job(j).max_support()) {
      fail(Err::ScheduleDoesNotCover,
           "job " + std::to_string(j) + " entries sum to " + s.total_length(j).str() +
               " < max support " + truth.job(j).max_support().str());
    }
  }
}

void require_positive_supports(const Instance& inst, const char* what) {
  for (size_t j = 0; j < inst.size(); ++j) {
    if (inst.job(j).min_support().sign() <= 0) {
      fail(Err::InvalidParams,
           std::string(what) + " requires strictly positive supports, job " +
               std::to_string(j) + " has an atom at 0");
    }
  }
}

}  // namespace

Rat expected_cost_closed_form(const Schedule& s, const Instance& truth) {
  require_coverage(s, truth);
  const auto& entries = s.entries();

  // Unconditional weighted investments per entry, plus prefix sums so each
  // H'(j,i) contribution is a range query.
  std::vector<Rat> w(entries.size());
  std::vector<Rat> prefix(entries.size() + 1, Rat(0));
  std::vector<size_t> jobs(entries.size());
  for (size_t p = 0; p < entries.size(); ++p) {
    const ScheduleEntry& e = entries[p];
    w[p] = weighted_investment(truth.job(e.job), e.length, e.offset);
    prefix[p + 1] = prefix[p] + w[p];
    jobs[p] = e.job;
  }

  auto spans = positional_history(jobs, truth.size());
  Rat total(0);
  // Own-quantum terms: the indicator P_j > y_ji coincides with the one
  // inside the weighted investment.
  for (size_t p = 0; p < entries.size(); ++p) total += w[p];
  for (size_t j = 0; j < truth.size(); ++j) {
    for (const SpanRange& span : spans[j]) {
      size_t own = span.hi - 1;  // job j's quantum closing this span
      Rat cross = prefix[span.hi] - prefix[span.lo] - w[own];
      if (cross.sign() != 0) {
        total += truth.job(j).survival(entries[own].offset) * cross;
      }
    }
  }
  return total;
}

Rat expected_cost_enumeration(const Schedule& s, const Instance& truth,
                              std::uint64_t cap) {
  if (cap == 0) cap = EvalCaps::defaults().enum_cap;
  require_positive_supports(truth, "enumeration");

  std::uint64_t states = 1;
  for (size_t j = 0; j < truth.size(); ++j) {
    std::uint64_t m = truth.job(j).support_size();
    if (states > cap / m) {
      fail(Err::StateSpaceTooLarge,
           "joint support exceeds cap of " + std::to_string(cap) + " realizations");
    }
    states *= m;
  }

  size_t n = truth.size();
  std::vector<size_t> idx(n, 0);
  std::vector<Rat> realized(n);
  Rat total(0);
  while (true) {
    Rat prob(1);
    for (size_t j = 0; j < n; ++j) {
      const Atom& a = truth.job(j).atoms()[idx[j]];
      realized[j] = a.size;
      prob *= a.prob;
    }
    total += prob * execute(s, realized, ExecMode::Strict).total;

    size_t j = 0;
    while (j < n && ++idx[j] == truth.job(j).support_size()) {
      idx[j] = 0;
      ++j;
    }
    if (j == n) break;
  }
  return total;
}

MonteCarloResult monte_carlo_cost(const Schedule& s, const Instance& truth,
                                  std::uint64_t samples, std::uint64_t seed) {
  if (samples < 2) fail(Err::InvalidParams, "need at least 2 samples");
  require_positive_supports(truth, "Monte Carlo");
  size_t n = truth.size();
  if (s.job_count() > n) {
    fail(Err::InvalidParams, "schedule references more jobs than the instance has");
  }

  // Float-mode simulation. Per-(job, atom) slice lengths and the completing
  // entry are precomputed exactly, so rounding only touches the summed
  // totals, never whether a realization is covered.
  std::vector<size_t> entry_local(s.entries().size());
  std::vector<size_t> entry_job(s.entries().size());
  std::vector<size_t> per_job_entries(n, 0);
  for (size_t p = 0; p < s.entries().size(); ++p) {
    size_t j = s.entries()[p].job;
    entry_job[p] = j;
    entry_local[p] = per_job_entries[j]++;
  }

  std::vector<std::vector<double>> cum(n);
  // slices[j][k][l]: time entry l of job j consumes when the job realizes
  // atom k; complete_at[j][k]: the local entry where it finishes (-1 = never)
  std::vector<std::vector<std::vector<double>>> slices(n);
  std::vector<std::vector<long>> complete_at(n);
  {
    std::vector<std::vector<const ScheduleEntry*>> row(n);
    for (const ScheduleEntry& e : s.entries()) row[e.job].push_back(&e);
    for (size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (const Atom& a : truth.job(j).atoms()) {
        acc += a.prob.to_double();
        cum[j].push_back(acc);
        std::vector<double> atom_slices;
        long done = -1;
        for (size_t l = 0; l < row[j].size(); ++l) {
          const ScheduleEntry& e = *row[j][l];
          atom_slices.push_back(rgsched::min(a.size - e.offset, e.length).to_double());
          if (a.size <= e.offset + e.length) {
            done = static_cast<long>(l);
            break;
          }
        }
        slices[j].push_back(std::move(atom_slices));
        complete_at[j].push_back(done);
      }
    }
  }

  Rng rng(seed);
  std::vector<size_t> drawn(n);
  double sum = 0.0, sumsq = 0.0;
  for (std::uint64_t it = 0; it < samples; ++it) {
    for (size_t j = 0; j < n; ++j) {
      double u = rng.unit();
      size_t k = 0;
      while (k + 1 < cum[j].size() && u >= cum[j][k]) ++k;
      drawn[j] = k;
      if (complete_at[j][k] < 0) {
        fail(Err::IncompleteSchedule,
             "a sampled realization was not covered by the schedule");
      }
    }
    double clock = 0.0, total = 0.0;
    for (size_t p = 0; p < entry_job.size(); ++p) {
      size_t j = entry_job[p];
      size_t k = drawn[j];
      long l = static_cast<long>(entry_local[p]);
      if (l > complete_at[j][k]) continue;  // job already done, skipped at no cost
      clock += slices[j][k][static_cast<size_t>(l)];
      if (l == complete_at[j][k]) total += clock;
    }
    sum += total;
    sumsq += total * total;
  }

  double m = static_cast<double>(samples);
  double mean = sum / m;
  double var = std::max(0.0, (sumsq - m * mean * mean) / (m - 1.0));
  return MonteCarloResult{mean, std::sqrt(var / m), samples};
}

namespace {

// Value iteration over per-job attained-support-point states. a_j encodes
// how many support points job j has reached without completing; kDone marks
// completion. Running a job to its next support point takes a deterministic
// amount of wall time and completes exactly there or not at all, so states
// at support points capture every decision an optimal policy can face.
class OptSolver {
 public:
  explicit OptSolver(const Instance& inst) : inst_(inst), state_(inst.size(), 0) {
    for (size_t j = 0; j < inst.size(); ++j) {
      const auto& atoms = inst.job(j).atoms();
      tails_.emplace_back();
      Rat tail(0);
      for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
        tail += it->prob;
        tails_.back().push_back(tail);
      }
      std::reverse(tails_.back().begin(), tails_.back().end());
    }
  }

  Rat solve() { return value(); }

 private:
  static constexpr std::uint8_t kDone = 0xff;

  Rat value() {
    auto found = memo_.find(state_);
    if (found != memo_.end()) return found->second;

    size_t open = 0;
    for (std::uint8_t a : state_) {
      if (a != kDone) ++open;
    }
    if (open == 0) return Rat(0);

    bool have = false;
    Rat best;
    for (size_t j = 0; j < state_.size(); ++j) {
      std::uint8_t a = state_[j];
      if (a == kDone) continue;
      const auto& atoms = inst_.job(j).atoms();
      Rat y = a == 0 ? Rat(0) : atoms[a - 1].size;
      Rat step = atoms[a].size - y;
      // Completion at the next support point, conditioned on P > y.
      Rat complete = atoms[a].prob / tails_[j][a];

      Rat v = Rat(static_cast<long>(open)) * step;
      std::uint8_t saved = state_[j];
      state_[j] = kDone;
      v += complete * value();
      if (complete != Rat(1)) {
        state_[j] = saved + 1;
        v += (Rat(1) - complete) * value();
      }
      state_[j] = saved;

      if (!have || v < best) {
        have = true;
        best = v;
      }
    }
    memo_.emplace(state_, best);
    return best;
  }

  const Instance& inst_;
  std::vector<std::uint8_t> state_;
  std::vector<std::vector<Rat>> tails_;  // tails_[j][i] = P(P_j >= s_{j,i})
  std::map<std::vector<std::uint8_t>, Rat> memo_;
};

}  // namespace

Rat brute_force_opt(const Instance& inst, std::uint64_t cap) {
  if (cap == 0) cap = EvalCaps::defaults().dp_cap;
  require_positive_supports(inst, "the DP oracle");

  std::uint64_t states = 1;
  for (size_t j = 0; j < inst.size(); ++j) {
    std::uint64_t m = inst.job(j).support_size() + 1;
    if (m > 200) fail(Err::StateSpaceTooLarge, "support too large for the DP oracle");
    if (states > cap / m) {
      fail(Err::StateSpaceTooLarge,
           "DP state space exceeds cap of " + std::to_string(cap) + " states");
    }
    states *= m;
  }
  return OptSolver(inst).solve();
}

}  // namespace rgsched
