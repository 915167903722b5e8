#include "rgsched/schedule.hpp"

#include <algorithm>

namespace rgsched {

const char* policy_name(PolicyTag tag) {
  switch (tag) {
    case PolicyTag::Gipp: return "gipp";
    case PolicyTag::RobustGittins: return "rg";
    case PolicyTag::Custom: return "custom";
  }
  return "custom";
}

PolicyTag policy_from_name(const std::string& name) {
  if (name == "gipp") return PolicyTag::Gipp;
  if (name == "rg") return PolicyTag::RobustGittins;
  if (name == "custom") return PolicyTag::Custom;
  fail(Err::InvalidParams, "unknown policy '" + name + "'");
}

Schedule::Schedule(std::vector<ScheduleEntry> entries, PolicyTag tag,
                   std::optional<Rat> alpha, std::string instance_hash)
    : entries_(std::move(entries)),
      tag_(tag),
      alpha_(std::move(alpha)),
      instance_hash_(std::move(instance_hash)) {
  for (const ScheduleEntry& e : entries_) {
    job_count_ = std::max(job_count_, e.job + 1);
  }
  std::vector<Rat> attained(job_count_, Rat(0));
  for (const ScheduleEntry& e : entries_) {
    if (e.length.sign() <= 0) {
      fail(Err::InvalidParams, "schedule entry with non-positive length");
    }
    if (e.offset != attained[e.job]) {
      fail(Err::InvalidParams,
           "entry offset " + e.offset.str() + " for job " + std::to_string(e.job) +
               " is not the running sum of earlier lengths (" +
               attained[e.job].str() + ")");
    }
    attained[e.job] += e.length;
  }
}

Rat Schedule::total_length(size_t job) const {
  Rat sum(0);
  for (const ScheduleEntry& e : entries_) {
    if (e.job == job) sum += e.length;
  }
  return sum;
}

Schedule build_gipp_schedule(const Instance& inst) {
  QuantaOrder order = gipp_order(inst);
  std::vector<ScheduleEntry> entries;
  entries.reserve(order.quanta.size());
  for (const Quantum& q : order.quanta) {
    entries.push_back(ScheduleEntry{q.job, q.offset, q.length});
  }
  return Schedule(std::move(entries), PolicyTag::Gipp, std::nullopt,
                  instance_fingerprint(inst));
}

Schedule build_rg_schedule(const Instance& predicted, const Rat& alpha) {
  if (alpha < Rat(1)) {
    fail(Err::InvalidAlpha, "RG needs alpha >= 1, got " + alpha.str());
  }
  QuantaOrder order = gipp_order(predicted);
  std::vector<Rat> attained(predicted.size(), Rat(0));
  std::vector<ScheduleEntry> entries;
  entries.reserve(order.quanta.size());
  for (const Quantum& q : order.quanta) {
    Rat length = q.length * alpha;
    entries.push_back(ScheduleEntry{q.job, attained[q.job], length});
    attained[q.job] += length;
  }
  return Schedule(std::move(entries), PolicyTag::RobustGittins, alpha,
                  instance_fingerprint(predicted));
}

CompletionResult execute(const Schedule& s, const std::vector<Rat>& realized,
                         ExecMode mode) {
  size_t n = realized.size();
  if (n < s.job_count()) {
    fail(Err::InvalidParams, "realization has fewer jobs than the schedule");
  }
  for (const Rat& p : realized) {
    if (p.sign() <= 0) {
      fail(Err::InvalidParams, "realized sizes must be positive");
    }
  }

  std::vector<Rat> attained(n, Rat(0));
  std::vector<Rat> completion(n, Rat(0));
  std::vector<bool> done(n, false);
  Rat clock(0);

  auto run = [&](size_t job, const Rat& quantum) {
    Rat remaining = realized[job] - attained[job];
    Rat slice = rgsched::min(remaining, quantum);
    clock += slice;
    attained[job] += slice;
    if (attained[job] == realized[job]) {
      done[job] = true;
      completion[job] = clock;
    }
  };

  for (const ScheduleEntry& e : s.entries()) {
    if (done[e.job]) continue;  // completed entries are skipped at zero cost
    run(e.job, e.length);
  }

  for (size_t j = 0; j < n; ++j) {
    if (done[j]) continue;
    if (mode == ExecMode::Strict) {
      fail(Err::IncompleteSchedule,
           "job " + std::to_string(j) + " unfinished after all entries (attained " +
               attained[j].str() + " of " + realized[j].str() + ")");
    }
    run(j, realized[j] - attained[j]);
  }

  CompletionResult result{std::move(completion), Rat(0)};
  for (const Rat& c : result.completion) result.total += c;
  return result;
}

}  // namespace rgsched
