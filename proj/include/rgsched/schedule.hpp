#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rgsched/gittins.hpp"

namespace rgsched {

struct ScheduleEntry {
  size_t job;
  Rat offset;
  Rat length;

  friend bool operator==(const ScheduleEntry& a, const ScheduleEntry& b) {
    return a.job == b.job && a.offset == b.offset && a.length == b.length;
  }
};

enum class PolicyTag { Gipp, RobustGittins, Custom };

const char* policy_name(PolicyTag tag);
PolicyTag policy_from_name(const std::string& name);

/// A fixed, globally ordered list of run-until-min(length, completion)
/// entries. Per-job offsets are validated to be the running sums of that
/// job's earlier entry lengths.
class Schedule {
 public:
  Schedule(std::vector<ScheduleEntry> entries, PolicyTag tag,
           std::optional<Rat> alpha = std::nullopt,
           std::string instance_hash = {});

  const std::vector<ScheduleEntry>& entries() const { return entries_; }
  PolicyTag tag() const { return tag_; }
  const std::optional<Rat>& alpha() const { return alpha_; }
  const std::string& instance_hash() const { return instance_hash_; }

  /// One past the largest referenced job index.
  size_t job_count() const { return job_count_; }

  /// Sum of entry lengths for one job (zero when it has no entries).
  Rat total_length(size_t job) const;

 private:
  std::vector<ScheduleEntry> entries_;
  PolicyTag tag_;
  std::optional<Rat> alpha_;
  std::string instance_hash_;
  size_t job_count_ = 0;
};

/// The GIPP order of the instance's quanta, run as-is.
Schedule build_gipp_schedule(const Instance& inst);

/// Same entry order as GIPP on the predicted instance, every length
/// multiplied by alpha and offsets recomputed as running sums.
Schedule build_rg_schedule(const Instance& predicted, const Rat& alpha);

enum class ExecMode { Strict, Fallback };

struct CompletionResult {
  std::vector<Rat> completion;  // C_j per job
  Rat total;                    // sum of completions
};

/// Simulates the schedule against one realized size per job. Strict mode
/// fails with IncompleteSchedule when the entries do not cover some
/// realization; fallback mode appends run-to-completion entries in job-index
/// order instead.
CompletionResult execute(const Schedule& s, const std::vector<Rat>& realized,
                         ExecMode mode);

}  // namespace rgsched
