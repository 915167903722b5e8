#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rgsched/evaluate.hpp"
#include "rgsched/generators.hpp"

namespace rgsched {

/// One row of the brittleness-gap experiment: costs of GIPP run with the
/// mispredicted quanta vs. with the true quanta on the same true instance.
struct GapRow {
  std::uint32_t n = 0;
  Rat cost_mispredicted;  // GIPP schedule of the predicted instance, under truth
  Rat cost_true;          // GIPP schedule of the true instance, under truth
  double ratio = 0.0;
  double ref_cubic = 0.0;      // first row's mispredicted cost scaled by (n/n0)^3
  double ref_quadratic = 0.0;  // first row's true cost scaled by (n/n0)^2

  friend bool operator==(const GapRow&, const GapRow&) = default;
};

struct GapReport {
  Rat eps;
  std::vector<GapRow> rows;

  friend bool operator==(const GapReport&, const GapReport&) = default;
};

GapReport gap_experiment(const std::vector<std::uint32_t>& ns, const Rat& eps);

/// One robustness trial: the four expected costs of the chain
///   RG(T,P) <= a^3 GIPP(P,P) <= a^3 RG(P,T) <= a^6 GIPP(T,T)
/// on a random alpha-close pair, with each link checked by exact comparison,
/// plus a strict-execution sweep of both RG schedules over the opposite
/// instance's product support.
struct RobustRow {
  Rat alpha;
  std::uint32_t trial = 0;
  std::uint64_t seed = 0;
  Rat rg_true_pred;     // RG(truth, predicted)
  Rat gipp_pred_pred;   // GIPP(predicted, predicted)
  Rat rg_pred_true;     // RG(predicted, truth)
  Rat gipp_true_true;   // GIPP(truth, truth)
  bool chain1_ok = false;  // RG(T,P)     <= a^3 GIPP(P,P)
  bool chain2_ok = false;  // GIPP(P,P)   <= RG(P,T)
  bool chain3_ok = false;  // RG(P,T)     <= a^3 GIPP(T,T)
  bool completion_ok = false;

  friend bool operator==(const RobustRow&, const RobustRow&) = default;
};

struct RobustReport {
  std::uint32_t trials = 0;
  std::uint32_t jobs = 0;
  std::uint64_t master_seed = 0;
  std::vector<RobustRow> rows;
  std::size_t violations = 0;

  friend bool operator==(const RobustReport&, const RobustReport&) = default;
};

RobustReport robustness_experiment(std::uint32_t trials, const std::vector<Rat>& alphas,
                                   std::uint32_t jobs, const RandomInstanceParams& params,
                                   std::uint64_t master_seed);

bool has_violations(const RobustReport& report);

// Reports serialize to JSON (round-trippable) and to CSV with a stable
// column order; rationals appear both exactly and as decimals with the given
// precision.
std::string gap_report_to_json(const GapReport& report);
GapReport gap_report_from_json(const std::string& json_text);
std::string gap_report_to_csv(const GapReport& report, int precision);

std::string robust_report_to_json(const RobustReport& report);
RobustReport robust_report_from_json(const std::string& json_text);
std::string robust_report_to_csv(const RobustReport& report, int precision);

}  // namespace rgsched
