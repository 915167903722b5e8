#include "rgsched/experiments.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace rgsched {

using nlohmann::json;

GapReport gap_experiment(const std::vector<std::uint32_t>& ns, const Rat& eps) {
  GapReport report;
  report.eps = eps;
  for (std::uint32_t n : ns) {
    auto [truth, predicted] = lower_bound_pair(n, eps);
    GapRow row;
    row.n = n;
    row.cost_mispredicted = expected_cost_closed_form(build_gipp_schedule(predicted), truth);
    row.cost_true = expected_cost_closed_form(build_gipp_schedule(truth), truth);
    row.ratio = (row.cost_mispredicted / row.cost_true).to_double();
    report.rows.push_back(std::move(row));
  }
  if (!report.rows.empty()) {
    const GapRow& base = report.rows.front();
    double n0 = base.n;
    double a0 = base.cost_mispredicted.to_double();
    double b0 = base.cost_true.to_double();
    for (GapRow& row : report.rows) {
      double scale = static_cast<double>(row.n) / n0;
      row.ref_cubic = a0 * scale * scale * scale;
      row.ref_quadratic = b0 * scale * scale;
    }
  }
  return report;
}

namespace {

// Strict execution of `s` over every realization in truth's product support.
bool completes_everywhere(const Schedule& s, const Instance& truth) {
  size_t n = truth.size();
  std::vector<size_t> idx(n, 0);
  std::vector<Rat> realized(n);
  while (true) {
    for (size_t j = 0; j < n; ++j) {
      realized[j] = truth.job(j).atoms()[idx[j]].size;
    }
    try {
      execute(s, realized, ExecMode::Strict);
    } catch (const RgError& e) {
      if (e.code() == Err::IncompleteSchedule) return false;
      throw;
    }
    size_t j = 0;
    while (j < n && ++idx[j] == truth.job(j).support_size()) {
      idx[j] = 0;
      ++j;
    }
    if (j == n) return true;
  }
}

}  // namespace

RobustReport robustness_experiment(std::uint32_t trials, const std::vector<Rat>& alphas,
                                   std::uint32_t jobs, const RandomInstanceParams& params,
                                   std::uint64_t master_seed) {
  if (trials < 1) fail(Err::InvalidParams, "need at least 1 trial");
  RobustReport report;
  report.trials = trials;
  report.jobs = jobs;
  report.master_seed = master_seed;

  for (size_t ai = 0; ai < alphas.size(); ++ai) {
    const Rat& alpha = alphas[ai];
    const Rat alpha3 = alpha * alpha * alpha;
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
      RobustRow row;
      row.alpha = alpha;
      row.trial = trial;
      row.seed = derive_seed(master_seed, (static_cast<std::uint64_t>(ai) << 32) | trial);
      Rng rng(row.seed);

      auto [truth, predicted] = alpha_close_pair(jobs, alpha, params, rng);
      Schedule rg_from_pred = build_rg_schedule(predicted, alpha);
      Schedule rg_from_truth = build_rg_schedule(truth, alpha);

      row.rg_true_pred = expected_cost_closed_form(rg_from_pred, truth);
      row.gipp_pred_pred = expected_cost_closed_form(build_gipp_schedule(predicted), predicted);
      row.rg_pred_true = expected_cost_closed_form(rg_from_truth, predicted);
      row.gipp_true_true = expected_cost_closed_form(build_gipp_schedule(truth), truth);

      row.chain1_ok = row.rg_true_pred <= alpha3 * row.gipp_pred_pred;
      row.chain2_ok = row.gipp_pred_pred <= row.rg_pred_true;
      row.chain3_ok = row.rg_pred_true <= alpha3 * row.gipp_true_true;
      row.completion_ok = completes_everywhere(rg_from_pred, truth) &&
                          completes_everywhere(rg_from_truth, predicted);

      if (!(row.chain1_ok && row.chain2_ok && row.chain3_ok && row.completion_ok)) {
        ++report.violations;
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

bool has_violations(const RobustReport& report) { return report.violations > 0; }

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Err::ParseError, "malformed JSON report");
  return j;
}

std::string csv_double(double v, int precision) {
  std::ostringstream out;
  out.precision(precision);
  out << v;
  return out.str();
}

}  // namespace

std::string gap_report_to_json(const GapReport& report) {
  json rows = json::array();
  for (const GapRow& r : report.rows) {
    rows.push_back(json{{"n", r.n},
                        {"cost_mispredicted", r.cost_mispredicted.str()},
                        {"cost_true", r.cost_true.str()},
                        {"ratio", r.ratio},
                        {"ref_cubic", r.ref_cubic},
                        {"ref_quadratic", r.ref_quadratic}});
  }
  return json{{"kind", "gap"}, {"eps", report.eps.str()}, {"rows", rows}}.dump(2);
}

GapReport gap_report_from_json(const std::string& json_text) {
  json j = parse_json(json_text);
  if (!j.is_object() || j.value("kind", "") != "gap") {
    fail(Err::ParseError, "not a gap report");
  }
  GapReport report;
  report.eps = Rat::parse(j.at("eps").get<std::string>());
  for (const json& r : j.at("rows")) {
    GapRow row;
    row.n = r.at("n").get<std::uint32_t>();
    row.cost_mispredicted = Rat::parse(r.at("cost_mispredicted").get<std::string>());
    row.cost_true = Rat::parse(r.at("cost_true").get<std::string>());
    row.ratio = r.at("ratio").get<double>();
    row.ref_cubic = r.at("ref_cubic").get<double>();
    row.ref_quadratic = r.at("ref_quadratic").get<double>();
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string gap_report_to_csv(const GapReport& report, int precision) {
  std::string out =
      "n,cost_mispredicted,cost_mispredicted_decimal,cost_true,cost_true_decimal,"
      "ratio,ref_cubic,ref_quadratic\n";
  for (const GapRow& r : report.rows) {
    out += std::to_string(r.n) + ',' + r.cost_mispredicted.str() + ',' +
           r.cost_mispredicted.decimal(precision) + ',' + r.cost_true.str() + ',' +
           r.cost_true.decimal(precision) + ',' + csv_double(r.ratio, precision) + ',' +
           csv_double(r.ref_cubic, precision) + ',' +
           csv_double(r.ref_quadratic, precision) + '\n';
  }
  return out;
}

std::string robust_report_to_json(const RobustReport& report) {
  json rows = json::array();
  for (const RobustRow& r : report.rows) {
    rows.push_back(json{{"alpha", r.alpha.str()},
                        {"trial", r.trial},
                        {"seed", r.seed},
                        {"rg_true_pred", r.rg_true_pred.str()},
                        {"gipp_pred_pred", r.gipp_pred_pred.str()},
                        {"rg_pred_true", r.rg_pred_true.str()},
                        {"gipp_true_true", r.gipp_true_true.str()},
                        {"chain1_ok", r.chain1_ok},
                        {"chain2_ok", r.chain2_ok},
                        {"chain3_ok", r.chain3_ok},
                        {"completion_ok", r.completion_ok}});
  }
  return json{{"kind", "robust"},
              {"trials", report.trials},
              {"jobs", report.jobs},
              {"master_seed", report.master_seed},
              {"violations", report.violations},
              {"rows", rows}}
      .dump(2);
}

RobustReport robust_report_from_json(const std::string& json_text) {
  json j = parse_json(json_text);
  if (!j.is_object() || j.value("kind", "") != "robust") {
    fail(Err::ParseError, "not a robustness report");
  }
  RobustReport report;
  report.trials = j.at("trials").get<std::uint32_t>();
  report.jobs = j.at("jobs").get<std::uint32_t>();
  report.master_seed = j.at("master_seed").get<std::uint64_t>();
  report.violations = j.at("violations").get<std::size_t>();
  for (const json& r : j.at("rows")) {
    RobustRow row;
    row.alpha = Rat::parse(r.at("alpha").get<std::string>());
    row.trial = r.at("trial").get<std::uint32_t>();
    row.seed = r.at("seed").get<std::uint64_t>();
    row.rg_true_pred = Rat::parse(r.at("rg_true_pred").get<std::string>());
    row.gipp_pred_pred = Rat::parse(r.at("gipp_pred_pred").get<std::string>());
    row.rg_pred_true = Rat::parse(r.at("rg_pred_true").get<std::string>());
    row.gipp_true_true = Rat::parse(r.at("gipp_true_true").get<std::string>());
    row.chain1_ok = r.at("chain1_ok").get<bool>();
    row.chain2_ok = r.at("chain2_ok").get<bool>();
    row.chain3_ok = r.at("chain3_ok").get<bool>();
    row.completion_ok = r.at("completion_ok").get<bool>();
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string robust_report_to_csv(const RobustReport& report, int precision) {
  std::string out =
      "alpha,trial,seed,rg_true_pred,rg_true_pred_decimal,gipp_pred_pred,"
      "gipp_pred_pred_decimal,rg_pred_true,rg_pred_true_decimal,gipp_true_true,"
      "gipp_true_true_decimal,chain1_ok,chain2_ok,chain3_ok,completion_ok\n";
  for (const RobustRow& r : report.rows) {
    out += r.alpha.str() + ',' + std::to_string(r.trial) + ',' + std::to_string(r.seed) +
           ',' + r.rg_true_pred.str() + ',' + r.rg_true_pred.decimal(precision) + ',' +
           r.gipp_pred_pred.str() + ',' + r.gipp_pred_pred.decimal(precision) + ',' +
           r.rg_pred_true.str() + ',' + r.rg_pred_true.decimal(precision) + ',' +
           r.gipp_true_true.str() + ',' + r.gipp_true_true.decimal(precision) + ',' +
           (r.chain1_ok ? "1" : "0") + ',' + (r.chain2_ok ? "1" : "0") + ',' +
           (r.chain3_ok ? "1" : "0") + ',' + (r.completion_ok ? "1" : "0") + '\n';
  }
  return out;
}

}  // namespace rgsched
