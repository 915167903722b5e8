#include "rgsched.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <string>

#include "rgsched/experiments.hpp"
#include "rgsched/json_io.hpp"

using namespace rgsched;

struct rg_instance {
  Instance value;
};

struct rg_schedule {
  Schedule value;
};

namespace {

thread_local std::string g_last_error;

int status_of(Err e) {
  switch (e) {
    case Err::Ok: return RG_OK;
    case Err::InvalidParams: return RG_ERR_INVALID_PARAMS;
    case Err::ParseError: return RG_ERR_PARSE;
    case Err::InvalidDistribution: return RG_ERR_INVALID_DISTRIBUTION;
    case Err::InvalidAlpha: return RG_ERR_INVALID_ALPHA;
    case Err::ConditionOnZeroEvent: return RG_ERR_CONDITION_ON_ZERO_EVENT;
    case Err::NotCloseForAnyAlpha: return RG_ERR_NOT_CLOSE_FOR_ANY_ALPHA;
    case Err::UnsupportedPair: return RG_ERR_UNSUPPORTED_PAIR;
    case Err::ShiftOutOfRange: return RG_ERR_SHIFT_OUT_OF_RANGE;
    case Err::MassNotNormalized: return RG_ERR_MASS_NOT_NORMALIZED;
    case Err::GenerationFailed: return RG_ERR_GENERATION_FAILED;
    case Err::OrderInversion: return RG_ERR_ORDER_INVERSION;
    case Err::IncompleteSchedule: return RG_ERR_INCOMPLETE_SCHEDULE;
    case Err::ScheduleDoesNotCover: return RG_ERR_SCHEDULE_DOES_NOT_COVER;
    case Err::StateSpaceTooLarge: return RG_ERR_STATE_SPACE_TOO_LARGE;
    case Err::Internal: return RG_ERR_INTERNAL;
  }
  return RG_ERR_INTERNAL;
}

template <typename F>
int guarded(F&& fn) {
  try {
    fn();
    return RG_OK;
  } catch (const RgError& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RG_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return RG_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) fail(Err::InvalidParams, what);
}

Rat parse_rat_arg(const char* text, const char* what) {
  require(text != nullptr, what);
  return Rat::parse(text);
}

CostReport timed_report(std::string method, const Schedule* s, const Instance& truth,
                        uint64_t samples, uint64_t seed, uint64_t cap) {
  CostReport report;
  report.method = method;
  auto start = std::chrono::steady_clock::now();
  if (method == "closed-form") {
    report.value = expected_cost_closed_form(*s, truth);
  } else if (method == "enumeration") {
    report.value = expected_cost_enumeration(*s, truth, cap);
  } else if (method == "monte-carlo") {
    MonteCarloResult mc = monte_carlo_cost(*s, truth, samples, seed);
    report.value_decimal = mc.estimate;
    report.std_error = mc.std_error;
    report.samples = mc.samples;
    report.seed = seed;
  } else if (method == "dp-opt") {
    report.value = brute_force_opt(truth, cap);
  } else {
    fail(Err::InvalidParams, "unknown method '" + method + "'");
  }
  auto end = std::chrono::steady_clock::now();
  if (report.value) report.value_decimal = report.value->to_double();
  report.runtime_ms = std::chrono::duration<double, std::milli>(end - start).count();
  return report;
}

}  // namespace

extern "C" {

const char* rg_version(void) { return "0.1.0"; }

const char* rg_status_name(int status) {
  switch (status) {
    case RG_OK: return "ok";
    case RG_ERR_INVALID_PARAMS: return "invalid-params";
    case RG_ERR_PARSE: return "parse-error";
    case RG_ERR_INVALID_DISTRIBUTION: return "invalid-distribution";
    case RG_ERR_INVALID_ALPHA: return "invalid-alpha";
    case RG_ERR_CONDITION_ON_ZERO_EVENT: return "condition-on-zero-event";
    case RG_ERR_NOT_CLOSE_FOR_ANY_ALPHA: return "not-close-for-any-alpha";
    case RG_ERR_UNSUPPORTED_PAIR: return "unsupported-pair";
    case RG_ERR_SHIFT_OUT_OF_RANGE: return "shift-out-of-range";
    case RG_ERR_MASS_NOT_NORMALIZED: return "mass-not-normalized";
    case RG_ERR_GENERATION_FAILED: return "generation-failed";
    case RG_ERR_ORDER_INVERSION: return "order-inversion";
    case RG_ERR_INCOMPLETE_SCHEDULE: return "incomplete-schedule";
    case RG_ERR_SCHEDULE_DOES_NOT_COVER: return "schedule-does-not-cover";
    case RG_ERR_STATE_SPACE_TOO_LARGE: return "state-space-too-large";
    case RG_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* rg_last_error(void) { return g_last_error.c_str(); }

void rg_string_free(char* s) { std::free(s); }

int rg_instance_from_json(const char* json, rg_instance** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = new rg_instance{parse_instance(json)};
  });
}

int rg_instance_to_json(const rg_instance* inst, char** out_json) {
  return guarded([&] {
    require(inst && out_json, "null argument");
    *out_json = dup_string(instance_to_json(inst->value));
  });
}

int rg_instance_job_count(const rg_instance* inst, size_t* out) {
  return guarded([&] {
    require(inst && out, "null argument");
    *out = inst->value.size();
  });
}

void rg_instance_free(rg_instance* inst) { delete inst; }

int rg_check_close(const rg_instance* a, const rg_instance* b, const char* alpha,
                   int* out_close) {
  return guarded([&] {
    require(a && b && out_close, "null argument");
    *out_close = is_alpha_close(a->value, b->value, parse_rat_arg(alpha, "null alpha")) ? 1 : 0;
  });
}

int rg_min_alpha(const rg_instance* a, const rg_instance* b, const char* tol,
                 double* out_alpha) {
  return guarded([&] {
    require(a && b && out_alpha, "null argument");
    *out_alpha =
        minimal_alpha(a->value, b->value, parse_rat_arg(tol, "null tol")).to_double();
  });
}

int rg_quanta_json(const rg_instance* inst, char** out_json) {
  return guarded([&] {
    require(inst && out_json, "null argument");
    *out_json = dup_string(quanta_to_json(inst->value));
  });
}

int rg_order_json(const rg_instance* inst, char** out_json) {
  return guarded([&] {
    require(inst && out_json, "null argument");
    *out_json = dup_string(order_to_json(inst->value));
  });
}

int rg_schedule_build(const rg_instance* inst, const char* policy, const char* alpha,
                      rg_schedule** out) {
  return guarded([&] {
    require(inst && policy && out, "null argument");
    std::string p = policy;
    if (p == "gipp") {
      *out = new rg_schedule{build_gipp_schedule(inst->value)};
    } else if (p == "rg") {
      *out = new rg_schedule{
          build_rg_schedule(inst->value, parse_rat_arg(alpha, "rg policy needs alpha"))};
    } else {
      fail(Err::InvalidParams, "policy must be \"gipp\" or \"rg\"");
    }
  });
}

int rg_schedule_from_json(const char* json, rg_schedule** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = new rg_schedule{parse_schedule(json)};
  });
}

int rg_schedule_to_json(const rg_schedule* s, char** out_json) {
  return guarded([&] {
    require(s && out_json, "null argument");
    *out_json = dup_string(schedule_to_json(s->value));
  });
}

void rg_schedule_free(rg_schedule* s) { delete s; }

int rg_execute_json(const rg_schedule* s, const char* realization_json, int fallback,
                    char** out_json) {
  return guarded([&] {
    require(s && realization_json && out_json, "null argument");
    auto realized = parse_realization(realization_json);
    auto result =
        execute(s->value, realized, fallback ? ExecMode::Fallback : ExecMode::Strict);
    *out_json = dup_string(completion_to_json(result));
  });
}

int rg_evaluate_json(const rg_schedule* s, const rg_instance* truth, const char* method,
                     uint64_t samples, uint64_t seed, uint64_t cap, char** out_json) {
  return guarded([&] {
    require(s && truth && method && out_json, "null argument");
    std::string m = method;
    if (m == "closed") m = "closed-form";
    if (m == "enum") m = "enumeration";
    if (m == "mc") m = "monte-carlo";
    *out_json = dup_string(
        cost_report_to_json(timed_report(m, &s->value, truth->value, samples, seed, cap)));
  });
}

int rg_opt_json(const rg_instance* inst, uint64_t cap, char** out_json) {
  return guarded([&] {
    require(inst && out_json, "null argument");
    *out_json = dup_string(
        cost_report_to_json(timed_report("dp-opt", nullptr, inst->value, 0, 0, cap)));
  });
}

int rg_gen_lower_bound(uint32_t n, const char* eps, rg_instance** out_truth,
                       rg_instance** out_predicted) {
  return guarded([&] {
    require(out_truth && out_predicted, "null argument");
    auto [truth, predicted] = lower_bound_pair(n, parse_rat_arg(eps, "null eps"));
    *out_truth = new rg_instance{std::move(truth)};
    *out_predicted = new rg_instance{std::move(predicted)};
  });
}

int rg_gen_random(uint32_t n, uint32_t max_atoms, uint32_t size_cap, uint64_t seed,
                  rg_instance** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    RandomInstanceParams params;
    if (max_atoms) params.max_atoms = max_atoms;
    if (size_cap) params.size_cap = size_cap;
    Rng rng(seed);
    *out = new rg_instance{random_instance(n, params, rng)};
  });
}

int rg_gen_close_pair(uint32_t n, const char* alpha, uint32_t max_atoms,
                      uint32_t size_cap, uint64_t seed, rg_instance** out_truth,
                      rg_instance** out_predicted) {
  return guarded([&] {
    require(out_truth && out_predicted, "null argument");
    RandomInstanceParams params;
    if (max_atoms) params.max_atoms = max_atoms;
    if (size_cap) params.size_cap = size_cap;
    Rng rng(seed);
    auto [truth, predicted] =
        alpha_close_pair(n, parse_rat_arg(alpha, "null alpha"), params, rng);
    *out_truth = new rg_instance{std::move(truth)};
    *out_predicted = new rg_instance{std::move(predicted)};
  });
}

int rg_gap_experiment(const uint32_t* ns, size_t ns_len, const char* eps,
                      char** out_report_json) {
  return guarded([&] {
    require(out_report_json && (ns || ns_len == 0), "null argument");
    std::vector<uint32_t> ns_vec(ns, ns + ns_len);
    *out_report_json =
        dup_string(gap_report_to_json(gap_experiment(ns_vec, parse_rat_arg(eps, "null eps"))));
  });
}

int rg_robust_experiment(uint32_t trials, const char* const* alphas, size_t alphas_len,
                         uint32_t jobs, uint32_t max_atoms, uint32_t size_cap,
                         uint64_t seed, char** out_report_json) {
  return guarded([&] {
    require(out_report_json && alphas && alphas_len > 0, "null argument");
    std::vector<Rat> alpha_vec;
    for (size_t i = 0; i < alphas_len; ++i) {
      alpha_vec.push_back(parse_rat_arg(alphas[i], "null alpha"));
    }
    RandomInstanceParams params;
    if (max_atoms) params.max_atoms = max_atoms;
    if (size_cap) params.size_cap = size_cap;
    *out_report_json = dup_string(robust_report_to_json(
        robustness_experiment(trials, alpha_vec, jobs, params, seed)));
  });
}

int rg_report_csv(const char* report_json, int precision, char** out_csv) {
  return guarded([&] {
    require(report_json && out_csv, "null argument");
    std::string text = report_json;
    try {
      *out_csv = dup_string(gap_report_to_csv(gap_report_from_json(text), precision));
    } catch (const RgError& e) {
      if (e.code() != Err::ParseError) throw;
      *out_csv = dup_string(robust_report_to_csv(robust_report_from_json(text), precision));
    }
  });
}

int rg_report_violations(const char* report_json, uint64_t* out) {
  return guarded([&] {
    require(report_json && out, "null argument");
    std::string text = report_json;
    try {
      gap_report_from_json(text);
      *out = 0;
    } catch (const RgError& e) {
      if (e.code() != Err::ParseError) throw;
      *out = robust_report_from_json(text).violations;
    }
  });
}

}  // extern "C"
