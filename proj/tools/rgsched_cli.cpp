// Command-line front end for the rgsched shared library. Talks to the
// library exclusively through the C interface in rgsched.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rgsched.h"

namespace {

[[noreturn]] void die(int status) {
  std::cerr << "error: " << rg_last_error() << " [" << rg_status_name(status) << "]\n";
  std::exit(2);
}

void check(int status) {
  if (status != RG_OK) die(status);
}

struct StringDeleter {
  void operator()(char* s) const { rg_string_free(s); }
};
using CStr = std::unique_ptr<char, StringDeleter>;

struct InstanceDeleter {
  void operator()(rg_instance* p) const { rg_instance_free(p); }
};
using InstancePtr = std::unique_ptr<rg_instance, InstanceDeleter>;

struct ScheduleDeleter {
  void operator()(rg_schedule* p) const { rg_schedule_free(p); }
};
using SchedulePtr = std::unique_ptr<rg_schedule, ScheduleDeleter>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    std::exit(2);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    std::exit(2);
  }
  out << text;
}

InstancePtr load_instance(const std::string& path) {
  rg_instance* inst = nullptr;
  check(rg_instance_from_json(read_file(path).c_str(), &inst));
  return InstancePtr(inst);
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gittins-index scheduling with predicted job size distributions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rg_version()));

  // check-close
  std::string cc_alpha, cc_a, cc_b;
  auto* cc = app.add_subcommand("check-close",
                                "Exit 0 iff the two instances are alpha-close per job");
  cc->add_option("--alpha", cc_alpha, "closeness parameter (>= 1)")->required();
  cc->add_option("a", cc_a, "first instance JSON file")->required();
  cc->add_option("b", cc_b, "second instance JSON file")->required();

  // min-alpha
  std::string ma_a, ma_b, ma_tol = "1e-7";
  auto* ma = app.add_subcommand("min-alpha",
                                "Print the smallest alpha making the pair alpha-close");
  ma->add_option("a", ma_a)->required();
  ma->add_option("b", ma_b)->required();
  ma->add_option("--tol", ma_tol, "bisection tolerance (default 1e-7)");

  // quanta / order
  std::string q_inst, q_out;
  auto* quanta = app.add_subcommand("quanta", "Per-job quanta as (offset, length, rank)");
  quanta->add_option("instance", q_inst)->required();
  quanta->add_option("--out", q_out, "output file (default stdout)");

  std::string ord_inst, ord_out;
  auto* order = app.add_subcommand("order", "Global priority order over all quanta");
  order->add_option("instance", ord_inst)->required();
  order->add_option("--out", ord_out);

  // schedule
  std::string sch_policy = "gipp", sch_alpha, sch_inst, sch_out;
  auto* schedule = app.add_subcommand("schedule", "Build a gipp or rg schedule");
  schedule->add_option("--policy", sch_policy, "gipp | rg")->required();
  schedule->add_option("--alpha", sch_alpha, "error parameter for rg");
  schedule->add_option("predicted", sch_inst, "predicted instance JSON file")->required();
  schedule->add_option("--out", sch_out);

  // run
  std::string run_sched, run_real, run_out;
  bool run_fallback = false;
  auto* run = app.add_subcommand("run", "Execute a schedule against realized sizes");
  run->add_option("schedule", run_sched)->required();
  run->add_option("realization", run_real)->required();
  run->add_flag("--fallback", run_fallback,
                "append run-to-completion entries instead of failing");
  run->add_option("--out", run_out);

  // evaluate
  std::string ev_method = "closed", ev_sched, ev_truth, ev_out;
  std::uint64_t ev_samples = 100000, ev_seed = 1, ev_cap = 0;
  auto* evaluate = app.add_subcommand("evaluate", "Expected total completion time");
  evaluate->add_option("--method", ev_method, "closed | enum | mc")->required();
  evaluate->add_option("--samples", ev_samples, "Monte Carlo sample count");
  evaluate->add_option("--seed", ev_seed, "Monte Carlo seed");
  evaluate->add_option("--cap", ev_cap, "override oracle size caps");
  evaluate->add_option("--schedule", ev_sched)->required();
  evaluate->add_option("--truth", ev_truth)->required();
  evaluate->add_option("--out", ev_out);

  // opt
  std::string opt_inst, opt_out;
  std::uint64_t opt_cap = 0;
  auto* opt = app.add_subcommand("opt", "Optimal expected cost (exact DP oracle)");
  opt->add_option("instance", opt_inst)->required();
  opt->add_option("--cap", opt_cap, "override DP state cap");
  opt->add_option("--out", opt_out);

  // gen
  auto* gen = app.add_subcommand("gen", "Instance generators");
  gen->require_subcommand(1);

  std::uint32_t lb_n = 8;
  std::string lb_eps = "0.1", lb_truth, lb_pred;
  auto* lb = gen->add_subcommand("lower-bound", "The brittleness family (p=1/n, M=n^2)");
  lb->add_option("--n", lb_n, "job count (>= 2)")->required();
  lb->add_option("--eps", lb_eps, "eps in (0,1)");
  lb->add_option("--out-truth", lb_truth)->required();
  lb->add_option("--out-pred", lb_pred)->required();

  std::uint32_t rnd_n = 3, rnd_atoms = 3, rnd_sizes = 8;
  std::uint64_t rnd_seed = 1;
  std::string rnd_out;
  auto* rnd = gen->add_subcommand("random", "Random canonical instance");
  rnd->add_option("--n", rnd_n)->required();
  rnd->add_option("--max-atoms", rnd_atoms);
  rnd->add_option("--size-cap", rnd_sizes);
  rnd->add_option("--seed", rnd_seed);
  rnd->add_option("--out", rnd_out)->required();

  std::uint32_t cp_n = 3, cp_atoms = 3, cp_sizes = 8;
  std::uint64_t cp_seed = 1;
  std::string cp_alpha, cp_truth, cp_pred;
  auto* cp = gen->add_subcommand("close-pair", "Random instance plus alpha-close perturbation");
  cp->add_option("--alpha", cp_alpha)->required();
  cp->add_option("--n", cp_n)->required();
  cp->add_option("--max-atoms", cp_atoms);
  cp->add_option("--size-cap", cp_sizes);
  cp->add_option("--seed", cp_seed);
  cp->add_option("--out-truth", cp_truth)->required();
  cp->add_option("--out-pred", cp_pred)->required();

  // gap
  std::string gap_ns = "8,16,32,64", gap_eps = "0.1", gap_csv, gap_json;
  int gap_precision = 12;
  auto* gap = app.add_subcommand("gap", "Brittleness gap experiment (exact closed form)");
  gap->add_option("--ns", gap_ns, "comma-separated job counts");
  gap->add_option("--eps", gap_eps);
  gap->add_option("--out", gap_csv, "CSV output file");
  gap->add_option("--json", gap_json, "JSON report output file");
  gap->add_option("--precision", gap_precision, "decimal digits in CSV");

  // robust
  std::string rb_alphas = "1.01,1.1,1.5,2", rb_csv, rb_json;
  std::uint32_t rb_trials = 100, rb_n = 3, rb_atoms = 3, rb_sizes = 8;
  std::uint64_t rb_seed = 7;
  int rb_precision = 12;
  auto* robust = app.add_subcommand("robust", "Robustness bound experiment (exact checks)");
  robust->add_option("--alphas", rb_alphas, "comma-separated alpha values");
  robust->add_option("--trials", rb_trials);
  robust->add_option("--seed", rb_seed);
  robust->add_option("--n", rb_n, "jobs per trial");
  robust->add_option("--max-atoms", rb_atoms);
  robust->add_option("--size-cap", rb_sizes);
  robust->add_option("--out", rb_csv, "CSV output file");
  robust->add_option("--json", rb_json, "JSON report output file");
  robust->add_option("--precision", rb_precision);

  CLI11_PARSE(app, argc, argv);

  if (cc->parsed()) {
    InstancePtr a = load_instance(cc_a), b = load_instance(cc_b);
    int close = 0;
    check(rg_check_close(a.get(), b.get(), cc_alpha.c_str(), &close));
    std::cout << (close ? "close" : "not-close") << '\n';
    return close ? 0 : 1;
  }

  if (ma->parsed()) {
    InstancePtr a = load_instance(ma_a), b = load_instance(ma_b);
    double alpha = 0.0;
    check(rg_min_alpha(a.get(), b.get(), ma_tol.c_str(), &alpha));
    std::printf("%.9f\n", alpha);
    return 0;
  }

  if (quanta->parsed()) {
    InstancePtr inst = load_instance(q_inst);
    char* out = nullptr;
    check(rg_quanta_json(inst.get(), &out));
    write_output(q_out, CStr(out).get());
    return 0;
  }

  if (order->parsed()) {
    InstancePtr inst = load_instance(ord_inst);
    char* out = nullptr;
    check(rg_order_json(inst.get(), &out));
    write_output(ord_out, CStr(out).get());
    return 0;
  }

  if (schedule->parsed()) {
    InstancePtr inst = load_instance(sch_inst);
    rg_schedule* sched = nullptr;
    check(rg_schedule_build(inst.get(), sch_policy.c_str(),
                            sch_alpha.empty() ? nullptr : sch_alpha.c_str(), &sched));
    SchedulePtr holder(sched);
    char* out = nullptr;
    check(rg_schedule_to_json(sched, &out));
    write_output(sch_out, CStr(out).get());
    return 0;
  }

  if (run->parsed()) {
    rg_schedule* sched = nullptr;
    check(rg_schedule_from_json(read_file(run_sched).c_str(), &sched));
    SchedulePtr holder(sched);
    char* out = nullptr;
    check(rg_execute_json(sched, read_file(run_real).c_str(), run_fallback ? 1 : 0, &out));
    write_output(run_out, CStr(out).get());
    return 0;
  }

  if (evaluate->parsed()) {
    rg_schedule* sched = nullptr;
    check(rg_schedule_from_json(read_file(ev_sched).c_str(), &sched));
    SchedulePtr holder(sched);
    InstancePtr truth = load_instance(ev_truth);
    char* out = nullptr;
    check(rg_evaluate_json(sched, truth.get(), ev_method.c_str(), ev_samples, ev_seed,
                           ev_cap, &out));
    write_output(ev_out, CStr(out).get());
    return 0;
  }

  if (opt->parsed()) {
    InstancePtr inst = load_instance(opt_inst);
    char* out = nullptr;
    check(rg_opt_json(inst.get(), opt_cap, &out));
    write_output(opt_out, CStr(out).get());
    return 0;
  }

  if (lb->parsed()) {
    rg_instance *truth = nullptr, *pred = nullptr;
    check(rg_gen_lower_bound(lb_n, lb_eps.c_str(), &truth, &pred));
    InstancePtr th(truth), ph(pred);
    char *tj = nullptr, *pj = nullptr;
    check(rg_instance_to_json(truth, &tj));
    write_output(lb_truth, CStr(tj).get());
    check(rg_instance_to_json(pred, &pj));
    write_output(lb_pred, CStr(pj).get());
    return 0;
  }

  if (rnd->parsed()) {
    rg_instance* inst = nullptr;
    check(rg_gen_random(rnd_n, rnd_atoms, rnd_sizes, rnd_seed, &inst));
    InstancePtr holder(inst);
    char* out = nullptr;
    check(rg_instance_to_json(inst, &out));
    write_output(rnd_out, CStr(out).get());
    return 0;
  }

  if (cp->parsed()) {
    rg_instance *truth = nullptr, *pred = nullptr;
    check(rg_gen_close_pair(cp_n, cp_alpha.c_str(), cp_atoms, cp_sizes, cp_seed, &truth,
                            &pred));
    InstancePtr th(truth), ph(pred);
    char *tj = nullptr, *pj = nullptr;
    check(rg_instance_to_json(truth, &tj));
    write_output(cp_truth, CStr(tj).get());
    check(rg_instance_to_json(pred, &pj));
    write_output(cp_pred, CStr(pj).get());
    return 0;
  }

  if (gap->parsed()) {
    std::vector<std::uint32_t> ns;
    for (const std::string& s : split_csv(gap_ns)) {
      ns.push_back(static_cast<std::uint32_t>(std::stoul(s)));
    }
    char* report = nullptr;
    check(rg_gap_experiment(ns.data(), ns.size(), gap_eps.c_str(), &report));
    CStr report_holder(report);
    if (!gap_json.empty()) write_output(gap_json, report);
    char* csv = nullptr;
    check(rg_report_csv(report, gap_precision, &csv));
    write_output(gap_csv, CStr(csv).get());
    return 0;
  }

  if (robust->parsed()) {
    std::vector<std::string> alpha_strings = split_csv(rb_alphas);
    std::vector<const char*> alphas;
    for (const std::string& s : alpha_strings) alphas.push_back(s.c_str());
    char* report = nullptr;
    check(rg_robust_experiment(rb_trials, alphas.data(), alphas.size(), rb_n, rb_atoms,
                               rb_sizes, rb_seed, &report));
    CStr report_holder(report);
    if (!rb_json.empty()) write_output(rb_json, report);
    char* csv = nullptr;
    check(rg_report_csv(report, rb_precision, &csv));
    write_output(rb_csv, CStr(csv).get());
    std::uint64_t violations = 0;
    check(rg_report_violations(report, &violations));
    if (violations > 0) {
      std::cerr << violations << " bound violation(s) detected\n";
      return 1;
    }
    return 0;
  }

  return 0;
}
