#include "rgsched/json_io.hpp"

#include "json.hpp"

namespace rgsched {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Err::ParseError, "malformed JSON");
  return j;
}

Rat rat_from_json(const json& v) {
  if (v.is_string()) return Rat::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_number_unsigned()) return Rat(static_cast<long>(v.get<std::uint64_t>()));
  if (v.is_number_float()) {
    fail(Err::ParseError,
         "floating-point literals are not exact; write the value as a string");
  }
  fail(Err::ParseError, "expected a number string, got " + v.dump());
}

json quantum_to_json(const Quantum& q, bool with_job) {
  json o;
  if (with_job) o["job"] = q.job;
  o["offset"] = q.offset.str();
  o["length"] = q.length.str();
  o["rank"] = q.rank.str();
  return o;
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
  json j = parse_json(json_text);
  if (!j.is_object() || !j.contains("jobs") || !j["jobs"].is_array()) {
    fail(Err::ParseError, "instance JSON must be {\"jobs\": [...]}");
  }
  std::vector<FiniteDist> jobs;
  for (const json& job : j["jobs"]) {
    if (!job.is_object() || !job.contains("atoms") || !job["atoms"].is_array()) {
      fail(Err::ParseError, "each job must be {\"atoms\": [[size, prob], ...]}");
    }
    std::vector<Atom> atoms;
    for (const json& pair : job["atoms"]) {
      if (!pair.is_array() || pair.size() != 2) {
        fail(Err::ParseError, "each atom must be a [size, prob] pair");
      }
      atoms.push_back(Atom{rat_from_json(pair[0]), rat_from_json(pair[1])});
    }
    jobs.emplace_back(std::move(atoms));
  }
  return Instance(std::move(jobs));
}

std::string instance_to_json(const Instance& inst) {
  json jobs = json::array();
  for (const FiniteDist& d : inst.jobs()) {
    json atoms = json::array();
    for (const Atom& a : d.atoms()) {
      atoms.push_back(json::array({a.size.str(), a.prob.str()}));
    }
    jobs.push_back(json{{"atoms", atoms}});
  }
  return json{{"jobs", jobs}}.dump(2);
}

std::vector<Rat> parse_realization(const std::string& json_text) {
  json j = parse_json(json_text);
  const json* arr = nullptr;
  if (j.is_array()) {
    arr = &j;
  } else if (j.is_object() && j.contains("sizes") && j["sizes"].is_array()) {
    arr = &j["sizes"];
  } else {
    fail(Err::ParseError, "realization JSON must be {\"sizes\": [...]} or an array");
  }
  std::vector<Rat> sizes;
  for (const json& v : *arr) sizes.push_back(rat_from_json(v));
  return sizes;
}

std::string realization_to_json(const std::vector<Rat>& sizes) {
  json arr = json::array();
  for (const Rat& s : sizes) arr.push_back(s.str());
  return json{{"sizes", arr}}.dump(2);
}

Schedule parse_schedule(const std::string& json_text) {
  json j = parse_json(json_text);
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    fail(Err::ParseError, "schedule JSON must contain an \"entries\" array");
  }
  PolicyTag tag = PolicyTag::Custom;
  if (j.contains("policy")) tag = policy_from_name(j["policy"].get<std::string>());
  std::optional<Rat> alpha;
  if (j.contains("alpha") && !j["alpha"].is_null()) alpha = rat_from_json(j["alpha"]);
  std::string hash;
  if (j.contains("instance_hash") && j["instance_hash"].is_string()) {
    hash = j["instance_hash"].get<std::string>();
  }
  std::vector<ScheduleEntry> entries;
  for (const json& e : j["entries"]) {
    if (!e.is_object() || !e.contains("job") || !e.contains("offset") ||
        !e.contains("length")) {
      fail(Err::ParseError, "each entry needs job, offset and length");
    }
    entries.push_back(ScheduleEntry{e["job"].get<size_t>(),
                                    rat_from_json(e["offset"]),
                                    rat_from_json(e["length"])});
  }
  return Schedule(std::move(entries), tag, std::move(alpha), std::move(hash));
}

std::string schedule_to_json(const Schedule& s) {
  json entries = json::array();
  for (const ScheduleEntry& e : s.entries()) {
    entries.push_back(json{{"job", e.job},
                           {"offset", e.offset.str()},
                           {"length", e.length.str()}});
  }
  json out{{"policy", policy_name(s.tag())}, {"entries", entries}};
  out["alpha"] = s.alpha() ? json(s.alpha()->str()) : json(nullptr);
  if (!s.instance_hash().empty()) out["instance_hash"] = s.instance_hash();
  return out.dump(2);
}

std::string completion_to_json(const CompletionResult& r) {
  json arr = json::array();
  for (const Rat& c : r.completion) arr.push_back(c.str());
  return json{{"completion", arr},
              {"total", r.total.str()},
              {"total_decimal", r.total.to_double()}}
      .dump(2);
}

std::string cost_report_to_json(const CostReport& r) {
  json out{{"method", r.method},
           {"value_decimal", r.value_decimal},
           {"runtime_ms", r.runtime_ms}};
  out["value"] = r.value ? json(r.value->str()) : json(nullptr);
  out["stderr"] = r.std_error ? json(*r.std_error) : json(nullptr);
  if (r.samples) out["samples"] = *r.samples;
  if (r.seed) out["seed"] = *r.seed;
  return out.dump(2);
}

std::string quanta_to_json(const Instance& inst) {
  json jobs = json::array();
  for (size_t j = 0; j < inst.size(); ++j) {
    json quanta = json::array();
    for (const Quantum& q : compute_quanta(inst.job(j), j)) {
      quanta.push_back(quantum_to_json(q, false));
    }
    jobs.push_back(json{{"job", j}, {"quanta", quanta}});
  }
  return json{{"jobs", jobs}}.dump(2);
}

std::string order_to_json(const Instance& inst) {
  json arr = json::array();
  for (const Quantum& q : gipp_order(inst).quanta) {
    arr.push_back(quantum_to_json(q, true));
  }
  return json{{"order", arr}}.dump(2);
}

}  // namespace rgsched
