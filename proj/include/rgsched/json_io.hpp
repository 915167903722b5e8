#pragma once

#include <string>
#include <vector>

#include "rgsched/evaluate.hpp"

namespace rgsched {

/// Instance files look like
///   {"jobs": [{"atoms": [["3/2", "1/2"], ["4", "1/2"]]}, ...]}
/// where sizes and probabilities are decimal or "num/den" strings (integers
/// may also appear as JSON numbers). Parsing is exact.
Instance parse_instance(const std::string& json_text);
std::string instance_to_json(const Instance& inst);

/// Realization files: {"sizes": ["3/2", "4"]} (or a bare array).
std::vector<Rat> parse_realization(const std::string& json_text);
std::string realization_to_json(const std::vector<Rat>& sizes);

Schedule parse_schedule(const std::string& json_text);
std::string schedule_to_json(const Schedule& s);

std::string completion_to_json(const CompletionResult& r);
std::string cost_report_to_json(const CostReport& r);

/// Per-job quanta as (offset, length, rank) triples.
std::string quanta_to_json(const Instance& inst);
/// The global GIPP order.
std::string order_to_json(const Instance& inst);

}  // namespace rgsched
