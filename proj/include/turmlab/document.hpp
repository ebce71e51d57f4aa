#pragma once

#include <string>

#include "turmlab/instance.hpp"
#include "turmlab/oracle.hpp"

namespace turmlab {

inline constexpr int kFormatVersion = 1;

// JSON wire format:
//   {"format_version": 1, "r": .., "n": .., "M": [..], "graph": ..}
// where "graph" is either a graph6 string or an explicit [[u,v], ..] edge
// list. serialize_instance always emits graph6; parse_instance accepts both.
// Round-trips losslessly. All parse failures throw std::invalid_argument.
std::string serialize_instance(const Instance& inst);
Instance parse_instance(const std::string& text);

// DOT rendering with the M-vertices filled.
std::string to_dot(const Instance& inst);

// Deterministic JSON renderings of the oracle outputs (extremal graphs as
// graph6 strings).
std::string oracle_result_json(const OracleResult& res);
std::string scan_report_json(const ScanReport& rep);

}  // namespace turmlab
