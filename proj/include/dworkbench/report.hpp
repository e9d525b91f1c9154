#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "dworkbench/cyclo.hpp"

namespace dwb {

using json = nlohmann::json;

/// {"M": int, "coeffs": [["num", "den"], ...]} with decimal strings.
json cyclo_to_json(const CycloElem& x);
CycloElem cyclo_from_json(const json& j);

/// Uniform report envelope for every check.
struct Report {
  std::string check;
  json params = json::object();
  bool pass = false;
  std::map<std::string, std::string> adjudications{
      {"orientation", "n/a"}, {"conv_sign", "n/a"}, {"det_hcan_exponent", "n/a"}};
  json rows = json::array();
  json summary = json::object();
  int64_t runtime_ms = 0;
  uint64_t seed = 0;

  /// Timing is left out when comparing runs for determinism.
  json to_json(bool include_timing = true) const;
  std::string dump(bool include_timing = true) const { return to_json(include_timing).dump(2); }
};

}  // namespace dwb
