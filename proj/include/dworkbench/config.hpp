#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dwb {

/// Flat key=value campaign configuration. '#' starts a comment.
///   n=2  N=7  q=29,43  checks=katz,validate-n3  seed=1  threads=4
///   tolerance=1e-6  out=reports  csv=false
struct CampaignConfig {
  int n = 2;
  int N = 7;
  std::vector<int64_t> qs{29, 43};
  std::vector<std::string> checks;  // empty = every gating check
  uint64_t seed = 1;
  int threads = 0;  // 0 = OpenMP default
  double tolerance = 1e-6;
  std::string out_dir = "reports";
  bool csv = false;
};

/// Throws Error(Config) with the offending line.
CampaignConfig parse_config(std::string_view text);
CampaignConfig load_config(const std::string& path);
/// Parameter sanity (n even, N odd >= n + 5, q prime = 1 mod N, known checks).
void validate_config(const CampaignConfig& cfg);

const std::vector<std::string>& known_checks();

}  // namespace dwb
