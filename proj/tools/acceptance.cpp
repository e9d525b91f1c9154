// Acceptance run: one PASS/FAIL line per criterion. Criterion 12 never gates the exit code.
#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include "dworkbench/config.hpp"
#include "dworkbench/error.hpp"
#include "dworkbench/harness.hpp"

using namespace dwb;

namespace {

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Report()> run;
};

}  // namespace

int main(int argc, char** argv) {
  // --skip-stretch drops the non-gating criterion (used by the quick ctest label)
  bool skip_stretch = false;
  for (int i = 1; i < argc; ++i) skip_stretch = skip_stretch || std::string(argv[i]) == "--skip-stretch";

  CampaignConfig cfg;  // n=2, N=7, q in {29, 43}
  const std::vector<Criterion> criteria{
      {1, "combinatorics", 1, [] { return check_combinatorics(); }},
      {2, "gauss-suite", 5, [] { return check_gauss(); }},
      {3, "hyper-cross", 30, [&] { return check_hyper_cross(2, 7, 29, 1e-6); }},
      {4, "canonical-paths", 60, [&] { return check_canonical_paths(2, 7, {29, 43}); }},
      {5, "det-trad", 120, [&] { return check_det_trad(29, cfg.seed); }},
      {6, "det-hcan", 120, [] { return check_det_hcan(); }},
      {7, "validate-n3", 60, [] { return check_n3({7, 13}); }},
      {8, "katz", 18 * 60, [] { return check_katz(2, 7, {29, 43}, 1e-6); }},
      {9, "weil", 60, [] { return check_weil(2, 7, 29, 1e-6); }},
      {10, "signs", 10, [&] { return check_signs({5, 13}, cfg.seed); }},
      {11, "determinism", 600, [&] {
         CampaignConfig c = cfg;
         c.qs = {29};
         return check_determinism(c);
       }},
      {12, "stretch-n4-N9-q19", 15 * 60, [] { return check_stretch(1e-6); }},
  };

  bool gating_ok = true;
  for (const auto& c : criteria) {
    if (c.id == 12 && skip_stretch) {
      std::cout << "SKIP " << c.id << " " << c.name << " (non-gating)\n";
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    try {
      const Report r = c.run();
      pass = r.pass;
      const auto& adj = r.adjudications;
      for (const char* key : {"orientation", "conv_sign", "det_hcan_exponent"})
        if (adj.at(key) != "n/a") note += std::string(" ") + key + "=" + adj.at(key);
    } catch (const Error& e) {
      note = std::string(" error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_s;
    if (!in_time) note += " over time budget";
    pass = pass && in_time;
    if (c.id != 12) gating_ok = gating_ok && pass;
    std::cout << (pass ? "PASS " : "FAIL ") << c.id << " " << c.name << " (" << secs << " s)" << note
              << (c.id == 12 ? " [non-gating]" : "") << std::endl;
  }
  return gating_ok ? 0 : 1;
}
