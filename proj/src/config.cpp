#include "dworkbench/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dworkbench/error.hpp"
#include "dworkbench/numtheory.hpp"

namespace dwb {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class T>
T parse_number(const std::string& key, const std::string& value, int line) {
  try {
    size_t pos = 0;
    T out;
    if constexpr (std::is_same_v<T, double>) out = std::stod(value, &pos);
    else out = static_cast<T>(std::stoll(value, &pos));
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return out;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Config, "line " + std::to_string(line) + ": '" + key + "' expects a number, got '" + value + "'");
  }
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> checks{
      "combinatorics", "gauss",       "hyper-cross", "canonical-paths", "det-trad",    "det-hcan",
      "validate-n3",   "katz",        "weil",        "signs",           "determinism", "stretch"};
  return checks;
}

CampaignConfig parse_config(std::string_view text) {
  CampaignConfig cfg;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    const auto eq = raw.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::Config, "line " + std::to_string(line) + ": expected key=value, got '" + raw + "'");
    const std::string key = trim(raw.substr(0, eq));
    const std::string value = trim(raw.substr(eq + 1));
    if (key == "n") cfg.n = parse_number<int>(key, value, line);
    else if (key == "N") cfg.N = parse_number<int>(key, value, line);
    else if (key == "q" || key == "q-list" || key == "qs") {
      cfg.qs.clear();
      for (const auto& item : split_list(value)) cfg.qs.push_back(parse_number<int64_t>(key, item, line));
    } else if (key == "checks") cfg.checks = split_list(value);
    else if (key == "seed") cfg.seed = parse_number<uint64_t>(key, value, line);
    else if (key == "threads") cfg.threads = parse_number<int>(key, value, line);
    else if (key == "tolerance") cfg.tolerance = parse_number<double>(key, value, line);
    else if (key == "out") cfg.out_dir = value;
    else if (key == "csv") cfg.csv = value == "true" || value == "1" || value == "yes";
    else throw Error(ErrorKind::Config, "line " + std::to_string(line) + ": unknown key '" + key + "'");
  }
  return cfg;
}

CampaignConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::Config, "cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

void validate_config(const CampaignConfig& cfg) {
  if (cfg.n < 2 || cfg.n % 2 != 0) throw Error(ErrorKind::Config, "n must be even and >= 2 (got " + std::to_string(cfg.n) + ")");
  if (cfg.N % 2 == 0 || cfg.N < cfg.n + 5)
    throw Error(ErrorKind::Config, "N must be odd and >= n + 5 (got N=" + std::to_string(cfg.N) + ")");
  if (cfg.qs.empty()) throw Error(ErrorKind::Config, "q list is empty");
  for (int64_t q : cfg.qs) {
    if (!nt::is_prime(q)) throw Error(ErrorKind::Config, "q=" + std::to_string(q) + " is not prime");
    if ((q - 1) % cfg.N != 0)
      throw Error(ErrorKind::Config, "q=" + std::to_string(q) + " is not 1 mod N=" + std::to_string(cfg.N));
  }
  for (const auto& c : cfg.checks)
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
      throw Error(ErrorKind::Config, "unknown check '" + c + "'");
  if (cfg.threads < 0) throw Error(ErrorKind::Config, "threads must be >= 0");
  if (!(cfg.tolerance > 0)) throw Error(ErrorKind::Config, "tolerance must be positive");
}

}  // namespace dwb
