#include "dworkbench/report.hpp"

#include "dworkbench/error.hpp"

namespace dwb {

json cyclo_to_json(const CycloElem& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  return {{"M", x.modulus()}, {"coeffs", coeffs}};
}

CycloElem cyclo_from_json(const json& j) {
  try {
    const int M = j.at("M").get<int>();
    std::vector<mpq_class> coeffs;
    for (const auto& pair : j.at("coeffs")) {
      mpq_class c(mpz_class(pair.at(0).get<std::string>()), mpz_class(pair.at(1).get<std::string>()));
      c.canonicalize();
      coeffs.push_back(c);
    }
    return CycloElem::from_coeffs(M, coeffs);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Config, std::string("malformed cyclotomic element: ") + e.what());
  }
}

json Report::to_json(bool include_timing) const {
  json j;
  j["check"] = check;
  j["params"] = params;
  j["pass"] = pass;
  j["adjudications"] = adjudications;
  j["rows"] = rows;
  j["summary"] = summary;
  j["runtime_ms"] = include_timing ? runtime_ms : 0;
  j["seed"] = seed;
  return j;
}

}  // namespace dwb
