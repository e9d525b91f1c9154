#include "dworkbench/weights.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dworkbench/error.hpp"
#include "dworkbench/numtheory.hpp"

namespace dwb {

WeightVector WeightVector::negated() const {
  WeightVector out{N, v};
  for (int& x : out.v) x = static_cast<int>(nt::mod(-x, N));
  return out;
}

WeightVector WeightVector::translated(int c) const {
  WeightVector out{N, v};
  for (int& x : out.v) x = static_cast<int>(nt::mod(x + c, N));
  return out;
}

bool WeightVector::is_constant() const {
  for (int x : v)
    if (nt::mod(x - v.front(), N) != 0) return false;
  return true;
}

bool WeightVector::same_label(const WeightVector& rhs) const {
  if (N != rhs.N || v.size() != rhs.v.size()) return false;
  const int64_t c = nt::mod(rhs.v.front() - v.front(), N);
  for (size_t i = 0; i < v.size(); ++i)
    if (nt::mod(rhs.v[i] - v[i] - c, N) != 0) return false;
  return true;
}

std::string WeightVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ") mod " << N;
  return os.str();
}

CharMultiset CharMultiset::from(int N, std::vector<int> residues) {
  for (int& x : residues) x = static_cast<int>(nt::mod(x, N));
  std::sort(residues.begin(), residues.end());
  return {N, std::move(residues)};
}

WeightVector build_v(int n, int N) {
  if (n < 2 || n % 2 != 0 || N % 2 == 0 || N < n + 5)
    throw Error(ErrorKind::BadParams, "build_v needs n even >= 2 and N odd >= n + 5");
  std::vector<int> v;
  if (n == 2) {
    v = {0, 0, 0};
    for (int x = 2; x <= N - 2; ++x) v.push_back(x);
  } else {
    const int k = n / 2;
    v.assign(n + 1, 0);
    v.push_back(2);
    v.push_back(k + 1);
    for (int x = k + 3; x <= N - k - 2; ++x) v.push_back(x);
    v.push_back(N - 1);
  }
  WeightVector out{N, v};
  int64_t sum = 0;
  for (int x : v) sum += x;
  if (static_cast<int>(v.size()) != N || sum % N != 0)
    throw Error(ErrorKind::BadParams, "build_v produced an invalid vector for n=" + std::to_string(n));
  return out;
}

std::pair<CharMultiset, CharMultiset> cancel(const CharMultiset& a, const CharMultiset& b) {
  if (a.N != b.N) throw Error(ErrorKind::ModulusMismatch, "cancel of multisets with different N");
  std::map<int, int> ca, cb;
  for (int x : a.elems) ++ca[x];
  for (int x : b.elems) ++cb[x];
  std::vector<int> ra, rb;
  for (auto [x, m] : ca) {
    const int rest = m - (cb.count(x) ? cb[x] : 0);
    for (int i = 0; i < rest; ++i) ra.push_back(x);
  }
  for (auto [x, m] : cb) {
    const int rest = m - (ca.count(x) ? ca[x] : 0);
    for (int i = 0; i < rest; ++i) rb.push_back(x);
  }
  return {CharMultiset::from(a.N, ra), CharMultiset::from(a.N, rb)};
}

std::pair<CharMultiset, CharMultiset> hyper_data(const WeightVector& v) {
  std::vector<int> all(v.N);
  for (int i = 0; i < v.N; ++i) all[i] = i;
  return cancel(CharMultiset::from(v.N, all), CharMultiset::from(v.N, v.negated().v));
}

int rank_of(const WeightVector& v) {
  int count = 0;
  for (int y = 0; y < v.N; ++y) {
    bool ok = true;
    for (int x : v.v)
      if (nt::mod(x - y, v.N) == 0) {
        ok = false;
        break;
      }
    count += ok;
  }
  return count;
}

bool is_self_dual(const WeightVector& v) {
  const auto neg = CharMultiset::from(v.N, v.negated().v);
  for (int c = 0; c < v.N; ++c)
    if (CharMultiset::from(v.N, v.translated(c).v) == neg) return true;
  return false;
}

}  // namespace dwb
