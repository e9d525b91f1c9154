#include "dworkbench/signs.hpp"

#include <map>
#include <set>

#include "dworkbench/error.hpp"
#include "dworkbench/numtheory.hpp"

namespace dwb::signs {

Matrix Matrix::zero(int n, int64_t l) { return {n, l, std::vector<int64_t>(n * n, 0)}; }

Matrix Matrix::identity(int n, int64_t l) {
  Matrix m = zero(n, l);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<int64_t>& d, int64_t l) {
  Matrix m = zero(static_cast<int>(d.size()), l);
  for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = nt::mod(d[i], l);
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  Matrix out = zero(n, l);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int64_t x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) = (out.at(i, j) + x * rhs.at(k, j)) % l;
    }
  return out;
}

Matrix Matrix::operator-() const { return scaled(-1); }

Matrix Matrix::scaled(int64_t s) const {
  Matrix out = *this;
  for (auto& x : out.a) x = nt::mod(x * s, l);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out = zero(n, l);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(j, i) = at(i, j);
  return out;
}

int64_t Matrix::det() const {
  Matrix m = *this;
  int64_t d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      d = nt::mod(-d, l);
    }
    d = d * m.at(c, c) % l;
    const int64_t inv = nt::powmod(m.at(c, c), l - 2, l);
    for (int r = c + 1; r < n; ++r) {
      const int64_t f = m.at(r, c) * inv % l;
      if (f == 0) continue;
      for (int j = c; j < n; ++j) m.at(r, j) = nt::mod(m.at(r, j) - f * m.at(c, j), l);
    }
  }
  return d;
}

Matrix Matrix::inverse() const {
  Matrix m = *this;
  Matrix inv = identity(n, l);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error(ErrorKind::DivisionByZero, "singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(m.at(piv, j), m.at(c, j));
      std::swap(inv.at(piv, j), inv.at(c, j));
    }
    const int64_t s = nt::powmod(m.at(c, c), l - 2, l);
    for (int j = 0; j < n; ++j) {
      m.at(c, j) = m.at(c, j) * s % l;
      inv.at(c, j) = inv.at(c, j) * s % l;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m.at(r, c) == 0) continue;
      const int64_t f = m.at(r, c);
      for (int j = 0; j < n; ++j) {
        m.at(r, j) = nt::mod(m.at(r, j) - f * m.at(c, j), l);
        inv.at(r, j) = nt::mod(inv.at(r, j) - f * inv.at(c, j), l);
      }
    }
  }
  return inv;
}

std::optional<int64_t> similitude(const Matrix& r, const Matrix& P) {
  const Matrix lhs = r.transposed() * P * r;
  for (int i = 0; i < P.n * P.n; ++i) {
    if (P.a[i] == 0) continue;
    const int64_t chi = lhs.a[i] * nt::powmod(P.a[i], P.l - 2, P.l) % P.l;
    if (P.scaled(chi) == lhs) return chi;
    return std::nullopt;
  }
  return std::nullopt;
}

bool sd_equivariant(const PairedRep& rep) {
  for (size_t i = 0; i < rep.group.size(); ++i) {
    const auto chi = similitude(rep.group[i], rep.pairing);
    if (!chi || *chi != nt::mod(rep.chi[i], rep.l)) return false;
  }
  return true;
}

int sign_of(const Matrix& P) {
  const Matrix t = P.transposed();
  if (t == P) return 1;
  if (t == -P) return -1;
  throw Error(ErrorKind::NotSignDefinite, "pairing is neither symmetric nor antisymmetric");
}

int sd_sign(const PairedRep& rep) {
  if (!sd_equivariant(rep)) throw Error(ErrorKind::NotEquivariant, "SD pairing fails equivariance");
  return sign_of(rep.pairing);
}

Matrix convert_pairing(const PairedRep& rep) { return rep.pairing * rep.group.at(rep.c_index); }

Matrix unconvert_pairing(const PairedRep& rep, const Matrix& Q) { return Q * rep.group.at(rep.c_index).inverse(); }

bool cj_equivariant(const PairedRep& rep, const Matrix& Q) {
  const Matrix& c = rep.group.at(rep.c_index);
  const Matrix cinv = c.inverse();
  for (size_t i = 0; i < rep.group.size(); ++i) {
    const Matrix& r = rep.group[i];
    const Matrix lhs = r.transposed() * Q * (c * r * cinv);
    if (!(lhs == Q.scaled(rep.chi[i]))) return false;
  }
  return true;
}

int cj_sign(const PairedRep& rep) {
  const Matrix Q = convert_pairing(rep);
  if (!cj_equivariant(rep, Q)) throw Error(ErrorKind::NotEquivariant, "converted pairing fails equivariance");
  return sign_of(Q);
}

DetClass pairing_det_class(const Matrix& P) {
  DetClass out;
  out.det = P.det();
  if (out.det == 0) throw Error(ErrorKind::DivisionByZero, "pairing is degenerate");
  out.square = nt::powmod(out.det, (P.l - 1) / 2, P.l) == 1;
  if (out.square)
    for (int64_t w = 1; w < P.l; ++w)
      if (w * w % P.l == out.det) {
        out.witness = w;
        break;
      }
  return out;
}

namespace {

Matrix random_invertible(int n, int64_t l, std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> d(0, l - 1);
  while (true) {
    Matrix m = Matrix::zero(n, l);
    for (auto& x : m.a) x = d(rng);
    if (m.det() != 0) return m;
  }
}

PairedRep finish(int64_t l, const Matrix& P0, std::vector<std::vector<int64_t>> gens, size_t c_gen,
                 std::mt19937_64& rng, size_t cap) {
  // abelian closure of diagonal generators
  const int n = P0.n;
  auto mul = [&](const std::vector<int64_t>& x, const std::vector<int64_t>& y) {
    std::vector<int64_t> z(n);
    for (int i = 0; i < n; ++i) z[i] = x[i] * y[i] % l;
    return z;
  };
  std::set<std::vector<int64_t>> seen{std::vector<int64_t>(n, 1)};
  std::vector<std::vector<int64_t>> elems{std::vector<int64_t>(n, 1)};
  for (size_t i = 0; i < elems.size() && elems.size() < cap; ++i)
    for (const auto& g : gens) {
      auto z = mul(elems[i], g);
      if (seen.insert(z).second) elems.push_back(std::move(z));
    }
  if (elems.size() >= cap) {
    elems.assign(gens.begin(), gens.end());  // too large: keep generators only
  }
  const Matrix A = random_invertible(n, l, rng);
  const Matrix Ainv = A.inverse();
  PairedRep rep;
  rep.l = l;
  rep.n = n;
  rep.pairing = A.transposed() * P0 * A;
  for (const auto& d : elems) {
    const Matrix D = Matrix::diagonal(d, l);
    const auto chi = similitude(D, P0);
    if (!chi) throw Error(ErrorKind::NotEquivariant, "generator is not a similitude");
    rep.group.push_back(Ainv * D * A);
    rep.chi.push_back(*chi);
    if (d == gens[c_gen]) rep.c_index = rep.group.size() - 1;
  }
  return rep;
}

}  // namespace

PairedRep random_admissible(int64_t l, int n, std::mt19937_64& rng, size_t cap) {
  if (!nt::is_prime(l) || l == 2) throw Error(ErrorKind::BadParams, "l must be an odd prime");
  if (n < 1) throw Error(ErrorKind::BadParams, "dimension must be >= 1");
  std::uniform_int_distribution<int64_t> unit(1, l - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  const bool odd = n % 2 == 1;
  const bool symmetric = odd || coin(rng) == 1;
  Matrix P0 = Matrix::zero(n, l);
  for (int b = 0; b + 1 < n; b += 2) {
    P0.at(b, b + 1) = 1;
    P0.at(b + 1, b) = symmetric ? 1 : l - 1;
  }
  if (odd) P0.at(n - 1, n - 1) = 1;

  std::vector<std::vector<int64_t>> gens;
  // c: flip on every 2-block (chi = -1) or a scalar +-1 (chi = 1); both square to 1
  std::vector<int64_t> c(n, 1);
  if (!odd && coin(rng) == 1) {
    for (int b = 0; b + 1 < n; b += 2) c[b + 1] = l - 1;
  } else if (coin(rng) == 1) {
    for (auto& x : c) x = l - 1;
  }
  gens.push_back(c);
  for (int g = 0; g < 2; ++g) {
    int64_t lambda;
    int64_t root = 1;
    if (odd) {
      root = unit(rng);
      lambda = root * root % l;
    } else {
      lambda = unit(rng);
    }
    std::vector<int64_t> d(n);
    for (int b = 0; b + 1 < n; b += 2) {
      const int64_t a = unit(rng);
      d[b] = a;
      d[b + 1] = lambda * nt::powmod(a, l - 2, l) % l;
    }
    if (odd) d[n - 1] = root;
    gens.push_back(d);
  }
  return finish(l, P0, gens, 0, rng, cap);
}

PairedRep determinant_pairing_example(int64_t l, std::mt19937_64& rng, bool c_has_det_minus_one) {
  PairedRep rep;
  rep.l = l;
  rep.n = 2;
  rep.pairing = Matrix::zero(2, l);
  rep.pairing.at(0, 1) = 1;
  rep.pairing.at(1, 0) = l - 1;
  const Matrix A = random_invertible(2, l, rng);
  const Matrix c = c_has_det_minus_one ? A.inverse() * Matrix::diagonal({1, -1}, l) * A : Matrix::identity(2, l).scaled(-1);
  rep.group.push_back(c);
  rep.chi.push_back(c.det());
  for (int i = 0; i < 3; ++i) {
    const Matrix g = random_invertible(2, l, rng);
    rep.group.push_back(g);
    rep.chi.push_back(g.det());
  }
  rep.c_index = 0;
  return rep;
}

}  // namespace dwb::signs
