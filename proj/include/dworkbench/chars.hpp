#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dworkbench/cyclo.hpp"
#include "dworkbench/ff.hpp"

namespace dwb {

/// chi(x) = zeta_order^{exp * dlog_p(x)} on the prime field, composed with the
/// norm on extensions. order must divide p - 1. chi(0) = 0, trivial included.
struct MultChar {
  int order = 1;
  int64_t exp = 0;

  bool is_trivial() const { return exp % order == 0; }
  MultChar inverse() const { return {order, -exp}; }
  MultChar operator*(const MultChar& rhs) const;
  MultChar operator/(const MultChar& rhs) const { return *this * rhs.inverse(); }
  bool operator==(const MultChar& rhs) const;
};

/// psi_c(x) = zeta_p^{Tr(c x)}.
struct AddChar {
  FqElem c = 1;
  bool is_trivial() const { return c == 0; }
};

AddChar conjugate(const FqField& field, AddChar psi);

/// Exponent k in [0, order) with chi(x) = zeta_order^k, or -1 when x = 0.
int64_t char_index(const FqField& field, MultChar chi, FqElem x);
/// Residue Tr(c x) mod p.
int64_t addchar_index(const FqField& field, AddChar psi, FqElem x);

/// Image of u^{(q-1)/N} in mu_N, as zeta_N^{dlog u}. Throws ZeroInput, BadN.
CycloElem teich(const FqField& field, FqElem u, int N);
CycloElem char_value(const FqField& field, MultChar chi, FqElem x);

/// g(psi, chi) = sum_{x != 0} psi(x) chi(x), in Q(zeta_{order * p}).
CycloElem gauss_sum(const FqField& field, AddChar psi, MultChar chi);
/// J(a, b) = sum_x a(x) b(1 - x), in Q(zeta_lcm).
CycloElem jacobi_sum(const FqField& field, MultChar a, MultChar b);
/// -J(chi, rho/chi): the Frobenius value of the Jacobi-sum grossencharacter.
CycloElem grossen_value(const FqField& field, MultChar chi, MultChar rho);

enum class KummerFlavor { X, OneMinusX };
/// chi(t) (flavor X) or chi(1 - t) (flavor OneMinusX), extended by zero.
CycloElem kummer_trace(const FqField& field, MultChar chi, FqElem t, KummerFlavor flavor);

/// (prod_{chi in S_chi} -g(psi, chi) * prod_{rho in S_rho} -g(psibar, rhobar))^degree
CycloElem phi_value(const FqField& field, std::span<const MultChar> s_chi, std::span<const MultChar> s_rho,
                    AddChar psi, int degree = 1);

void require_order_divides(const FqField& field, int order);

}  // namespace dwb
