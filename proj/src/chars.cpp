#include "dworkbench/chars.hpp"

#include "dworkbench/error.hpp"
#include "dworkbench/numtheory.hpp"
#include "dworkbench/root_sum.hpp"

namespace dwb {

MultChar MultChar::operator*(const MultChar& rhs) const {
  if (order != rhs.order) throw Error(ErrorKind::ModulusMismatch, "characters of different order");
  return {order, nt::mod(exp + rhs.exp, order)};
}

bool MultChar::operator==(const MultChar& rhs) const {
  return order == rhs.order && nt::mod(exp - rhs.exp, order) == 0;
}

AddChar conjugate(const FqField& field, AddChar psi) { return {field.neg(psi.c)}; }

void require_order_divides(const FqField& field, int order) {
  if (order < 1 || (field.p() - 1) % order != 0)
    throw Error(ErrorKind::BadN, "character order " + std::to_string(order) + " does not divide p - 1 = " +
                                     std::to_string(field.p() - 1));
}

int64_t char_index(const FqField& field, MultChar chi, FqElem x) {
  if (x == 0) return -1;
  const int64_t l = field.log_table()[x] % chi.order;
  return nt::mod(nt::mod(chi.exp, chi.order) * (field.norm_log_factor() % chi.order) % chi.order * l, chi.order);
}

int64_t addchar_index(const FqField& field, AddChar psi, FqElem x) {
  return field.trace_to_prime(field.mul(psi.c, x));
}

CycloElem teich(const FqField& field, FqElem u, int N) {
  if (u == 0) throw Error(ErrorKind::ZeroInput, "teich of 0");
  require_order_divides(field, N);
  return CycloElem::root_of_unity(N, char_index(field, {N, 1}, u));
}

CycloElem char_value(const FqField& field, MultChar chi, FqElem x) {
  require_order_divides(field, chi.order);
  const int64_t k = char_index(field, chi, x);
  if (k < 0) return CycloElem(chi.order);
  return CycloElem::root_of_unity(chi.order, k);
}

CycloElem gauss_sum(const FqField& field, AddChar psi, MultChar chi) {
  if (psi.is_trivial()) throw Error(ErrorKind::TrivialAdditive, "Gauss sum needs a nontrivial additive character");
  require_order_divides(field, chi.order);
  const int64_t p = field.p();
  const int M = static_cast<int>(chi.order * p);
  RootSum acc(M);
  for (int64_t x = 1; x < field.q(); ++x) {
    const auto e = static_cast<FqElem>(x);
    acc.add(addchar_index(field, psi, e) * chi.order + char_index(field, chi, e) * p);
  }
  return acc.to_cyclo();
}

CycloElem jacobi_sum(const FqField& field, MultChar a, MultChar b) {
  require_order_divides(field, a.order);
  require_order_divides(field, b.order);
  const int M = static_cast<int>(nt::lcm(a.order, b.order));
  const int64_t sa = M / a.order, sb = M / b.order;
  RootSum acc(M);
  // codes 0 and 1 are the field's 0 and 1; both terms vanish there
  for (int64_t x = 2; x < field.q(); ++x) {
    const auto e = static_cast<FqElem>(x);
    acc.add(char_index(field, a, e) * sa + char_index(field, b, field.sub(1, e)) * sb);
  }
  return acc.to_cyclo();
}

CycloElem grossen_value(const FqField& field, MultChar chi, MultChar rho) {
  return -jacobi_sum(field, chi, rho / chi);
}

CycloElem kummer_trace(const FqField& field, MultChar chi, FqElem t, KummerFlavor flavor) {
  const FqElem arg = flavor == KummerFlavor::X ? t : field.sub(1, t);
  return char_value(field, chi, arg);
}

CycloElem phi_value(const FqField& field, std::span<const MultChar> s_chi, std::span<const MultChar> s_rho,
                    AddChar psi, int degree) {
  if (s_chi.size() != s_rho.size()) throw Error(ErrorKind::SizeMismatch, "S_chi and S_rho differ in size");
  int order = 1;
  for (const auto& c : s_chi) order = static_cast<int>(nt::lcm(order, c.order));
  for (const auto& c : s_rho) order = static_cast<int>(nt::lcm(order, c.order));
  const int M = static_cast<int>(order * field.p());
  const AddChar psibar = conjugate(field, psi);
  CycloElem out = CycloElem::integer(M, 1);
  for (const auto& c : s_chi) out *= (-gauss_sum(field, psi, c)).coerce(M);
  for (const auto& r : s_rho) out *= (-gauss_sum(field, psibar, r.inverse())).coerce(M);
  return out.pow(degree);
}

}  // namespace dwb
