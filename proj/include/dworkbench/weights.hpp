#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dwb {

/// Eigenspace label v in (Z/N)^N with sum 0, defined modulo W = (1, ..., 1).
struct WeightVector {
  int N = 3;
  std::vector<int> v;

  WeightVector negated() const;
  WeightVector translated(int c) const;  // v + cW
  bool is_constant() const;              // [v] = [0]
  /// Equality of labels: v' = v + cW for some c.
  bool same_label(const WeightVector& rhs) const;
  std::string to_string() const;
};

/// Multiset of residues mod N, kept sorted.
struct CharMultiset {
  int N = 1;
  std::vector<int> elems;

  static CharMultiset from(int N, std::vector<int> residues);
  size_t size() const { return elems.size(); }
  bool operator==(const CharMultiset& rhs) const = default;
};

/// The weight vector v(n, N); n even >= 2, N odd >= n + 5. Throws BadParams.
WeightVector build_v(int n, int N);
std::pair<CharMultiset, CharMultiset> cancel(const CharMultiset& a, const CharMultiset& b);
/// cancel(all N characters once, multiset of -v).
std::pair<CharMultiset, CharMultiset> hyper_data(const WeightVector& v);
/// Number of translates v - yW with no zero entry.
int rank_of(const WeightVector& v);
/// -v is a permutation of some translate of v.
bool is_self_dual(const WeightVector& v);

}  // namespace dwb
