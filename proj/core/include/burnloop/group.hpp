#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace burnloop {

using Elt = std::uint16_t;
inline constexpr Elt kNoElt = 0xFFFF;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite group stored as an explicit multiplication table. Element 0 is
/// always the identity. Immutable once built; conjugacy data is precomputed.
class Group {
 public:
  /// table[a][b] = a*b. Validates identity at index 0, Latin square,
  /// inverses, and associativity (exhaustive up to order 64, sampled above).
  static GroupPtr from_table(std::string name, const std::vector<std::vector<int>>& table);

  /// Generators are permutations of {0..points-1}, given as image vectors.
  /// Elements are the generated permutations; the identity gets index 0 and
  /// the rest are sorted lexicographically.
  static GroupPtr from_permutations(std::string name, int points,
                                    const std::vector<std::vector<int>>& generator_images);

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  Elt mul(Elt a, Elt b) const { return table_[(size_t)a * n_ + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  /// x^g = g^{-1} x g (all conjugation in this codebase uses this convention).
  Elt conj(Elt x, Elt g) const { return mul(mul(inv(g), x), g); }
  int element_order(Elt a) const { return elt_order_[a]; }
  Elt power(Elt a, long k) const;

  int num_classes() const { return (int)class_reps_.size(); }
  int class_of(Elt a) const { return class_of_[a]; }
  const std::vector<Elt>& class_reps() const { return class_reps_; }

  std::uint64_t digest() const { return digest_; }

  // Direct-product structure (set only by groups::product).
  bool is_product() const { return !factors_.empty(); }
  int factor_count() const { return (int)factors_.size(); }
  const GroupPtr& factor(int i) const { return factors_[i]; }
  /// Mixed-radix index of a tuple of per-factor element indices.
  Elt compose_parts(std::span<const Elt> parts) const;
  Elt part(Elt g, int i) const;
  std::vector<Elt> parts(Elt g) const;

 private:
  Group() = default;
  void finalize();  // inv, orders, classes, digest

  std::string name_;
  int n_ = 0;
  std::vector<Elt> table_;
  std::vector<Elt> inv_;
  std::vector<int> elt_order_;
  std::vector<int> class_of_;
  std::vector<Elt> class_reps_;
  std::uint64_t digest_ = 0;
  std::vector<GroupPtr> factors_;
  std::vector<int> radix_;  // radix_[i] = product of orders of factors after i

  friend GroupPtr make_product_group(const std::vector<GroupPtr>& factors);
};

namespace groups {

/// Built-in catalog: C1..C16, V4, D4..D16 (even orders), Q8, S2..S5, A3..A5,
/// SL(2,3), and 'x'-joined direct products of catalog names ("C8xD8").
GroupPtr catalog(const std::string& name);
std::vector<std::string> catalog_names();

GroupPtr cyclic(int m);
GroupPtr product(const std::vector<GroupPtr>& factors);  // memoized by identity
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
GroupPtr power(const GroupPtr& a, int n);
/// cyclic(p)^e wrapper: the group Z/p^e.
GroupPtr cyclic_power(int p, int e);

}  // namespace groups

}  // namespace burnloop
