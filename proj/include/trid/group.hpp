#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trid/types.hpp"

namespace trid {

/// A finite group given by its multiplication table. Element 0 is always the
/// identity; G^x = G \ {e} is the index range [1, n).
///
/// Immutable once constructed: all constructors validate the group axioms.
class FiniteGroup {
 public:
  using Element = int;

  Index order() const { return order_; }
  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  const std::string& label() const { return label_; }
  const std::string& name(Element a) const { return names_[a]; }
  const std::vector<std::string>& element_names() const { return names_; }

  /// Family string this group was built from, when it came from
  /// from_family(); table-built groups carry none.
  const std::optional<std::string>& family() const { return family_; }

  /// Cyclic factor orders when the group was built as a product of cyclic
  /// groups (element index = mixed-radix exponent code, first factor most
  /// significant).
  const std::optional<std::vector<int>>& cyclic_factors() const {
    return cyclic_factors_;
  }

  /// Element index by display name, falling back to a decimal index.
  std::optional<Element> find(const std::string& name_or_index) const;

  Index element_order(Element a) const;
  bool is_abelian() const;

  /// The n x n table, row-major.
  std::span<const Element> table() const { return mul_; }

 private:
  friend class GroupBuilder;
  FiniteGroup() = default;

  Index order_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::string label_;
  std::vector<std::string> names_;
  std::optional<std::string> family_;
  std::optional<std::vector<int>> cyclic_factors_;
};

struct TableOptions {
  /// Exhaustive O(n^3) associativity check is run when n <= assoc_cap.
  Index assoc_cap = 128;
  /// Skip the associativity check above the cap instead of failing.
  bool allow_unchecked_associativity = false;
};

/// Builds a group from a family string: "C{d}", "C{d1}xC{d2}x...", "S3",
/// "S4", "D{k}" (dihedral of order 2k) or "Q8".
///
/// Element enumerations:
///  - cyclic products: mixed-radix exponent tuples, first factor most
///    significant; names "g^k" for a single factor, "a^i b^j ..." otherwise.
///  - S3, S4: permutations of 1..k in lexicographic one-line order, named in
///    cycle notation; (p*q)(i) = p(q(i)).
///  - D{k}: r^0..r^{k-1}, then s r^0..s r^{k-1}, with r s = s r^{-1}.
///  - Q8: 1, -1, i, -i, j, -j, k, -k (1 is named "e").
FiniteGroup from_family(const std::string& spec);

/// Validates a multiplication table and derives the inverse table.
/// Throws PreconditionError naming the first violated axiom.
FiniteGroup from_table(const std::vector<std::vector<int>>& mul,
                       std::vector<std::string> names = {},
                       std::string label = "table",
                       const TableOptions& opts = {});

/// Coordinates for an abelian group: G ~ Z/d_1 x ... x Z/d_r.
struct AbelianStructure {
  std::vector<int> factors;                 // each >= 2, product = n
  std::vector<std::vector<int>> exponents;  // element index -> exponent tuple
  std::vector<FiniteGroup::Element> from_code;  // mixed-radix code -> element

  const std::vector<int>& to_exponents(FiniteGroup::Element a) const {
    return exponents[a];
  }
  Index order() const { return static_cast<Index>(exponents.size()); }
};

/// A linear character chi_a(x) = exp(2 pi i sum_j a_j x_j / d_j), stored by
/// its exponent tuple.
struct AbelianCharacter {
  std::vector<int> exponents;

  bool is_trivial() const;
  friend bool operator==(const AbelianCharacter&,
                         const AbelianCharacter&) = default;
};

/// Returns absent iff the group is non-abelian. Otherwise an invariant
/// factor decomposition d_1 | d_2 | ... | d_r (families built from cyclic
/// factors keep their own factor list instead), with a verified bijective
/// homomorphism to exponent tuples.
std::optional<AbelianStructure> abelian_structure(const FiniteGroup& g);

/// Character with the given exponents, checked against the factor list.
AbelianCharacter make_character(const AbelianStructure& s,
                                std::vector<int> exponents);

/// All n characters, in mixed-radix exponent order.
std::vector<AbelianCharacter> all_characters(const AbelianStructure& s);

/// True iff the product of the characters is the trivial character, i.e. the
/// componentwise exponent sum vanishes modulo the factor orders.
bool character_block_trivial(const AbelianStructure& s,
                             std::span<const AbelianCharacter> chars);

}  // namespace trid
