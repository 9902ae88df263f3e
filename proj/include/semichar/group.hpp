#pragma once

// Finite groups given by verified Cayley tables, their subgroups, and
// homomorphisms between subgroups.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semichar/element_mask.hpp"

namespace semichar {

struct PrimePower {
  unsigned p = 0;
  unsigned k = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = p^k with p prime, k >= 1. The trivial group has no prime power.
std::optional<PrimePower> prime_power_of(std::size_t n);

class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// `table` is row-major, table[i * n + j] = i * j. Throws NotAGroup naming
  /// the violated axiom and a witness.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table);

  std::size_t order() const { return order_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  /// g x g^-1
  Element conj(Element g, Element x) const { return mul(mul(g, x), inverse_[g]); }
  std::size_t element_order(Element a) const;

  std::optional<PrimePower> prime_power() const { return prime_power_; }
  std::span<const Element> table() const { return table_; }
  ElementMask all_elements() const;
  bool is_abelian() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::optional<PrimePower> prime_power_;
};

/// Parses the `order n` + n rows text format. ParseError carries the line
/// number; a table that is not a group raises NotAGroup.
FiniteGroup parse_group(std::string_view text);
std::string format_group(const FiniteGroup& g);

/// A subgroup, identified by its sorted element list. The parent group is
/// not stored; every operation takes it explicitly.
class Subgroup {
 public:
  Subgroup() = default;

  /// Validates closure; throws DomainError otherwise.
  static Subgroup from_mask(const FiniteGroup& g, const ElementMask& mask);
  static Subgroup from_elements(const FiniteGroup& g, std::span<const Element> elems);
  /// No validation. For masks already known to be subgroups.
  static Subgroup trusted(const ElementMask& mask);

  const ElementMask& mask() const { return mask_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Element e) const { return mask_.test(e); }
  bool is_subgroup_of(const Subgroup& o) const { return mask_.is_subset_of(o.mask_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.mask_ == b.mask_; }
  /// Canonical order: by size, then lexicographically by sorted elements.
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
    if (auto c = a.order() <=> b.order(); c != 0) return c;
    return a.elements_ <=> b.elements_;
  }

 private:
  ElementMask mask_;
  std::vector<Element> elements_;
};

bool is_subgroup(const FiniteGroup& g, const ElementMask& mask);
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> gens);
ElementMask generated_mask(const FiniteGroup& g, std::span<const Element> gens);
/// g P g^-1
Subgroup conjugate(const FiniteGroup& g, const Subgroup& p, Element x);
ElementMask conjugate_mask(const FiniteGroup& g, const ElementMask& p, Element x);
/// N_G(P). Throws DomainError when P is not a subgroup of G.
Subgroup normalizer(const FiniteGroup& g, const Subgroup& p);
/// Greedy generating sequence: scan elements ascending, keep those not yet generated.
std::vector<Element> generating_sequence(const FiniteGroup& g, const Subgroup& p);

/// Map between subgroups of one group, stored extensionally.
class GroupMap {
 public:
  static constexpr Element kUnmapped = 0xFFFF;

  GroupMap() = default;
  /// `images` has one slot per element of the parent group; slots outside
  /// the domain hold kUnmapped. No validation.
  GroupMap(Subgroup domain, ElementMask codomain, std::vector<Element> images);

  /// Builds and validates (homomorphism, injective, image inside codomain).
  /// Throws InvalidMorphism.
  static GroupMap from_pairs(const FiniteGroup& g, std::span<const std::pair<Element, Element>> pairs,
                             const ElementMask& codomain);
  static GroupMap identity(const FiniteGroup& g, const Subgroup& p);
  /// u -> x u x^-1 on P, landing in `codomain`.
  static GroupMap conjugation(const FiniteGroup& g, const Subgroup& p, Element x,
                              const ElementMask& codomain);

  Element operator()(Element u) const { return images_[u]; }
  const Subgroup& domain() const { return domain_; }
  const ElementMask& codomain() const { return codomain_; }
  std::span<const Element> images() const { return images_; }
  ElementMask image() const;
  bool is_identity() const;

  GroupMap restrict_to(const Subgroup& sub) const;
  /// other ∘ this; `other` must be defined on image().
  GroupMap then(const GroupMap& other) const;
  /// Inverse of the isomorphism domain -> image(), with codomain `codomain`.
  GroupMap inverse(const FiniteGroup& g, const ElementMask& codomain) const;
  GroupMap with_codomain(const ElementMask& codomain) const;

  /// "a->b, c->d" over the domain in ascending order.
  std::string to_string() const;

  friend bool operator==(const GroupMap& a, const GroupMap& b) {
    return a.images_ == b.images_ && a.codomain_ == b.codomain_;
  }
  friend std::strong_ordering operator<=>(const GroupMap& a, const GroupMap& b) {
    if (auto c = a.images_ <=> b.images_; c != 0) return c;
    return a.codomain_.words <=> b.codomain_.words;
  }

 private:
  Subgroup domain_;
  ElementMask codomain_;
  std::vector<Element> images_;
};

/// Homomorphism + injectivity + image inside codomain.
bool is_injective_homomorphism(const FiniteGroup& g, const GroupMap& m);

/// All injective homomorphisms P -> Q, by backtracking over images of a
/// generating sequence of P. Sorted by image vector.
std::vector<GroupMap> monomorphisms(const FiniteGroup& g, const Subgroup& p, const Subgroup& q);

/// S x S with elements encoded as a * |S| + b.
struct DirectSquare {
  FiniteGroup gamma;
  std::size_t n = 0;

  Element encode(Element a, Element b) const { return static_cast<Element>(a * n + b); }
  std::pair<Element, Element> decode(Element x) const {
    return {static_cast<Element>(x / n), static_cast<Element>(x % n)};
  }
  Element pi1(Element x) const { return static_cast<Element>(x / n); }
  Element pi2(Element x) const { return static_cast<Element>(x % n); }
  ElementMask project1(const ElementMask& m) const;
  ElementMask project2(const ElementMask& m) const;
};

/// Throws DomainError when |S|^2 exceeds kMaxOrder.
DirectSquare direct_square(const FiniteGroup& s);

}  // namespace semichar
