#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "semichar/group.hpp"
#include "semichar/lattice.hpp"

namespace semichar {

/// Subgroup D of S x S of the form {(phi(u), u) : u in P}.
struct TwistedDiagonal {
  SubgroupId p = 0;        // in the base lattice
  GroupMap phi;            // P -> S
  SubgroupId subgroup = 0; // in the square lattice
};

/// S together with Gamma = S x S and its subgroup lattice. Built once per
/// base group and shared read-only.
class SquareContext {
 public:
  static std::shared_ptr<const SquareContext> create(std::shared_ptr<const SubgroupLattice> base);

  const SubgroupLattice& base() const { return *base_; }
  const std::shared_ptr<const SubgroupLattice>& base_ptr() const { return base_; }
  const FiniteGroup& s() const { return base_->group(); }
  const DirectSquare& square() const { return square_; }
  const SubgroupLattice& gamma() const { return *gamma_; }
  const std::shared_ptr<const SubgroupLattice>& gamma_ptr() const { return gamma_; }

  SubgroupId proj1(SubgroupId d) const { return proj1_[d]; }
  SubgroupId proj2(SubgroupId d) const { return proj2_[d]; }
  /// Both projections injective.
  bool is_twisted(SubgroupId d) const { return twisted_[d] != 0; }
  const std::vector<SubgroupId>& twisted_ids() const { return twisted_ids_; }

  /// Delta(P, phi) as a subgroup of Gamma. phi must be injective.
  SubgroupId diagonal_of(const GroupMap& phi) const;
  TwistedDiagonal make_diagonal(const GroupMap& phi) const;
  /// Reads (P, phi) back off a twisted diagonal; nullopt otherwise.
  std::optional<TwistedDiagonal> as_diagonal(SubgroupId d) const;

  /// Image of D under (f x g)(a, b) = (f(a), g(b)). f and g are full maps on S
  /// given as image arrays (entries may be kUnmapped outside the projections).
  ElementMask map_pairs(SubgroupId d, std::span<const Element> f, std::span<const Element> g) const;

 private:
  std::shared_ptr<const SubgroupLattice> base_;
  DirectSquare square_;
  std::shared_ptr<const SubgroupLattice> gamma_;
  std::vector<SubgroupId> proj1_, proj2_;
  std::vector<char> twisted_;
  std::vector<SubgroupId> twisted_ids_;
};

}  // namespace semichar
