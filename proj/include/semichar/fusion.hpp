#pragma once

// Fusion systems on a finite p-group S, stored extensionally.
//
// A fusion system is kept as the sets Hom(P, S) for every P <= S. Hom(P, Q)
// is recovered as the maps in Hom(P, S) whose image lies in Q; this is
// equivalent to keeping all pairs because the axioms make composing with
// inclusions and restricting codomains free.

#include <memory>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "semichar/group.hpp"
#include "semichar/lattice.hpp"
#include "semichar/square.hpp"

namespace semichar {

class FusionSystem {
 public:
  /// `to_base[P]` holds maps P -> S (codomain S). No closure is performed.
  /// Throws NotAPGroup unless |S| is 1 or a prime power.
  FusionSystem(std::shared_ptr<const SubgroupLattice> base,
               std::vector<std::set<GroupMap>> to_base);

  const FiniteGroup& base() const { return lattice_->group(); }
  const SubgroupLattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const SubgroupLattice>& lattice_ptr() const { return lattice_; }

  const std::set<GroupMap>& homs_to_base(SubgroupId p) const { return to_base_[p]; }
  /// Hom(P, Q), each map with codomain Q.
  std::vector<GroupMap> homs(SubgroupId p, SubgroupId q) const;
  /// Whether the map (read as P -> S) belongs to the system.
  bool contains(const GroupMap& m) const;
  /// Sum of |Hom(P, Q)| over all ordered pairs.
  std::size_t total_morphisms() const;
  /// Aut_F(S).
  const std::set<GroupMap>& automorphisms() const { return to_base_[lattice_->whole()]; }

  friend bool operator==(const FusionSystem& a, const FusionSystem& b) {
    return a.base() == b.base() && a.to_base_ == b.to_base_;
  }

 private:
  std::shared_ptr<const SubgroupLattice> lattice_;
  std::vector<std::set<GroupMap>> to_base_;
};

/// Result of checking the fusion-system axioms on stored hom-sets.
struct FusionAudit {
  bool injective_homomorphisms = true;
  bool contains_inner = true;
  bool closed_composition = true;
  bool closed_restriction = true;
  bool closed_inverse = true;
  bool ok() const {
    return injective_homomorphisms && contains_inner && closed_composition && closed_restriction &&
           closed_inverse;
  }
};

FusionAudit audit_fusion_system(const FusionSystem& f);

FusionSystem inner_fusion(std::shared_ptr<const SubgroupLattice> s);

/// Least fusion system containing the inner maps and `generators`. Each
/// generator is a map between subgroups of S; throws InvalidGenerator if one
/// is not an injective homomorphism.
FusionSystem close_fusion(std::shared_ptr<const SubgroupLattice> s,
                          std::span<const GroupMap> generators);

/// The subgroup of `g` spanned by `embedding`, relabelled so that element i
/// of the result is embedding[i]. embedding[0] must be the identity.
FiniteGroup induced_group(const FiniteGroup& g, std::span<const Element> embedding);

/// F_S(G) with S labelled by `embedding`. Throws NotAPGroup if |S| is not a
/// prime power, DomainError if the embedding does not span a subgroup.
FusionSystem fusion_from_embedding(const FiniteGroup& g, std::span<const Element> embedding);
/// F_S(G) with S relabelled by its sorted element list.
FusionSystem fusion_of_subgroup(const FiniteGroup& g, const Subgroup& s);

/// Partition of the subgroups of S into F-conjugacy classes.
std::vector<std::vector<SubgroupId>> f_classes(const FusionSystem& f);

/// One representative per coset of Inn(S) in Aut_F(S), each the least
/// member of its coset; the identity comes first.
std::vector<GroupMap> out_reps(const FusionSystem& f);

/// Conjugacy in F x F_S(S): some phi in Hom_F(pi1 D, S) and x in S carry D
/// onto E under (a, b) -> (phi(a), x b x^-1). DomainError unless both masks
/// are subgroups of S x S.
bool product_conjugate(const FusionSystem& f, const SquareContext& ctx, const ElementMask& d,
                       const ElementMask& e);

/// The F x F_S(S) classes of subgroups of S x S, as blocks of conjugacy
/// classes of S x S.
ClassPartition product_classes(const FusionSystem& f, const SquareContext& ctx);


/// Parses generator lines `gen: a1->b1, a2->b2, ...` (`#` starts a comment
/// line). Each map must cover exactly a subgroup of `s`. Throws ParseError
/// on syntax, InvalidGenerator on a map that is not an injective
/// homomorphism on a subgroup.
std::vector<GroupMap> parse_fusion_generators(std::string_view text, const FiniteGroup& s);

}  // namespace semichar
