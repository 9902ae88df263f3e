#pragma once

// Left semicharacteristic bisets for a fusion system F on S, and the group
// G = Aut(X as a right S-set) that realizes F = F_S(G).
//
// G is never built. A free right S-set of rank r has automorphism group
// S wr Sym(r), so |G| = |S|^r r!. Whether phi: P -> S is conjugation by
// some g in G is decided by comparing marks: such g exists iff the
// (P, S)-bisets restricted along the inclusion and along phi are
// isomorphic, iff |X^D| = |X^(phi x id)(D)| for all D <= P x S.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semichar/biset.hpp"
#include "semichar/burnside.hpp"
#include "semichar/fusion.hpp"
#include "semichar/square.hpp"

namespace semichar {

struct SemicharBiset {
  FusionSystem fusion;
  std::shared_ptr<const SquareContext> ctx;
  ClassPartition blocks;     // F x F_S(S) classes on S x S
  std::vector<char> in_h;    // Delta(P, phi) with P < S and phi in F
  VirtualGSet y0;            // one orbit S x_(S, a) S per a in Out_F(S)
  VirtualGSet y;             // stabilized, rational
  mpz_class m;
  VirtualGSet x;             // m * y
  ExplicitBiset x_explicit;  // orbits in class order, with multiplicity
  std::vector<mpq_class> fix;  // |X^D| per class of S x S
  bool bifree = false;
};

/// Builds the biset for a closed F. Throws PreconditionViolated or
/// HNotClosed only on an internal inconsistency, since the construction
/// guarantees both. `ctx` may be shared between systems on the same S.
SemicharBiset build_semichar(const FusionSystem& f,
                             std::shared_ptr<const SquareContext> ctx = nullptr);

struct RankAndOrder {
  std::size_t r = 0;
  mpz_class order_g;
};

/// Throws NotBifree when the right action on X is not free.
RankAndOrder rank_and_order(const SemicharBiset& b);

/// Whether phi: P -> S is induced by conjugation in G. Throws InvalidMorphism
/// if phi is not an injective homomorphism. Without an explicit quantifier,
/// twisted diagonals are used when the biset is known to be bifree.
bool decide_morphism(const SemicharBiset& b, const GroupMap& phi,
                     std::optional<Quantifier> q = std::nullopt);

/// Default bound on |X| for the explicit intertwiner search.
inline constexpr std::size_t kDefaultMaxExplicit = 24;

/// An explicit g in G with g(u x) = phi(u) g(x), as the image of every
/// point, found by backtracking over orbit base points. Throws TooLarge when
/// |X| exceeds `bound`.
std::optional<std::vector<std::uint32_t>> find_intertwiner(const SemicharBiset& b,
                                                           const GroupMap& phi,
                                                           std::size_t bound = kDefaultMaxExplicit);

struct InducedFusion {
  FusionSystem fusion;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

/// F_S(G), decided morphism by morphism over every injective P -> S.
InducedFusion induced_fusion(const SemicharBiset& b);

/// Left translations by S are right-equivariant bijections of X and
/// distinct elements give distinct bijections.
bool left_translations_embed(const SemicharBiset& b);

struct RealizationFlags {
  bool f_generated = false;
  bool left_stable = false;
  bool right_stable = false;  // reported, never required
  bool contains_identity = false;
  bool embeds = false;
  bool realized = false;
};

struct RealizationReport {
  std::size_t group_order = 0;
  unsigned p = 0;  // 0 for the trivial group
  std::size_t num_subgroups = 0;
  std::size_t out_order = 0;
  mpz_class m;
  std::size_t rank_r = 0;
  mpz_class order_g;
  unsigned char_index_residue = 0;  // (|X| / |S|) mod p
  RealizationFlags flags;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t explicit_points = 0;
  std::string x_serialized;

  /// Every flag except right_stable holds.
  bool passed() const;
  /// Names of the required flags that are false, comma separated.
  std::string failing_flags() const;
};

RealizationReport verify_realization(const FusionSystem& f,
                                     std::shared_ptr<const SquareContext> ctx = nullptr);
RealizationReport verify_realization(const SemicharBiset& b);

}  // namespace semichar
