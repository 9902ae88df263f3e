#pragma once

// (S, S)-bisets: explicit ones built from transitive quotients, and the
// virtual ones of the rational Burnside ring of S x S, which S x S acts on
// by (a, b) . x = a x b^-1.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "semichar/burnside.hpp"
#include "semichar/fusion.hpp"
#include "semichar/square.hpp"

namespace semichar {

/// Finite set with commuting left and right S-actions, stored as tables.
class ExplicitBiset {
 public:
  ExplicitBiset() = default;
  /// left[s * points + x] = s.x and right[s * points + x] = x.s
  ExplicitBiset(std::size_t s_order, std::size_t points, std::vector<std::uint32_t> left,
                std::vector<std::uint32_t> right);

  std::size_t size() const { return points_; }
  std::size_t s_order() const { return s_order_; }
  std::uint32_t left(Element s, std::uint32_t x) const { return left_[s * points_ + x]; }
  std::uint32_t right(std::uint32_t x, Element s) const { return right_[s * points_ + x]; }
  const std::uint32_t* left_perm(Element s) const { return left_.data() + s * points_; }
  const std::uint32_t* right_perm(Element s) const { return right_.data() + s * points_; }

  /// Appends a copy of `other` with its points shifted past ours.
  void append(const ExplicitBiset& other);

  /// Both actions are actions of `s` and commute.
  bool is_valid(const FiniteGroup& s) const;
  bool left_free() const;
  bool right_free() const;

  /// x -> a x b^-1 for g = (a, b) in S x S.
  std::vector<std::uint32_t> gamma_perm(const SquareContext& ctx, Element g) const;
  /// Points fixed by every element of D <= S x S, counted directly.
  std::size_t count_fixed_points(const SquareContext& ctx, SubgroupId d) const;
  /// Orbits of S x S, each listed ascending, ordered by least point.
  std::vector<std::vector<std::uint32_t>> orbits() const;

 private:
  std::size_t s_order_ = 0;
  std::size_t points_ = 0;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> right_;
};

/// S x_(Q, phi) S: pairs (x, y) modulo (x phi(u), y) ~ (x, u y) for u in Q,
/// with a.[x, y] = [a x, y] and [x, y].b = [x, y b]. The point [e, e] has
/// stabilizer Delta(Q, phi) and has index 0. Points are numbered by the
/// canonical representative of each class: the member with least first
/// coordinate. Throws InvalidMorphism unless phi is an injective
/// homomorphism Q -> S.
ExplicitBiset materialize(const FiniteGroup& s, const GroupMap& phi);

struct OrbitClass {
  ClassId cls = 0;           // class of the stabilizer in S x S
  TwistedDiagonal diagonal;  // Delta(P, phi) read off the class representative
};

/// Class of the S x S-stabilizer of x. Throws NotBifree if the stabilizer is
/// not a twisted diagonal.
OrbitClass orbit_class(const SquareContext& ctx, const ExplicitBiset& x, std::uint32_t point);

/// Range of D for the mark comparisons below. The full range is the
/// reference; twisted diagonals suffice once the biset is known to be bifree.
enum class Quantifier { kTwistedDiagonals, kAllSubgroups };

/// Given |X^D| per class of S x S, whether |X^D| = |X^(phi x id)(D)| for all
/// D <= P x S (left twist), where P is the domain of phi.
bool left_twist_agrees(const SquareContext& ctx, std::span<const mpq_class> fix,
                       const GroupMap& phi, Quantifier q);
/// Mirror: D <= S x P against (id x phi)(D).
bool right_twist_agrees(const SquareContext& ctx, std::span<const mpq_class> fix,
                        const GroupMap& phi, Quantifier q);

/// Every orbit has type S x_(P, phi) S with phi in F. NotABiset unless the
/// coefficients are nonnegative integers.
bool is_f_generated(const FusionSystem& f, const SquareContext& ctx, const VirtualGSet& x);
bool is_left_stable(const FusionSystem& f, const SquareContext& ctx, const VirtualGSet& x,
                    Quantifier q = Quantifier::kTwistedDiagonals);
bool is_right_stable(const FusionSystem& f, const SquareContext& ctx, const VirtualGSet& x,
                     Quantifier q = Quantifier::kTwistedDiagonals);
/// Coefficient of Delta(S, id) is at least 1.
bool contains_identity_orbit(const SquareContext& ctx, const VirtualGSet& x);

/// One line per support class in class order:
///   class Δ(P=0,1, phi=0->0,1->2) coeff 1/2
/// Classes that are not twisted diagonals print as `class D=(a,b),...`.
std::string serialize(const SquareContext& ctx, const VirtualGSet& v);

}  // namespace semichar
