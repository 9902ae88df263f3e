#pragma once

// Stabilizing a virtual G-set with respect to a fusion-type equivalence on
// conjugacy classes of subgroups, by adding nonnegative rational multiples
// of transitive G-sets G/P' for the classes in a down-closed family H.
//
// The routine is generic over the ambient group: the relation is passed in
// as a partition of the classes (for bisets, the F x F_S(S) classes on
// S x S).

#include <random>
#include <vector>

#include "semichar/burnside.hpp"
#include "semichar/lattice.hpp"

namespace semichar {

/// Throws HNotClosed unless `in_h` (indexed by ClassId) is a union of blocks
/// and is closed under taking subgroups.
void check_h_closed(const SubgroupLattice& l, const ClassPartition& blocks,
                    const std::vector<char>& in_h);

/// Returns X with |X^D| constant on every block, |X^D| = |X0^D| for D
/// outside H, and X - X0 supported on H with nonnegative coefficients.
///
/// Blocks in H are processed by decreasing subgroup order, ties by least
/// class id. Within a block the class P with the largest current count
/// (first on ties) is the target, and each class P' of the block receives
/// (|X^P| - |X^P'|) / |N(P') / P'| copies of G/P'.
///
/// Throws PreconditionViolated with a witness pair if |X0^D| is not
/// constant on some block outside H; HNotClosed as check_h_closed.
VirtualGSet stabilize(const ClassPartition& blocks, const std::vector<char>& in_h,
                      const VirtualGSet& x0);

struct StabilizeCheck {
  bool block_constant = true;
  bool agrees_outside_h = true;
  bool nonnegative_increment = true;
  bool ok() const { return block_constant && agrees_outside_h && nonnegative_increment; }
};

StabilizeCheck check_stabilized(const ClassPartition& blocks, const std::vector<char>& in_h,
                                const VirtualGSet& x0, const VirtualGSet& x);

/// A random X0 meeting the precondition of stabilize: c * base plus random
/// nonnegative rational multiples of G/Q for Q in H, plus a multiple of
/// G/G. `base` must already be constant on the blocks outside H.
VirtualGSet random_admissible(const ClassPartition& blocks, const std::vector<char>& in_h,
                              const VirtualGSet& base, std::mt19937_64& rng);

}  // namespace semichar
