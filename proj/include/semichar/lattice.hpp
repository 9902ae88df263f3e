#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "semichar/element_mask.hpp"
#include "semichar/group.hpp"

namespace semichar {

using SubgroupId = std::uint32_t;
using ClassId = std::uint32_t;

/// Every subgroup of a finite group, in canonical order (size, then sorted
/// elements), partitioned into conjugacy classes. Class ids follow the
/// canonical order of their representatives, and each representative is the
/// lexicographically least member of its class.
///
/// Also serves as the table of marks of the group: mark(d, z) is the number
/// of points of G/Z fixed by D, computed per column on first use.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(FiniteGroup g);

  SubgroupLattice(const SubgroupLattice&) = delete;
  SubgroupLattice& operator=(const SubgroupLattice&) = delete;

  const FiniteGroup& group() const { return group_; }

  std::size_t size() const { return subgroups_.size(); }
  const Subgroup& subgroup(SubgroupId id) const { return subgroups_[id]; }
  std::span<const Subgroup> subgroups() const { return subgroups_; }
  std::span<const ElementMask> masks() const { return masks_; }
  std::span<const Element> generators(SubgroupId id) const { return generators_[id]; }

  std::optional<SubgroupId> find(const ElementMask& m) const;
  /// Throws DomainError if `m` is not a subgroup.
  SubgroupId id_of(const ElementMask& m) const;
  SubgroupId trivial() const { return 0; }
  SubgroupId whole() const { return static_cast<SubgroupId>(subgroups_.size() - 1); }

  std::size_t num_classes() const { return class_reps_.size(); }
  ClassId class_of(SubgroupId id) const { return class_of_[id]; }
  SubgroupId class_rep(ClassId c) const { return class_reps_[c]; }
  std::span<const SubgroupId> class_members(ClassId c) const;
  /// Member masks of class c, contiguous.
  std::span<const ElementMask> class_masks(ClassId c) const;
  std::size_t normalizer_order(SubgroupId id) const {
    return group_.order() / class_members(class_of_[id]).size();
  }
  SubgroupId conjugate(SubgroupId id, Element g) const;

  /// |(G/Z)^D| for D in class d and Z the representative of class z.
  std::int64_t mark(ClassId d, ClassId z) const { return mark_column(z)[d]; }
  std::span<const std::int64_t> mark_column(ClassId z) const;

 private:
  FiniteGroup group_;
  std::vector<Subgroup> subgroups_;
  std::vector<ElementMask> masks_;
  std::vector<std::vector<Element>> generators_;
  std::unordered_map<ElementMask, SubgroupId, ElementMaskHash> index_;
  std::vector<ClassId> class_of_;
  std::vector<SubgroupId> class_reps_;
  std::vector<SubgroupId> members_;       // grouped by class
  std::vector<ElementMask> member_masks_;  // parallel to members_
  std::vector<std::size_t> class_start_;  // num_classes + 1 offsets

  mutable std::mutex marks_mutex_;
  mutable std::vector<std::unique_ptr<std::vector<std::int64_t>>> mark_columns_;
};

/// Subgroup lattice with conjugacy classes.
std::shared_ptr<const SubgroupLattice> all_subgroups(FiniteGroup g);


/// A partition of the conjugacy classes of a lattice into blocks, e.g. the
/// fusion classes of a fusion system. Blocks are sorted internally and
/// listed by their least class id.
struct ClassPartition {
  std::vector<std::vector<ClassId>> blocks;
  std::vector<std::size_t> block_of;  // indexed by ClassId
};

}  // namespace semichar
