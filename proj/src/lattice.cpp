#include "semichar/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "semichar/errors.hpp"
#include "semichar/kernels.hpp"

namespace semichar {

namespace {

struct Found {
  ElementMask mask;
  std::vector<Element> gens;
};

}  // namespace

SubgroupLattice::SubgroupLattice(FiniteGroup g) : group_(std::move(g)) {
  const std::size_t n = group_.order();

  // Breadth-first joins: seed with the cyclic subgroups, then join every
  // found subgroup with every cyclic subgroup it does not contain.
  std::vector<Found> found;
  std::unordered_map<ElementMask, std::size_t, ElementMaskHash> seen;
  auto add = [&](const ElementMask& m, std::vector<Element> gens) {
    if (seen.emplace(m, found.size()).second) found.push_back({m, std::move(gens)});
  };
  add(ElementMask::single(0), {});
  std::vector<std::pair<Element, ElementMask>> cyclic;
  for (std::size_t x = 1; x < n; ++x) {
    const Element e = static_cast<Element>(x);
    const Element gen[] = {e};
    auto m = generated_mask(group_, gen);
    if (!seen.contains(m)) cyclic.emplace_back(e, m);
    add(m, {e});
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& [e, cm] : cyclic) {
      if (cm.is_subset_of(found[i].mask)) continue;
      auto gens = found[i].gens;
      gens.push_back(e);
      auto m = generated_mask(group_, gens);
      if (!seen.contains(m)) add(m, std::move(gens));
    }
  }

  std::vector<Subgroup> subs;
  subs.reserve(found.size());
  for (const auto& f : found) subs.push_back(Subgroup::trusted(f.mask));
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return subs[a] < subs[b]; });

  subgroups_.reserve(found.size());
  for (auto k : order) {
    const auto id = static_cast<SubgroupId>(subgroups_.size());
    subgroups_.push_back(subs[k]);
    masks_.push_back(found[k].mask);
    generators_.push_back(found[k].gens);
    index_.emplace(found[k].mask, id);
  }

  // Conjugacy classes; scanning in canonical order makes the first member
  // met the least one.
  constexpr ClassId kNone = ~ClassId{0};
  class_of_.assign(subgroups_.size(), kNone);
  std::vector<std::vector<SubgroupId>> classes;
  for (SubgroupId id = 0; id < subgroups_.size(); ++id) {
    if (class_of_[id] != kNone) continue;
    const auto c = static_cast<ClassId>(classes.size());
    classes.emplace_back();
    for (std::size_t x = 0; x < n; ++x) {
      const auto cm = conjugate_mask(group_, masks_[id], static_cast<Element>(x));
      const auto cid = index_.at(cm);
      if (class_of_[cid] == kNone) {
        class_of_[cid] = c;
        classes.back().push_back(cid);
      }
    }
    std::sort(classes.back().begin(), classes.back().end());
  }
  class_start_.push_back(0);
  for (const auto& cls : classes) {
    class_reps_.push_back(cls.front());
    for (auto id : cls) {
      members_.push_back(id);
      member_masks_.push_back(masks_[id]);
    }
    class_start_.push_back(members_.size());
  }
  mark_columns_.resize(classes.size());
}

std::optional<SubgroupId> SubgroupLattice::find(const ElementMask& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubgroupId SubgroupLattice::id_of(const ElementMask& m) const {
  if (auto id = find(m)) return *id;
  throw DomainError("element set is not a subgroup of the ambient group");
}

std::span<const SubgroupId> SubgroupLattice::class_members(ClassId c) const {
  return std::span<const SubgroupId>(members_).subspan(class_start_[c],
                                                       class_start_[c + 1] - class_start_[c]);
}

std::span<const ElementMask> SubgroupLattice::class_masks(ClassId c) const {
  return std::span<const ElementMask>(member_masks_)
      .subspan(class_start_[c], class_start_[c + 1] - class_start_[c]);
}

SubgroupId SubgroupLattice::conjugate(SubgroupId id, Element g) const {
  return index_.at(conjugate_mask(group_, masks_[id], g));
}

std::span<const std::int64_t> SubgroupLattice::mark_column(ClassId z) const {
  std::lock_guard lock(marks_mutex_);
  auto& slot = mark_columns_[z];
  if (!slot) {
    // |{g : g^-1 D g <= Z}| = |N(D)| * #{conjugates of D inside Z}
    const auto& zmask = masks_[class_reps_[z]];
    const auto zorder = static_cast<std::int64_t>(subgroups_[class_reps_[z]].order());
    auto col = std::make_unique<std::vector<std::int64_t>>(num_classes(), 0);
    for (ClassId d = 0; d < num_classes(); ++d) {
      const auto inside = kernels::count_contained(class_masks(d), zmask);
      if (inside == 0) continue;
      const auto count = static_cast<std::int64_t>(inside * normalizer_order(class_reps_[d]));
      (*col)[d] = count / zorder;
    }
    slot = std::move(col);
  }
  return *slot;
}

std::shared_ptr<const SubgroupLattice> all_subgroups(FiniteGroup g) {
  return std::make_shared<const SubgroupLattice>(std::move(g));
}

}  // namespace semichar
