#include "semichar/stabilize.hpp"

#include <algorithm>
#include <numeric>

#include "semichar/errors.hpp"
#include "semichar/kernels.hpp"

namespace semichar {

void check_h_closed(const SubgroupLattice& l, const ClassPartition& blocks,
                    const std::vector<char>& in_h) {
  if (in_h.size() != l.num_classes() || blocks.block_of.size() != l.num_classes()) {
    throw HNotClosed("membership vector does not match the lattice");
  }
  for (const auto& block : blocks.blocks) {
    for (auto c : block) {
      if (in_h[c] != in_h[block.front()]) {
        throw HNotClosed("classes " + std::to_string(block.front()) + " and " + std::to_string(c) +
                         " are conjugate but only one lies in H");
      }
    }
  }
  std::vector<std::uint8_t> below(l.size());
  for (ClassId c = 0; c < l.num_classes(); ++c) {
    if (!in_h[c]) continue;
    kernels::contained_flags(l.masks(), l.masks()[l.class_rep(c)], below);
    for (SubgroupId d = 0; d < l.size(); ++d) {
      if (below[d] && !in_h[l.class_of(d)]) {
        throw HNotClosed("class " + std::to_string(l.class_of(d)) + " lies below class " +
                         std::to_string(c) + " in H but is not in H");
      }
    }
  }
}

VirtualGSet stabilize(const ClassPartition& blocks, const std::vector<char>& in_h,
                      const VirtualGSet& x0) {
  const auto& l = x0.ambient();
  check_h_closed(l, blocks, in_h);

  {
    const auto fix = all_fixed_counts(x0);
    for (const auto& block : blocks.blocks) {
      if (in_h[block.front()]) continue;
      for (auto c : block) {
        if (fix[c] != fix[block.front()]) {
          throw PreconditionViolated("counts differ outside H: class " +
                                     std::to_string(block.front()) + " has " +
                                     fix[block.front()].get_str() + ", class " + std::to_string(c) +
                                     " has " + fix[c].get_str());
        }
      }
    }
  }

  auto block_order = [&](std::size_t b) { return l.subgroup(l.class_rep(blocks.blocks[b].front())).order(); };
  std::vector<std::size_t> todo;
  for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
    if (in_h[blocks.blocks[b].front()]) todo.push_back(b);
  }
  std::stable_sort(todo.begin(), todo.end(), [&](std::size_t a, std::size_t b) {
    const auto oa = block_order(a), ob = block_order(b);
    if (oa != ob) return oa > ob;
    return blocks.blocks[a].front() < blocks.blocks[b].front();
  });

  VirtualGSet x = x0;
  for (auto b : todo) {
    const auto& block = blocks.blocks[b];
    if (block.size() == 1) continue;
    std::vector<mpq_class> fix;
    fix.reserve(block.size());
    for (auto c : block) fix.push_back(fixed_count(x, c));
    const auto top = *std::max_element(fix.begin(), fix.end());
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (fix[i] == top) continue;
      const auto rep = l.class_rep(block[i]);
      const auto weyl = l.normalizer_order(rep) / l.subgroup(rep).order();
      x.add(block[i], (top - fix[i]) / mpq_class(static_cast<unsigned long>(weyl)));
    }
  }
  return x;
}

StabilizeCheck check_stabilized(const ClassPartition& blocks, const std::vector<char>& in_h,
                                const VirtualGSet& x0, const VirtualGSet& x) {
  StabilizeCheck out;
  const auto f0 = all_fixed_counts(x0);
  const auto f = all_fixed_counts(x);
  for (const auto& block : blocks.blocks) {
    for (auto c : block) {
      if (f[c] != f[block.front()]) out.block_constant = false;
      if (!in_h[c] && f[c] != f0[c]) out.agrees_outside_h = false;
    }
  }
  const auto diff = x - x0;
  for (const auto& [c, q] : diff.coeffs()) {
    if (q < 0) out.nonnegative_increment = false;
  }
  return out;
}

VirtualGSet random_admissible(const ClassPartition& blocks, const std::vector<char>& in_h,
                              const VirtualGSet& base, std::mt19937_64& rng) {
  const auto& l = base.ambient();
  std::uniform_int_distribution<long> num(0, 6);
  std::uniform_int_distribution<unsigned long> den(1, 6);
  std::uniform_int_distribution<int> coin(0, 2);
  auto rational = [&] {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };

  VirtualGSet x = base.scaled(mpq_class(static_cast<long>(den(rng))));
  for (const auto& block : blocks.blocks) {
    if (!in_h[block.front()]) continue;
    for (auto c : block) {
      if (coin(rng) == 0) x.add(c, rational());
    }
  }
  x.add(l.class_of(l.whole()), rational());
  return x;
}

}  // namespace semichar
