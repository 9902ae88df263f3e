#include "semichar/fusion.hpp"

#include <algorithm>
#include <charconv>

#include "semichar/errors.hpp"

namespace semichar {

FusionSystem::FusionSystem(std::shared_ptr<const SubgroupLattice> base,
                           std::vector<std::set<GroupMap>> to_base)
    : lattice_(std::move(base)), to_base_(std::move(to_base)) {
  const auto n = lattice_->group().order();
  if (n > 1 && !lattice_->group().prime_power()) {
    throw NotAPGroup("fusion base of order " + std::to_string(n) + " is not a p-group");
  }
  if (to_base_.size() != lattice_->size()) to_base_.resize(lattice_->size());
}

std::vector<GroupMap> FusionSystem::homs(SubgroupId p, SubgroupId q) const {
  std::vector<GroupMap> out;
  const auto& qmask = lattice_->masks()[q];
  for (const auto& m : to_base_[p]) {
    if (m.image().is_subset_of(qmask)) out.push_back(m.with_codomain(qmask));
  }
  return out;
}

bool FusionSystem::contains(const GroupMap& m) const {
  auto id = lattice_->find(m.domain().mask());
  if (!id) return false;
  return to_base_[*id].contains(m.with_codomain(base().all_elements()));
}

std::size_t FusionSystem::total_morphisms() const {
  std::size_t total = 0;
  for (SubgroupId p = 0; p < lattice_->size(); ++p) {
    for (const auto& m : to_base_[p]) {
      const auto img = m.image();
      for (const auto& q : lattice_->masks()) {
        if (img.is_subset_of(q)) ++total;
      }
    }
  }
  return total;
}

namespace {

std::vector<std::set<GroupMap>> inner_maps(const SubgroupLattice& l) {
  const auto& s = l.group();
  const auto all = s.all_elements();
  std::vector<std::set<GroupMap>> maps(l.size());
  for (SubgroupId p = 0; p < l.size(); ++p) {
    for (std::size_t x = 0; x < s.order(); ++x) {
      maps[p].insert(GroupMap::conjugation(s, l.subgroup(p), static_cast<Element>(x), all));
    }
  }
  return maps;
}

// Subgroups strictly below each subgroup.
std::vector<std::vector<SubgroupId>> proper_subgroups(const SubgroupLattice& l) {
  std::vector<std::vector<SubgroupId>> below(l.size());
  for (SubgroupId p = 0; p < l.size(); ++p) {
    for (SubgroupId r = 0; r < p; ++r) {
      if (l.masks()[r].is_subset_of(l.masks()[p])) below[p].push_back(r);
    }
  }
  return below;
}

}  // namespace

FusionAudit audit_fusion_system(const FusionSystem& f) {
  FusionAudit a;
  const auto& l = f.lattice();
  const auto& s = f.base();
  const auto all = s.all_elements();
  const auto below = proper_subgroups(l);
  for (SubgroupId p = 0; p < l.size(); ++p) {
    for (std::size_t x = 0; x < s.order(); ++x) {
      if (!f.homs_to_base(p).contains(
              GroupMap::conjugation(s, l.subgroup(p), static_cast<Element>(x), all))) {
        a.contains_inner = false;
      }
    }
    for (const auto& m : f.homs_to_base(p)) {
      if (!is_injective_homomorphism(s, m) || !(m.domain() == l.subgroup(p))) {
        a.injective_homomorphisms = false;
        continue;
      }
      const auto img = l.id_of(m.image());
      for (const auto& n : f.homs_to_base(img)) {
        if (!f.homs_to_base(p).contains(m.then(n))) a.closed_composition = false;
      }
      for (auto r : below[p]) {
        if (!f.homs_to_base(r).contains(m.restrict_to(l.subgroup(r)))) a.closed_restriction = false;
      }
      if (!f.homs_to_base(img).contains(m.inverse(s, all))) a.closed_inverse = false;
    }
  }
  return a;
}

FusionSystem inner_fusion(std::shared_ptr<const SubgroupLattice> s) {
  auto maps = inner_maps(*s);
  return FusionSystem(std::move(s), std::move(maps));
}

FusionSystem close_fusion(std::shared_ptr<const SubgroupLattice> s,
                          std::span<const GroupMap> generators) {
  const auto& l = *s;
  const auto& g = l.group();
  const auto all = g.all_elements();
  auto maps = inner_maps(l);
  for (const auto& gen : generators) {
    if (gen.images().size() != g.order() || !l.find(gen.domain().mask()) ||
        !is_injective_homomorphism(g, gen.with_codomain(all))) {
      throw InvalidGenerator("generator " + gen.to_string() +
                             " is not an injective homomorphism between subgroups of S");
    }
    maps[l.id_of(gen.domain().mask())].insert(gen.with_codomain(all));
  }
  const auto below = proper_subgroups(l);

  // Fixed point over composition, restriction, and iso-inverse.
  bool changed = true;
  while (changed) {
    changed = false;
    auto insert = [&](SubgroupId p, GroupMap m) {
      if (maps[p].insert(std::move(m)).second) changed = true;
    };
    for (SubgroupId p = 0; p < l.size(); ++p) {
      std::vector<GroupMap> found;
      for (const auto& m : maps[p]) {
        for (const auto& n : maps[l.id_of(m.image())]) found.push_back(m.then(n));
      }
      for (auto& m : found) insert(p, std::move(m));
    }
    for (SubgroupId p = 0; p < l.size(); ++p) {
      for (const auto& m : maps[p]) {
        for (auto r : below[p]) insert(r, m.restrict_to(l.subgroup(r)));
      }
    }
    for (SubgroupId p = 0; p < l.size(); ++p) {
      std::vector<std::pair<SubgroupId, GroupMap>> found;
      for (const auto& m : maps[p]) found.emplace_back(l.id_of(m.image()), m.inverse(g, all));
      for (auto& [q, m] : found) insert(q, std::move(m));
    }
  }
  return FusionSystem(std::move(s), std::move(maps));
}

FiniteGroup induced_group(const FiniteGroup& g, std::span<const Element> embedding) {
  const std::size_t n = embedding.size();
  if (n == 0 || embedding[0] != 0) throw DomainError("embedding must start with the identity");
  std::vector<Element> back(g.order(), GroupMap::kUnmapped);
  for (std::size_t i = 0; i < n; ++i) {
    if (embedding[i] >= g.order() || back[embedding[i]] != GroupMap::kUnmapped) {
      throw DomainError("embedding entries must be distinct elements of the overgroup");
    }
    back[embedding[i]] = static_cast<Element>(i);
  }
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto prod = back[g.mul(embedding[i], embedding[j])];
      if (prod == GroupMap::kUnmapped) throw DomainError("embedding does not span a subgroup");
      table[i * n + j] = prod;
    }
  }
  return FiniteGroup::from_table(n, std::move(table));
}

FusionSystem fusion_from_embedding(const FiniteGroup& g, std::span<const Element> embedding) {
  auto sgroup = induced_group(g, embedding);
  if (sgroup.order() > 1 && !sgroup.prime_power()) {
    throw NotAPGroup("subgroup of order " + std::to_string(sgroup.order()) + " is not a p-group");
  }
  std::vector<Element> back(g.order(), GroupMap::kUnmapped);
  for (std::size_t i = 0; i < embedding.size(); ++i) back[embedding[i]] = static_cast<Element>(i);

  auto lattice = all_subgroups(std::move(sgroup));
  const auto& l = *lattice;
  const auto all = l.group().all_elements();
  std::vector<std::set<GroupMap>> maps(l.size());
  for (SubgroupId p = 0; p < l.size(); ++p) {
    const auto& sub = l.subgroup(p);
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::vector<Element> images(l.group().order(), GroupMap::kUnmapped);
      bool inside = true;
      for (auto u : sub.elements()) {
        const auto v = back[g.conj(static_cast<Element>(x), embedding[u])];
        if (v == GroupMap::kUnmapped) {
          inside = false;
          break;
        }
        images[u] = v;
      }
      if (inside) maps[p].insert(GroupMap(sub, all, std::move(images)));
    }
  }
  return FusionSystem(std::move(lattice), std::move(maps));
}

FusionSystem fusion_of_subgroup(const FiniteGroup& g, const Subgroup& s) {
  if (!is_subgroup(g, s.mask())) throw DomainError("argument is not a subgroup");
  return fusion_from_embedding(g, s.elements());
}

std::vector<std::vector<SubgroupId>> f_classes(const FusionSystem& f) {
  const auto& l = f.lattice();
  std::vector<char> done(l.size(), 0);
  std::vector<std::vector<SubgroupId>> out;
  for (SubgroupId p = 0; p < l.size(); ++p) {
    if (done[p]) continue;
    std::vector<SubgroupId> cls;
    for (const auto& m : f.homs_to_base(p)) {
      const auto q = l.id_of(m.image());
      if (!done[q]) {
        done[q] = 1;
        cls.push_back(q);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<GroupMap> out_reps(const FusionSystem& f) {
  const auto& s = f.base();
  const auto& whole = f.lattice().subgroup(f.lattice().whole());
  const auto all = s.all_elements();
  std::set<GroupMap> inner;
  for (std::size_t x = 0; x < s.order(); ++x) {
    inner.insert(GroupMap::conjugation(s, whole, static_cast<Element>(x), all));
  }
  std::set<GroupMap> covered;
  std::vector<GroupMap> reps;
  for (const auto& a : f.automorphisms()) {  // ascending: identity first
    if (covered.contains(a)) continue;
    reps.push_back(a);
    for (const auto& c : inner) covered.insert(c.then(a));
  }
  return reps;
}

namespace {

// All images of D under F x F_S(S) product maps.
template <typename Visit>
void for_each_product_image(const FusionSystem& f, const SquareContext& ctx, SubgroupId d,
                            Visit&& visit) {
  const auto& s = ctx.s();
  std::vector<Element> cx(s.order());
  for (const auto& phi : f.homs_to_base(ctx.proj1(d))) {
    for (std::size_t x = 0; x < s.order(); ++x) {
      for (std::size_t b = 0; b < s.order(); ++b) {
        cx[b] = s.conj(static_cast<Element>(x), static_cast<Element>(b));
      }
      if (visit(ctx.map_pairs(d, phi.images(), cx))) return;
    }
  }
}

}  // namespace

bool product_conjugate(const FusionSystem& f, const SquareContext& ctx, const ElementMask& d,
                       const ElementMask& e) {
  const auto& gl = ctx.gamma();
  const auto did = gl.find(d);
  if (!did || !gl.find(e)) throw DomainError("product_conjugate: argument is not a subgroup of S x S");
  bool found = false;
  for_each_product_image(f, ctx, *did, [&](const ElementMask& img) {
    found = img == e;
    return found;
  });
  return found;
}

ClassPartition product_classes(const FusionSystem& f, const SquareContext& ctx) {
  const auto& gl = ctx.gamma();
  constexpr std::size_t kNone = ~std::size_t{0};
  ClassPartition part;
  part.block_of.assign(gl.num_classes(), kNone);
  for (ClassId c = 0; c < gl.num_classes(); ++c) {
    if (part.block_of[c] != kNone) continue;
    const auto b = part.blocks.size();
    part.blocks.emplace_back();
    auto& block = part.blocks.back();
    for_each_product_image(f, ctx, gl.class_rep(c), [&](const ElementMask& img) {
      const auto cls = gl.class_of(gl.id_of(img));
      if (part.block_of[cls] == kNone) {
        part.block_of[cls] = b;
        block.push_back(cls);
      }
      return false;
    });
    std::sort(block.begin(), block.end());
  }
  return part;
}


std::vector<GroupMap> parse_fusion_generators(std::string_view text, const FiniteGroup& s) {
  std::vector<GroupMap> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string_view::npos || line[b] == '#') continue;
    line = line.substr(b);
    if (!line.starts_with("gen:")) throw ParseError(line_no, "expected 'gen: a->b, ...'");
    line.remove_prefix(4);

    std::vector<std::pair<Element, Element>> pairs;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    };
    auto number = [&]() -> Element {
      skip_ws();
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
      if (ec != std::errc()) throw ParseError(line_no, "expected an element index");
      if (v >= s.order()) throw ParseError(line_no, "element " + std::to_string(v) + " out of range");
      i = static_cast<std::size_t>(ptr - line.data());
      return static_cast<Element>(v);
    };
    while (true) {
      const auto a = number();
      skip_ws();
      if (line.substr(i, 2) != "->") throw ParseError(line_no, "expected '->'");
      i += 2;
      const auto v = number();
      pairs.emplace_back(a, v);
      skip_ws();
      if (i == line.size()) break;
      if (line[i] != ',') throw ParseError(line_no, "expected ','");
      ++i;
    }
    try {
      out.push_back(GroupMap::from_pairs(s, pairs, s.all_elements()));
    } catch (const InvalidMorphism& e) {
      throw InvalidGenerator("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace semichar
