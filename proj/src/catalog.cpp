#include "semichar/catalog.hpp"

#include <array>
#include <map>

#include "semichar/errors.hpp"
#include "semichar/lattice.hpp"

namespace semichar {

namespace {

// Cayley table of the group generated by `gens` under `op`, elements
// numbered breadth-first from `identity`.
template <typename T, typename Op>
FiniteGroup closure_table(const T& identity, const std::vector<T>& gens, Op op) {
  std::vector<T> elems{identity};
  std::map<T, Element> index{{identity, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      auto y = op(elems[i], g);
      if (index.emplace(y, static_cast<Element>(elems.size())).second) elems.push_back(y);
    }
  }
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(op(elems[a], elems[b]));
  }
  return FiniteGroup::from_table(n, std::move(table));
}

using Perm4 = std::array<int, 4>;

// (p * q)(i) = p(q(i))
Perm4 compose(const Perm4& p, const Perm4& q) {
  Perm4 r{};
  for (int i = 0; i < 4; ++i) r[i] = p[q[i]];
  return r;
}

using Mat = std::array<int, 4>;  // row-major 2x2 over F_3

Mat mat_mul(const Mat& a, const Mat& b) {
  return {(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3,
          (a[2] * b[0] + a[3] * b[2]) % 3, (a[2] * b[1] + a[3] * b[3]) % 3};
}

constexpr Mat kMatId{1, 0, 0, 1};
constexpr Mat kQuatI{0, 2, 1, 0};  // [[0,-1],[1,0]]
constexpr Mat kQuatJ{1, 1, 1, 2};  // [[1,1],[1,-1]]
constexpr Mat kOrder3{1, 1, 0, 1};

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup::from_table(n, std::move(table));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto g = a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      const auto h = b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      table[x * n + y] = static_cast<Element>(g * nb + h);
    }
  }
  return FiniteGroup::from_table(n, std::move(table));
}

FiniteGroup dihedral8() {
  return closure_table(Perm4{0, 1, 2, 3}, {Perm4{1, 2, 3, 0}, Perm4{2, 1, 0, 3}}, compose);
}

FiniteGroup quaternion8() { return closure_table(kMatId, {kQuatI, kQuatJ}, mat_mul); }

FiniteGroup alternating4() {
  return closure_table(Perm4{0, 1, 2, 3}, {Perm4{1, 2, 0, 3}, Perm4{1, 0, 3, 2}}, compose);
}

FiniteGroup symmetric4() {
  // elements 1 and 2 are (0 1 2 3) and (0 2), generating the dihedral
  // subgroup of the square 0-1-2-3
  return closure_table(Perm4{0, 1, 2, 3},
                       {Perm4{1, 2, 3, 0}, Perm4{2, 1, 0, 3}, Perm4{1, 0, 2, 3}}, compose);
}

FiniteGroup sl2_3() { return closure_table(kMatId, {kQuatI, kQuatJ, kOrder3}, mat_mul); }

Subgroup elements_of_order_dividing(const FiniteGroup& g, std::size_t n) {
  ElementMask m;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (n % g.element_order(static_cast<Element>(x)) == 0) m.set(static_cast<Element>(x));
  }
  return Subgroup::from_mask(g, m);
}

FusionSystem CatalogEntry::fusion() const {
  if (const auto* over = std::get_if<Overgroup>(&fusion_source)) {
    return fusion_from_embedding(over->group, over->embedding);
  }
  const auto& gens = std::get<std::vector<MapPairs>>(fusion_source);
  std::vector<GroupMap> maps;
  for (const auto& pairs : gens) {
    maps.push_back(GroupMap::from_pairs(group, pairs, group.all_elements()));
  }
  return close_fusion(all_subgroups(group), maps);
}

bool CatalogEntry::inner_only() const {
  const auto* gens = std::get_if<std::vector<MapPairs>>(&fusion_source);
  return gens && gens->empty();
}

namespace {

CatalogEntry inner(std::string name, std::string description, FiniteGroup g) {
  return CatalogEntry{std::move(name), std::move(description), std::move(g),
                      std::vector<CatalogEntry::MapPairs>{}, true};
}

CatalogEntry generated(std::string name, std::string description, FiniteGroup g,
                       std::vector<CatalogEntry::MapPairs> gens, bool saturated) {
  return CatalogEntry{std::move(name), std::move(description), std::move(g), std::move(gens),
                      saturated};
}

CatalogEntry overgroup(std::string name, std::string description, FiniteGroup g,
                       const Subgroup& s) {
  auto embedding = s.elements();
  auto sgroup = induced_group(g, embedding);
  return CatalogEntry{std::move(name), std::move(description), std::move(sgroup),
                      CatalogEntry::Overgroup{std::move(g), std::move(embedding)}, true};
}

std::vector<CatalogEntry> build_catalog() {
  const auto c2 = cyclic_group(2);
  const auto c3 = cyclic_group(3);
  const auto c4 = cyclic_group(4);
  const auto v4 = direct_product(c2, c2);
  const auto c3xc3 = direct_product(c3, c3);

  std::vector<CatalogEntry> out;
  out.push_back(inner("c2", "C2, inner fusion", c2));
  out.push_back(inner("c3", "C3, inner fusion", c3));
  out.push_back(inner("c4", "C4, inner fusion", c4));
  out.push_back(inner("v4", "C2 x C2, inner fusion", v4));
  out.push_back(inner("c8", "C8, inner fusion", cyclic_group(8)));
  out.push_back(inner("c4xc2", "C4 x C2, inner fusion", direct_product(c4, c2)));
  out.push_back(inner("c2xc2xc2", "C2 x C2 x C2, inner fusion", direct_product(v4, c2)));
  out.push_back(inner("d8", "dihedral group of order 8, inner fusion", dihedral8()));
  out.push_back(inner("q8", "quaternion group, inner fusion", quaternion8()));
  out.push_back(inner("c9", "C9, inner fusion", cyclic_group(9)));
  out.push_back(inner("c3xc3", "C3 x C3, inner fusion", c3xc3));

  // V4 = {0, 1, 2, 3} with xor product; P1 = {0,1}, P2 = {0,2}, P3 = {0,3}.
  out.push_back(generated("v4_a4", "C2 x C2 with an automorphism of order 3 (as in A4)", v4,
                          {{{0, 0}, {1, 2}, {2, 3}, {3, 1}}}, true));
  {
    const auto s4 = symmetric4();
    out.push_back(overgroup("d8_s4", "Sylow 2-subgroup of S4, fusion from S4", s4,
                            generated_subgroup(s4, std::vector<Element>{1, 2})));
  }
  {
    const auto sl = sl2_3();
    out.push_back(overgroup("q8_sl23", "quaternion Sylow 2-subgroup of SL(2,3), fusion from SL(2,3)",
                            sl, elements_of_order_dividing(sl, 4)));
  }
  out.push_back(generated("v4_partial", "C2 x C2 with one isomorphism P1 -> P2 (not saturated)", v4,
                          {{{0, 0}, {1, 2}}}, false));
  out.push_back(generated("c3xc3_partial",
                          "C3 x C3 with one isomorphism <(1,0)> -> <(0,1)> (not saturated)", c3xc3,
                          {{{0, 0}, {3, 1}, {6, 2}}}, false));
  out.push_back(generated("c4_aut", "C4 with its inversion automorphism (not saturated)", c4,
                          {{{0, 0}, {1, 3}, {2, 2}, {3, 1}}}, false));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw UnknownCatalogEntry("no catalog entry named '" + std::string(name) + "'");
}

}  // namespace semichar
