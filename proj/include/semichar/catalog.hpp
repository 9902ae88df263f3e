#pragma once

// Built-in groups and fusion systems.

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "semichar/fusion.hpp"
#include "semichar/group.hpp"

namespace semichar {

FiniteGroup cyclic_group(std::size_t n);
/// Elements (g, h) encoded as g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup dihedral8();
FiniteGroup quaternion8();
FiniteGroup alternating4();
FiniteGroup symmetric4();
FiniteGroup sl2_3();

/// Elements of `g` of order dividing `n`, when they form a subgroup.
Subgroup elements_of_order_dividing(const FiniteGroup& g, std::size_t n);

struct CatalogEntry {
  using MapPairs = std::vector<std::pair<Element, Element>>;
  struct Overgroup {
    FiniteGroup group;
    std::vector<Element> embedding;  // element i of S is embedding[i]
  };

  std::string name;
  std::string description;
  FiniteGroup group;
  std::variant<std::vector<MapPairs>, Overgroup> fusion_source;
  bool expect_saturated_source = true;  // informational

  FusionSystem fusion() const;
  bool inner_only() const;
};

const std::vector<CatalogEntry>& catalog();
/// Throws UnknownCatalogEntry.
const CatalogEntry& catalog_entry(std::string_view name);

}  // namespace semichar
