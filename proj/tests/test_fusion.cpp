#include <gtest/gtest.h>

#include "oracle.hpp"
#include "semichar/catalog.hpp"
#include "semichar/errors.hpp"
#include "semichar/fusion.hpp"
#include "semichar/square.hpp"

namespace semichar {
namespace {

using Pairs = std::vector<std::pair<Element, Element>>;

// V4 = C2 x C2 with P1 = {0,1}, P2 = {0,2}, P3 = {0,3}.
struct V4Fixture {
  FiniteGroup g = direct_product(cyclic_group(2), cyclic_group(2));
  std::shared_ptr<const SubgroupLattice> l = all_subgroups(g);
  SubgroupId p1 = l->id_of(Subgroup::from_elements(g, std::vector<Element>{0, 1}).mask());
  SubgroupId p2 = l->id_of(Subgroup::from_elements(g, std::vector<Element>{0, 2}).mask());
  SubgroupId p3 = l->id_of(Subgroup::from_elements(g, std::vector<Element>{0, 3}).mask());
  GroupMap alpha = GroupMap::from_pairs(g, Pairs{{0, 0}, {1, 2}, {2, 3}, {3, 1}}, g.all_elements());
  GroupMap phi = GroupMap::from_pairs(g, Pairs{{0, 0}, {1, 2}}, g.all_elements());
  FusionSystem with_alpha() const { return close_fusion(l, std::vector<GroupMap>{alpha}); }
  FusionSystem with_phi() const { return close_fusion(l, std::vector<GroupMap>{phi}); }
};

TEST(InnerFusion, AbelianIsInclusionsOnly) {
  for (const char* name : {"c2", "c4", "v4", "c4xc2", "c3xc3"}) {
    const auto f = catalog_entry(name).fusion();
    const auto& l = f.lattice();
    for (SubgroupId p = 0; p < l.size(); ++p) {
      for (SubgroupId q = 0; q < l.size(); ++q) {
        const auto homs = f.homs(p, q);
        if (l.subgroup(p).is_subgroup_of(l.subgroup(q))) {
          ASSERT_EQ(homs.size(), 1u);
          EXPECT_TRUE(homs.front().is_identity());
        } else {
          EXPECT_TRUE(homs.empty());
        }
      }
    }
  }
}

TEST(InnerFusion, Counts) {
  // C2: Hom(1,1), Hom(1,C2), Hom(C2,C2) hold one map each and Hom(C2,1) is empty
  const auto c2 = catalog_entry("c2").fusion();
  std::size_t by_hand = 0;
  for (SubgroupId p = 0; p < 2; ++p) {
    for (SubgroupId q = 0; q < 2; ++q) by_hand += c2.homs(p, q).size();
  }
  EXPECT_EQ(by_hand, 3u);
  EXPECT_EQ(c2.total_morphisms(), 3u);

  const auto d8 = catalog_entry("d8").fusion();
  EXPECT_EQ(d8.automorphisms().size(), 4u);
}

TEST(CloseFusion, EmptyGeneratorsGiveInner) {
  for (const auto& e : catalog()) {
    const auto l = all_subgroups(e.group);
    EXPECT_EQ(close_fusion(l, {}), inner_fusion(l)) << e.name;
  }
}

TEST(CloseFusion, V4Alpha) {
  V4Fixture v;
  const auto f = v.with_alpha();
  const auto whole = v.l->whole();
  EXPECT_EQ(f.automorphisms().size(), 3u);
  const auto a2 = v.alpha.then(v.alpha);
  EXPECT_TRUE(f.contains(v.alpha));
  EXPECT_TRUE(f.contains(a2));
  EXPECT_EQ(f.homs(whole, whole).size(), 3u);
  for (auto p : {v.p1, v.p2, v.p3}) {
    for (auto q : {v.p1, v.p2, v.p3}) EXPECT_EQ(f.homs(p, q).size(), 1u);
  }
}

TEST(CloseFusion, V4PartialIsNotSaturatedButClosed) {
  V4Fixture v;
  const auto f = v.with_phi();
  const auto p12 = f.homs(v.p1, v.p2);
  ASSERT_EQ(p12.size(), 1u);
  EXPECT_EQ(p12.front()(1), 2);
  const auto p21 = f.homs(v.p2, v.p1);
  ASSERT_EQ(p21.size(), 1u);
  EXPECT_EQ(p21.front()(2), 1);
  for (auto other : {v.p1, v.p2}) {
    EXPECT_TRUE(f.homs(v.p3, other).empty());
    EXPECT_TRUE(f.homs(other, v.p3).empty());
  }
  EXPECT_EQ(f.automorphisms().size(), 1u);
  EXPECT_TRUE(audit_fusion_system(f).ok());
}

TEST(CloseFusion, RejectsBadGenerators) {
  V4Fixture v;
  const GroupMap not_hom(v.l->subgroup(v.l->whole()), v.g.all_elements(), {0, 1, 1, 0});
  EXPECT_THROW(close_fusion(v.l, std::vector<GroupMap>{not_hom}), InvalidGenerator);
}

TEST(CloseFusion, Idempotent) {
  for (const auto& e : catalog()) {
    const auto f = e.fusion();
    std::vector<GroupMap> all;
    for (SubgroupId p = 0; p < f.lattice().size(); ++p) {
      all.insert(all.end(), f.homs_to_base(p).begin(), f.homs_to_base(p).end());
    }
    EXPECT_EQ(close_fusion(f.lattice_ptr(), all), f) << e.name;
  }
}

TEST(CloseFusion, ContainsInnerAndPassesAudit) {
  for (const auto& e : catalog()) {
    const auto f = e.fusion();
    const auto inner = inner_fusion(f.lattice_ptr());
    for (SubgroupId p = 0; p < f.lattice().size(); ++p) {
      for (const auto& m : inner.homs_to_base(p)) EXPECT_TRUE(f.contains(m)) << e.name;
    }
    EXPECT_TRUE(audit_fusion_system(f).ok()) << e.name;
  }
}

TEST(Audit, DetectsMissingMaps) {
  const auto l = all_subgroups(dihedral8());
  std::vector<std::set<GroupMap>> only_identities(l->size());
  for (SubgroupId p = 0; p < l->size(); ++p) {
    only_identities[p].insert(GroupMap::identity(l->group(), l->subgroup(p)).with_codomain(l->group().all_elements()));
  }
  const FusionSystem f(l, only_identities);
  const auto audit = audit_fusion_system(f);
  EXPECT_FALSE(audit.contains_inner);
  EXPECT_FALSE(audit.ok());
}

TEST(FusionSystem, RequiresPGroup) {
  EXPECT_THROW(inner_fusion(all_subgroups(cyclic_group(6))), NotAPGroup);
  EXPECT_NO_THROW(inner_fusion(all_subgroups(cyclic_group(1))));
}

// Hom_F(P, S) computed by scanning the overgroup directly.
std::vector<std::set<std::vector<Element>>> scan_overgroup(const CatalogEntry& e) {
  const auto& over = std::get<CatalogEntry::Overgroup>(e.fusion_source);
  const auto& g = over.group;
  const auto l = all_subgroups(e.group);
  std::vector<Element> back(g.order(), GroupMap::kUnmapped);
  for (std::size_t i = 0; i < over.embedding.size(); ++i) back[over.embedding[i]] = static_cast<Element>(i);
  std::vector<std::set<std::vector<Element>>> out(l->size());
  for (SubgroupId p = 0; p < l->size(); ++p) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::vector<Element> images(e.group.order(), GroupMap::kUnmapped);
      bool inside = true;
      for (auto u : l->subgroup(p).elements()) {
        const auto c = back[g.conj(static_cast<Element>(x), over.embedding[u])];
        if (c == GroupMap::kUnmapped) inside = false;
        images[u] = c;
      }
      if (inside) out[p].insert(images);
    }
  }
  return out;
}

TEST(FusionOfSubgroup, MatchesOvergroupScan) {
  for (const char* name : {"d8_s4", "q8_sl23"}) {
    const auto& e = catalog_entry(name);
    const auto f = e.fusion();
    const auto expected = scan_overgroup(e);
    for (SubgroupId p = 0; p < f.lattice().size(); ++p) {
      std::set<std::vector<Element>> got;
      for (const auto& m : f.homs_to_base(p)) got.emplace(m.images().begin(), m.images().end());
      EXPECT_EQ(got, expected[p]) << name << " subgroup " << p;
    }
    EXPECT_TRUE(audit_fusion_system(f).ok());
  }
}

TEST(FusionOfSubgroup, SelfIsInner) {
  for (const auto& g : {dihedral8(), quaternion8(), cyclic_group(4)}) {
    const auto l = all_subgroups(g);
    EXPECT_EQ(fusion_of_subgroup(g, l->subgroup(l->whole())), inner_fusion(l));
  }
}

TEST(FusionOfSubgroup, A4MatchesAlphaClosure) {
  const auto a4 = alternating4();
  const auto v4 = elements_of_order_dividing(a4, 2);
  ASSERT_EQ(v4.order(), 4u);
  const auto f = fusion_of_subgroup(a4, v4);
  V4Fixture v;
  ASSERT_EQ(f.base(), v.g);
  EXPECT_EQ(f, v.with_alpha());
  EXPECT_EQ(f_classes(f), f_classes(v.with_alpha()));
}

TEST(FusionOfSubgroup, S4FusesKleinInvolutionsAsConjugation) {
  const auto& e = catalog_entry("d8_s4");
  const auto f = e.fusion();
  const auto& over = std::get<CatalogEntry::Overgroup>(e.fusion_source);
  const auto& s = f.base();
  for (std::size_t a = 1; a < s.order(); ++a) {
    for (std::size_t b = 1; b < s.order(); ++b) {
      const auto ea = static_cast<Element>(a), eb = static_cast<Element>(b);
      bool scan = false;
      for (std::size_t x = 0; x < over.group.order(); ++x) {
        scan = scan || over.group.conj(static_cast<Element>(x), over.embedding[a]) == over.embedding[b];
      }
      const auto cyc = f.lattice().id_of(generated_mask(s, std::vector<Element>{ea}));
      bool fused = false;
      for (const auto& m : f.homs_to_base(cyc)) fused = fused || m(ea) == eb;
      EXPECT_EQ(fused, scan) << a << " " << b;
    }
  }
}

TEST(FClasses, Examples) {
  V4Fixture v;
  auto classes = f_classes(v.with_alpha());
  ASSERT_EQ(classes.size(), 3u);
  EXPECT_EQ(classes[1], (std::vector<SubgroupId>{v.p1, v.p2, v.p3}));
  classes = f_classes(v.with_phi());
  ASSERT_EQ(classes.size(), 4u);
  EXPECT_EQ(classes[1], (std::vector<SubgroupId>{v.p1, v.p2}));
  EXPECT_EQ(classes[2], (std::vector<SubgroupId>{v.p3}));

  const auto d8 = catalog_entry("d8").fusion();
  std::vector<std::vector<SubgroupId>> by_lattice;
  for (ClassId c = 0; c < d8.lattice().num_classes(); ++c) {
    const auto m = d8.lattice().class_members(c);
    by_lattice.emplace_back(m.begin(), m.end());
  }
  EXPECT_EQ(f_classes(d8), by_lattice);
}

TEST(OutReps, Examples) {
  V4Fixture v;
  EXPECT_EQ(out_reps(v.with_phi()).size(), 1u);
  const auto reps = out_reps(v.with_alpha());
  ASSERT_EQ(reps.size(), 3u);
  EXPECT_TRUE(reps.front().is_identity());
  for (const auto& e : catalog()) {
    if (!e.inner_only()) continue;
    const auto r = out_reps(e.fusion());
    ASSERT_EQ(r.size(), 1u) << e.name;
    EXPECT_TRUE(r.front().is_identity());
  }
}

TEST(OutReps, DiagonalClassDependsOnlyOnCoset) {
  // Aut(D8) has order 8, Inn(D8) order 4
  const auto l = all_subgroups(dihedral8());
  const auto& whole = l->subgroup(l->whole());
  const auto f = close_fusion(l, monomorphisms(l->group(), whole, whole));
  EXPECT_EQ(f.automorphisms().size(), 8u);
  const auto reps = out_reps(f);
  ASSERT_EQ(reps.size(), 2u);
  const auto ctx = SquareContext::create(l);
  std::set<ClassId> rep_classes;
  for (const auto& r : reps) rep_classes.insert(ctx->gamma().class_of(ctx->diagonal_of(r)));
  EXPECT_EQ(rep_classes.size(), 2u);
  for (const auto& a : f.automorphisms()) {
    for (std::size_t x = 0; x < 8; ++x) {
      const auto inner = GroupMap::conjugation(l->group(), whole, static_cast<Element>(x), whole.mask());
      const auto twisted = a.then(inner);
      EXPECT_EQ(ctx->gamma().class_of(ctx->diagonal_of(twisted)),
                ctx->gamma().class_of(ctx->diagonal_of(a)));
    }
    EXPECT_TRUE(rep_classes.contains(ctx->gamma().class_of(ctx->diagonal_of(a))));
  }
}

TEST(ProductConjugate, Examples) {
  V4Fixture v;
  const auto ctx = SquareContext::create(v.l);
  const auto fa = v.with_alpha();
  const auto id = GroupMap::identity(v.g, v.l->subgroup(v.l->whole()));
  const auto& gm = ctx->gamma().masks();
  const auto diag_id = gm[ctx->diagonal_of(id)];
  EXPECT_TRUE(product_conjugate(fa, *ctx, diag_id, diag_id));
  EXPECT_TRUE(product_conjugate(fa, *ctx, diag_id, gm[ctx->diagonal_of(v.alpha)]));

  const auto fp = v.with_phi();
  const auto incl3 = GroupMap::identity(v.g, v.l->subgroup(v.p3));
  const auto incl1 = GroupMap::identity(v.g, v.l->subgroup(v.p1));
  EXPECT_FALSE(product_conjugate(fp, *ctx, gm[ctx->diagonal_of(incl3)], gm[ctx->diagonal_of(incl1)]));
  EXPECT_THROW(product_conjugate(fp, *ctx, ElementMask::single(1), diag_id), DomainError);
}

TEST(ProductConjugate, EquivalenceMatchingOrbitOracle) {
  V4Fixture v;
  std::vector<FusionSystem> systems{v.with_alpha(), v.with_phi(), inner_fusion(v.l)};
  for (const char* name : {"c2", "c3", "c4", "c4_aut"}) systems.push_back(catalog_entry(name).fusion());
  for (const auto& f : systems) {
    const auto ctx = SquareContext::create(f.lattice_ptr());
    const auto& gl = ctx->gamma();
    const auto blocks = product_classes(f, *ctx);
    std::vector<ElementMask> subs(gl.masks().begin(), gl.masks().end());
    const auto labels = oracle::product_orbits(f, subs);
    for (SubgroupId d = 0; d < gl.size(); ++d) {
      for (SubgroupId e = 0; e < gl.size(); ++e) {
        const bool rel = product_conjugate(f, *ctx, subs[d], subs[e]);
        EXPECT_EQ(rel, labels[d] == labels[e]);
        EXPECT_EQ(rel, blocks.block_of[gl.class_of(d)] == blocks.block_of[gl.class_of(e)]);
      }
    }
  }
}

TEST(ProductClasses, MatchOrbitOracleOnCatalog) {
  for (const auto& e : catalog()) {
    const auto f = e.fusion();
    const auto ctx = SquareContext::create(f.lattice_ptr());
    const auto& gl = ctx->gamma();
    const auto blocks = product_classes(f, *ctx);
    std::vector<ElementMask> subs(gl.masks().begin(), gl.masks().end());
    const auto labels = oracle::product_orbits(f, subs);
    // same partition: label -> block is a bijection
    std::map<std::size_t, std::size_t> label_to_block, block_to_label;
    for (SubgroupId d = 0; d < gl.size(); ++d) {
      const auto b = blocks.block_of[gl.class_of(d)];
      EXPECT_EQ(label_to_block.emplace(labels[d], b).first->second, b) << e.name;
      EXPECT_EQ(block_to_label.emplace(b, labels[d]).first->second, labels[d]) << e.name;
    }
  }
}

TEST(ParseFusionGenerators, Valid) {
  V4Fixture v;
  const auto gens = parse_fusion_generators("# comment\n\ngen: 0->0, 1->2\ngen:0->0,1->2,2->3,3->1\n", v.g);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0].with_codomain(v.g.all_elements()), v.phi);
  EXPECT_EQ(gens[1], v.alpha);
}

TEST(ParseFusionGenerators, Errors) {
  V4Fixture v;
  EXPECT_THROW(parse_fusion_generators("map: 0->0\n", v.g), ParseError);
  EXPECT_THROW(parse_fusion_generators("gen: 0->\n", v.g), ParseError);
  EXPECT_THROW(parse_fusion_generators("gen: 0->0, 1=>2\n", v.g), ParseError);
  // {0, 1, 2} is not a subgroup
  EXPECT_THROW(parse_fusion_generators("gen: 0->0, 1->1, 2->2\n", v.g), InvalidGenerator);
  // not a homomorphism
  EXPECT_THROW(parse_fusion_generators("gen: 0->1, 1->0\n", v.g), InvalidGenerator);
  EXPECT_THROW(parse_fusion_generators("gen: 0->0, 1->9\n", v.g), Error);
}

}  // namespace
}  // namespace semichar
