#include "semichar/realization.hpp"

#include <set>

#include "semichar/errors.hpp"
#include "semichar/kernels.hpp"
#include "semichar/stabilize.hpp"

namespace semichar {

namespace {

// Explicit orbits are materialized up to this many points in total.
constexpr std::size_t kMaxExplicitPoints = std::size_t{1} << 22;

}  // namespace

SemicharBiset build_semichar(const FusionSystem& f, std::shared_ptr<const SquareContext> ctx) {
  if (!ctx) {
    ctx = SquareContext::create(f.lattice_ptr());
  } else if (!(ctx->s() == f.base())) {
    throw DomainError("square context was built for a different base group");
  }
  const auto& gl = ctx->gamma();
  const auto& s = f.base();

  VirtualGSet y0(ctx->gamma_ptr());
  std::set<ClassId> seen;
  for (const auto& alpha : out_reps(f)) {
    const auto cls = gl.class_of(ctx->diagonal_of(alpha));
    if (!seen.insert(cls).second) {
      throw PreconditionViolated("outer automorphism representatives " + alpha.to_string() +
                                 " share a class with an earlier one");
    }
    y0.add(cls, 1);
  }

  auto blocks = product_classes(f, *ctx);
  std::vector<char> in_h(gl.num_classes(), 0);
  const auto whole = f.lattice().whole();
  for (ClassId c = 0; c < gl.num_classes(); ++c) {
    const auto diag = ctx->as_diagonal(gl.class_rep(c));
    in_h[c] = diag && diag->p != whole && f.contains(diag->phi);
  }

  auto y = stabilize(blocks, in_h, y0);
  auto [m, x] = clear_denominators(y);

  ExplicitBiset explicit_x(s.order(), 0, {}, {});
  const auto total = x.cardinality();
  if (total > mpz_class(static_cast<unsigned long>(kMaxExplicitPoints))) {
    throw TooLarge("biset has " + total.get_str() + " points; explicit form is capped at " +
                   std::to_string(kMaxExplicitPoints));
  }
  bool support_twisted = true;
  for (const auto& [c, coeff] : x.coeffs()) {
    const auto diag = ctx->as_diagonal(gl.class_rep(c));
    if (!diag) {
      support_twisted = false;
      continue;
    }
    const auto orbit = materialize(s, diag->phi);
    for (unsigned long k = 0; k < coeff.get_num().get_ui(); ++k) explicit_x.append(orbit);
  }

  SemicharBiset b{f, ctx, std::move(blocks), std::move(in_h), std::move(y0), std::move(y),
                  m,  x,   std::move(explicit_x), {}, false};
  b.fix = all_fixed_counts(b.x);
  b.bifree = support_twisted && b.x_explicit.left_free() && b.x_explicit.right_free();
  return b;
}

RankAndOrder rank_and_order(const SemicharBiset& b) {
  if (!b.x_explicit.right_free()) throw NotBifree("right S-action on X is not free");
  const auto n = b.fusion.base().order();
  RankAndOrder out;
  out.r = b.x_explicit.size() / n;
  mpz_class power, fact;
  mpz_ui_pow_ui(power.get_mpz_t(), n, out.r);
  mpz_fac_ui(fact.get_mpz_t(), out.r);
  out.order_g = power * fact;
  return out;
}

bool decide_morphism(const SemicharBiset& b, const GroupMap& phi, std::optional<Quantifier> q) {
  const auto& s = b.fusion.base();
  const auto all = s.all_elements();
  if (phi.images().size() != s.order() || !b.fusion.lattice().find(phi.domain().mask()) ||
      !is_injective_homomorphism(s, phi.with_codomain(all))) {
    throw InvalidMorphism("decide_morphism: " + phi.to_string() +
                          " is not an injective homomorphism into S");
  }
  const auto quant = q.value_or(b.bifree ? Quantifier::kTwistedDiagonals : Quantifier::kAllSubgroups);
  return left_twist_agrees(*b.ctx, b.fix, phi, quant);
}

std::optional<std::vector<std::uint32_t>> find_intertwiner(const SemicharBiset& b,
                                                           const GroupMap& phi, std::size_t bound) {
  const auto& x = b.x_explicit;
  const auto& s = b.fusion.base();
  const std::size_t n = x.size();
  if (n > bound) {
    throw TooLarge("biset has " + std::to_string(n) + " points, bound is " + std::to_string(bound));
  }
  if (phi.images().size() != s.order() ||
      !is_injective_homomorphism(s, phi.with_codomain(s.all_elements()))) {
    throw InvalidMorphism("find_intertwiner: " + phi.to_string() + " is not an injective homomorphism");
  }
  const auto& p = phi.domain().elements();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};

  // base points of the orbits of P x S acting by x -> u x s
  std::vector<std::uint32_t> bases;
  {
    std::vector<char> seen(n, 0);
    for (std::uint32_t start = 0; start < n; ++start) {
      if (seen[start]) continue;
      bases.push_back(start);
      std::vector<std::uint32_t> queue{start};
      seen[start] = 1;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        auto visit = [&](std::uint32_t y) {
          if (!seen[y]) {
            seen[y] = 1;
            queue.push_back(y);
          }
        };
        for (auto u : p) visit(x.left(u, queue[i]));
        for (std::size_t t = 0; t < s.order(); ++t) visit(x.right(queue[i], static_cast<Element>(t)));
      }
    }
  }

  std::vector<std::uint32_t> g(n, kUnset);
  std::vector<char> used(n, 0);
  std::vector<std::uint32_t> trail;

  // Forces g on the orbit of `from` once g(from) = to; false on conflict.
  auto propagate = [&](std::uint32_t from, std::uint32_t to) {
    auto assign = [&](std::uint32_t a, std::uint32_t v) {
      if (g[a] != kUnset) return g[a] == v;
      if (used[v]) return false;
      g[a] = v;
      used[v] = 1;
      trail.push_back(a);
      return true;
    };
    const auto mark = trail.size();
    if (!assign(from, to)) return false;
    for (std::size_t i = mark; i < trail.size(); ++i) {
      const auto a = trail[i];
      for (auto u : p) {
        if (!assign(x.left(u, a), x.left(phi(u), g[a]))) return false;
      }
      for (std::size_t t = 0; t < s.order(); ++t) {
        const auto et = static_cast<Element>(t);
        if (!assign(x.right(a, et), x.right(g[a], et))) return false;
      }
    }
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      used[g[trail.back()]] = 0;
      g[trail.back()] = kUnset;
      trail.pop_back();
    }
  };
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == bases.size()) return true;
    for (std::uint32_t y = 0; y < n; ++y) {
      if (used[y]) continue;
      const auto mark = trail.size();
      if (propagate(bases[i], y) && self(self, i + 1)) return true;
      undo(mark);
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return g;
}

InducedFusion induced_fusion(const SemicharBiset& b) {
  const auto& l = b.fusion.lattice();
  const auto& s = l.group();
  const auto& whole = l.subgroup(l.whole());
  std::vector<std::set<GroupMap>> maps(l.size());
  InducedFusion out{b.fusion, 0, 0};
  for (SubgroupId p = 0; p < l.size(); ++p) {
    for (const auto& phi : monomorphisms(s, l.subgroup(p), whole)) {
      if (decide_morphism(b, phi)) {
        maps[p].insert(phi);
        ++out.accepted;
      } else {
        ++out.rejected;
      }
    }
  }
  out.fusion = FusionSystem(b.fusion.lattice_ptr(), std::move(maps));
  return out;
}

bool left_translations_embed(const SemicharBiset& b) {
  const auto& x = b.x_explicit;
  const auto& s = b.fusion.base();
  for (std::size_t a = 0; a < s.order(); ++a) {
    const auto ea = static_cast<Element>(a);
    std::vector<char> hit(x.size(), 0);
    for (std::uint32_t p = 0; p < x.size(); ++p) {
      const auto q = x.left(ea, p);
      if (hit[q]) return false;  // not a bijection
      hit[q] = 1;
      for (std::size_t t = 0; t < s.order(); ++t) {
        const auto et = static_cast<Element>(t);
        if (x.left(ea, x.right(p, et)) != x.right(q, et)) return false;
      }
    }
    if (a != 0) {
      const std::uint32_t* perm[] = {x.left_perm(ea)};
      if (kernels::count_common_fixed_points(perm, x.size()) == x.size()) return false;
    }
  }
  return true;
}

bool RealizationReport::passed() const {
  return flags.f_generated && flags.left_stable && flags.contains_identity && flags.embeds &&
         flags.realized;
}

std::string RealizationReport::failing_flags() const {
  std::string out;
  auto add = [&](bool ok, const char* name) {
    if (ok) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(flags.f_generated, "f_generated");
  add(flags.left_stable, "left_stable");
  add(flags.contains_identity, "contains_identity");
  add(flags.embeds, "embeds");
  add(flags.realized, "realized");
  return out;
}

RealizationReport verify_realization(const FusionSystem& f, std::shared_ptr<const SquareContext> ctx) {
  return verify_realization(build_semichar(f, std::move(ctx)));
}

RealizationReport verify_realization(const SemicharBiset& b) {
  const auto& f = b.fusion;
  RealizationReport r;
  const auto& s = f.base();
  r.group_order = s.order();
  r.p = s.prime_power() ? s.prime_power()->p : 0;
  r.num_subgroups = f.lattice().size();
  r.out_order = out_reps(f).size();
  r.m = b.m;
  r.explicit_points = b.x_explicit.size();
  r.x_serialized = serialize(*b.ctx, b.x);

  r.flags.f_generated = is_f_generated(f, *b.ctx, b.x);
  r.flags.left_stable = is_left_stable(f, *b.ctx, b.x);
  r.flags.right_stable = is_right_stable(f, *b.ctx, b.x);
  r.flags.contains_identity = contains_identity_orbit(*b.ctx, b.x);
  r.flags.embeds = left_translations_embed(b);

  const auto ro = rank_and_order(b);
  r.rank_r = ro.r;
  r.order_g = ro.order_g;
  r.char_index_residue = r.p ? static_cast<unsigned>(ro.r % r.p) : 0;

  const auto induced = induced_fusion(b);
  r.accepted = induced.accepted;
  r.rejected = induced.rejected;
  r.flags.realized = induced.fusion == f;
  return r;
}

}  // namespace semichar
