#include "semichar/biset.hpp"

#include <sstream>

#include "semichar/errors.hpp"
#include "semichar/kernels.hpp"

namespace semichar {

ExplicitBiset::ExplicitBiset(std::size_t s_order, std::size_t points,
                             std::vector<std::uint32_t> left, std::vector<std::uint32_t> right)
    : s_order_(s_order), points_(points), left_(std::move(left)), right_(std::move(right)) {
  if (left_.size() != s_order_ * points_ || right_.size() != s_order_ * points_) {
    throw NotABiset("action tables have the wrong size");
  }
}

void ExplicitBiset::append(const ExplicitBiset& other) {
  if (points_ == 0 && s_order_ == 0) s_order_ = other.s_order_;
  if (other.s_order_ != s_order_) throw NotABiset("appending a biset over a different group");
  const auto offset = static_cast<std::uint32_t>(points_);
  const auto total = points_ + other.points_;
  std::vector<std::uint32_t> left(s_order_ * total), right(s_order_ * total);
  for (std::size_t s = 0; s < s_order_; ++s) {
    for (std::size_t x = 0; x < points_; ++x) {
      left[s * total + x] = left_[s * points_ + x];
      right[s * total + x] = right_[s * points_ + x];
    }
    for (std::size_t x = 0; x < other.points_; ++x) {
      left[s * total + points_ + x] = other.left_[s * other.points_ + x] + offset;
      right[s * total + points_ + x] = other.right_[s * other.points_ + x] + offset;
    }
  }
  points_ = total;
  left_ = std::move(left);
  right_ = std::move(right);
}

bool ExplicitBiset::is_valid(const FiniteGroup& s) const {
  if (s.order() != s_order_) return false;
  for (std::uint32_t x = 0; x < points_; ++x) {
    if (left(0, x) != x || right(x, 0) != x) return false;
  }
  for (std::size_t a = 0; a < s_order_; ++a) {
    const auto ea = static_cast<Element>(a);
    for (std::size_t b = 0; b < s_order_; ++b) {
      const auto eb = static_cast<Element>(b);
      const auto ab = s.mul(ea, eb);
      for (std::uint32_t x = 0; x < points_; ++x) {
        if (left(ab, x) != left(ea, left(eb, x))) return false;
        if (right(x, ab) != right(right(x, ea), eb)) return false;
        if (right(left(ea, x), eb) != left(ea, right(x, eb))) return false;
      }
    }
  }
  return true;
}

bool ExplicitBiset::left_free() const {
  for (std::size_t s = 1; s < s_order_; ++s) {
    const std::uint32_t* p[] = {left_perm(static_cast<Element>(s))};
    if (kernels::count_common_fixed_points(p, points_) != 0) return false;
  }
  return true;
}

bool ExplicitBiset::right_free() const {
  for (std::size_t s = 1; s < s_order_; ++s) {
    const std::uint32_t* p[] = {right_perm(static_cast<Element>(s))};
    if (kernels::count_common_fixed_points(p, points_) != 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> ExplicitBiset::gamma_perm(const SquareContext& ctx, Element g) const {
  const auto [a, b] = ctx.square().decode(g);
  const auto binv = ctx.s().inv(b);
  std::vector<std::uint32_t> perm(points_);
  for (std::uint32_t x = 0; x < points_; ++x) perm[x] = left(a, right(x, binv));
  return perm;
}

std::size_t ExplicitBiset::count_fixed_points(const SquareContext& ctx, SubgroupId d) const {
  const auto gens = ctx.gamma().generators(d);
  std::vector<std::vector<std::uint32_t>> perms;
  perms.reserve(gens.size());
  for (auto g : gens) perms.push_back(gamma_perm(ctx, g));
  std::vector<const std::uint32_t*> ptrs;
  for (const auto& p : perms) ptrs.push_back(p.data());
  return kernels::count_common_fixed_points(ptrs, points_);
}

std::vector<std::vector<std::uint32_t>> ExplicitBiset::orbits() const {
  std::vector<char> seen(points_, 0);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t x = 0; x < points_; ++x) {
    if (seen[x]) continue;
    std::vector<std::uint32_t> orbit{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t s = 0; s < s_order_; ++s) {
        for (auto y : {left(static_cast<Element>(s), orbit[i]), right(orbit[i], static_cast<Element>(s))}) {
          if (!seen[y]) {
            seen[y] = 1;
            orbit.push_back(y);
          }
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

ExplicitBiset materialize(const FiniteGroup& s, const GroupMap& phi) {
  const auto all = s.all_elements();
  if (phi.images().size() != s.order() || !is_injective_homomorphism(s, phi.with_codomain(all))) {
    throw InvalidMorphism("materialize: " + phi.to_string() + " is not an injective homomorphism");
  }
  const std::size_t n = s.order();
  const auto& q = phi.domain().elements();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};

  // canonical pair of the class of (x, y): least first coordinate among
  // (x phi(u), u^-1 y)
  auto canonical = [&](Element x, Element y) {
    Element bx = x, by = y;
    for (auto u : q) {
      const auto cx = s.mul(x, phi(u));
      if (cx < bx) {
        bx = cx;
        by = s.mul(s.inv(u), y);
      }
    }
    return std::pair{bx, by};
  };

  std::vector<std::uint32_t> point_of(n * n, kUnset);
  std::uint32_t points = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto [cx, cy] = canonical(static_cast<Element>(x), static_cast<Element>(y));
      auto& slot = point_of[cx * n + cy];
      if (slot == kUnset) slot = points++;
      point_of[x * n + y] = slot;
    }
  }
  // one representative pair per point
  std::vector<std::pair<Element, Element>> rep(points);
  for (std::size_t x = n; x-- > 0;) {
    for (std::size_t y = n; y-- > 0;) {
      rep[point_of[x * n + y]] = {static_cast<Element>(x), static_cast<Element>(y)};
    }
  }
  std::vector<std::uint32_t> left(n * points), right(n * points);
  for (std::uint32_t p = 0; p < points; ++p) {
    const auto [x, y] = rep[p];
    for (std::size_t a = 0; a < n; ++a) {
      const auto ea = static_cast<Element>(a);
      left[a * points + p] = point_of[s.mul(ea, x) * n + y];
      right[a * points + p] = point_of[x * n + s.mul(y, ea)];
    }
  }
  return ExplicitBiset(n, points, std::move(left), std::move(right));
}

OrbitClass orbit_class(const SquareContext& ctx, const ExplicitBiset& x, std::uint32_t point) {
  if (point >= x.size()) throw DomainError("point out of range");
  const auto& s = ctx.s();
  ElementMask stab;
  for (std::size_t a = 0; a < s.order(); ++a) {
    for (std::size_t b = 0; b < s.order(); ++b) {
      const auto ea = static_cast<Element>(a);
      const auto eb = static_cast<Element>(b);
      if (x.left(ea, x.right(point, s.inv(eb))) == point) stab.set(ctx.square().encode(ea, eb));
    }
  }
  const auto& gl = ctx.gamma();
  const auto d = gl.id_of(stab);
  if (!ctx.is_twisted(d)) throw NotBifree("stabilizer of point " + std::to_string(point) +
                                          " is not a twisted diagonal");
  const auto cls = gl.class_of(d);
  return OrbitClass{cls, *ctx.as_diagonal(gl.class_rep(cls))};
}

namespace {

template <typename Twist>
bool twist_agrees(const SquareContext& ctx, std::span<const mpq_class> fix, const ElementMask& dom,
                  bool use_first, Quantifier q, Twist&& twist) {
  const auto& gl = ctx.gamma();
  const auto& base = ctx.base();
  auto check = [&](SubgroupId d) {
    const auto proj = use_first ? ctx.proj1(d) : ctx.proj2(d);
    if (!base.masks()[proj].is_subset_of(dom)) return true;
    const auto img = gl.id_of(twist(d));
    return fix[gl.class_of(d)] == fix[gl.class_of(img)];
  };
  if (q == Quantifier::kTwistedDiagonals) {
    for (auto d : ctx.twisted_ids()) {
      if (!check(d)) return false;
    }
  } else {
    for (SubgroupId d = 0; d < gl.size(); ++d) {
      if (!check(d)) return false;
    }
  }
  return true;
}

std::vector<Element> identity_images(std::size_t n) {
  std::vector<Element> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<Element>(i);
  return id;
}

void require_biset(const VirtualGSet& x) {
  if (!x.all_nonnegative() || !x.all_integral()) {
    throw NotABiset("coefficients must be nonnegative integers");
  }
}

}  // namespace

bool left_twist_agrees(const SquareContext& ctx, std::span<const mpq_class> fix,
                       const GroupMap& phi, Quantifier q) {
  const auto id = identity_images(ctx.s().order());
  return twist_agrees(ctx, fix, phi.domain().mask(), true, q,
                      [&](SubgroupId d) { return ctx.map_pairs(d, phi.images(), id); });
}

bool right_twist_agrees(const SquareContext& ctx, std::span<const mpq_class> fix,
                        const GroupMap& phi, Quantifier q) {
  const auto id = identity_images(ctx.s().order());
  return twist_agrees(ctx, fix, phi.domain().mask(), false, q,
                      [&](SubgroupId d) { return ctx.map_pairs(d, id, phi.images()); });
}

bool is_f_generated(const FusionSystem& f, const SquareContext& ctx, const VirtualGSet& x) {
  require_biset(x);
  const auto& gl = ctx.gamma();
  for (const auto& [c, coeff] : x.coeffs()) {
    const auto diag = ctx.as_diagonal(gl.class_rep(c));
    if (!diag || !f.contains(diag->phi)) return false;
  }
  return true;
}

bool is_left_stable(const FusionSystem& f, const SquareContext& ctx, const VirtualGSet& x,
                    Quantifier q) {
  require_biset(x);
  const auto fix = all_fixed_counts(x);
  for (SubgroupId p = 0; p < f.lattice().size(); ++p) {
    for (const auto& phi : f.homs_to_base(p)) {
      if (!left_twist_agrees(ctx, fix, phi, q)) return false;
    }
  }
  return true;
}

bool is_right_stable(const FusionSystem& f, const SquareContext& ctx, const VirtualGSet& x,
                     Quantifier q) {
  require_biset(x);
  const auto fix = all_fixed_counts(x);
  for (SubgroupId p = 0; p < f.lattice().size(); ++p) {
    for (const auto& phi : f.homs_to_base(p)) {
      if (!right_twist_agrees(ctx, fix, phi, q)) return false;
    }
  }
  return true;
}

bool contains_identity_orbit(const SquareContext& ctx, const VirtualGSet& x) {
  const auto& s = ctx.s();
  const auto id = GroupMap::identity(s, Subgroup::trusted(s.all_elements()));
  const auto cls = ctx.gamma().class_of(ctx.diagonal_of(id));
  return x.coefficient(cls) >= 1;
}

std::string serialize(const SquareContext& ctx, const VirtualGSet& v) {
  const auto& gl = ctx.gamma();
  std::ostringstream os;
  for (const auto& [c, coeff] : v.coeffs()) {
    const auto rep = gl.class_rep(c);
    os << "class ";
    if (auto diag = ctx.as_diagonal(rep)) {
      os << "Δ(P=";
      bool first = true;
      for (auto u : ctx.base().subgroup(diag->p).elements()) {
        os << (first ? "" : ",") << u;
        first = false;
      }
      os << ", phi=" << diag->phi.to_string() << ")";
    } else {
      os << "D=";
      bool first = true;
      for (auto e : gl.subgroup(rep).elements()) {
        const auto [a, b] = ctx.square().decode(e);
        os << (first ? "" : ",") << "(" << a << "," << b << ")";
        first = false;
      }
    }
    os << " coeff " << coeff.get_num().get_str() << "/" << coeff.get_den().get_str() << "\n";
  }
  return os.str();
}

}  // namespace semichar
