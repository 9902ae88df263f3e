#include "semichar/square.hpp"

#include "semichar/errors.hpp"

namespace semichar {

std::shared_ptr<const SquareContext> SquareContext::create(
    std::shared_ptr<const SubgroupLattice> base) {
  auto ctx = std::make_shared<SquareContext>();
  ctx->square_ = direct_square(base->group());
  ctx->base_ = std::move(base);
  ctx->gamma_ = all_subgroups(ctx->square_.gamma);
  const auto& gl = *ctx->gamma_;
  ctx->proj1_.resize(gl.size());
  ctx->proj2_.resize(gl.size());
  ctx->twisted_.resize(gl.size());
  for (SubgroupId d = 0; d < gl.size(); ++d) {
    const auto& m = gl.masks()[d];
    const auto p1 = ctx->square_.project1(m);
    const auto p2 = ctx->square_.project2(m);
    ctx->proj1_[d] = ctx->base_->id_of(p1);
    ctx->proj2_[d] = ctx->base_->id_of(p2);
    const auto order = gl.subgroup(d).order();
    if (p1.count() == order && p2.count() == order) {
      ctx->twisted_[d] = 1;
      ctx->twisted_ids_.push_back(d);
    }
  }
  return ctx;
}

SubgroupId SquareContext::diagonal_of(const GroupMap& phi) const {
  ElementMask m;
  for (auto u : phi.domain().elements()) m.set(square_.encode(phi(u), u));
  return gamma_->id_of(m);
}

TwistedDiagonal SquareContext::make_diagonal(const GroupMap& phi) const {
  return TwistedDiagonal{base_->id_of(phi.domain().mask()), phi.with_codomain(s().all_elements()),
                         diagonal_of(phi)};
}

std::optional<TwistedDiagonal> SquareContext::as_diagonal(SubgroupId d) const {
  if (!is_twisted(d)) return std::nullopt;
  const auto& p = base_->subgroup(proj2_[d]);
  std::vector<Element> images(s().order(), GroupMap::kUnmapped);
  for (auto x : gamma_->masks()[d].elements()) {
    const auto [a, b] = square_.decode(x);
    images[b] = a;
  }
  return TwistedDiagonal{proj2_[d], GroupMap(p, s().all_elements(), std::move(images)), d};
}

ElementMask SquareContext::map_pairs(SubgroupId d, std::span<const Element> f,
                                     std::span<const Element> g) const {
  ElementMask out;
  for (auto x : gamma_->masks()[d].elements()) {
    const auto [a, b] = square_.decode(x);
    out.set(square_.encode(f[a], g[b]));
  }
  return out;
}

}  // namespace semichar
