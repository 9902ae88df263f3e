#include "semichar/group.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "semichar/errors.hpp"

namespace semichar {

std::optional<PrimePower> prime_power_of(std::size_t n) {
  if (n < 2) return std::nullopt;
  std::size_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{static_cast<unsigned>(p), k};
}

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::size_t n, std::vector<Element> table) {
  if (n == 0) throw NotAGroup("order must be positive");
  if (n > kMaxOrder) {
    throw NotAGroup("order " + std::to_string(n) + " exceeds supported maximum " +
                    std::to_string(kMaxOrder));
  }
  if (table.size() != n * n) throw NotAGroup("table size does not match order");
  for (auto v : table) {
    if (v >= n) throw NotAGroup("entry " + std::to_string(v) + " out of range");
  }
  auto at = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };

  for (std::size_t i = 0; i < n; ++i) {
    if (at(0, i) != i || at(i, 0) != i) {
      throw NotAGroup("identity: element 0 is not a two-sided identity at " + triple(0, i, i));
    }
  }
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[at(i, j)]++) {
        throw NotAGroup("latin: row " + std::to_string(i) + " is not a permutation (repeat " +
                        std::to_string(at(i, j)) + ")");
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[at(j, i)]++) {
        throw NotAGroup("latin: column " + std::to_string(i) + " is not a permutation (repeat " +
                        std::to_string(at(j, i)) + ")");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = at(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (at(ab, c) != at(a, at(b, c))) {
          throw NotAGroup("associativity fails at " + triple(a, b, c));
        }
      }
    }
  }

  FiniteGroup g;
  g.order_ = n;
  g.table_ = std::move(table);
  g.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (g.table_[a * n + b] == 0 && g.table_[b * n + a] == 0) {
        g.inverse_[a] = static_cast<Element>(b);
        found = true;
        break;
      }
    }
    if (!found) throw NotAGroup("inverse: element " + std::to_string(a) + " has no inverse");
  }
  g.prime_power_ = prime_power_of(n);
  return g;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  Element x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

ElementMask FiniteGroup::all_elements() const {
  ElementMask m;
  for (std::size_t i = 0; i < order_; ++i) m.set(static_cast<Element>(i));
  return m;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
    }
  }
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::size_t> parse_numbers(std::string_view s, std::size_t line) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size()) break;
    std::size_t v = 0;
    const auto* first = s.data() + i;
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || (ptr != last && *ptr != ' ' && *ptr != '\t')) {
      throw ParseError(line, "expected a non-negative integer");
    }
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - s.data());
  }
  return out;
}

}  // namespace

FiniteGroup parse_group(std::string_view text) {
  std::size_t n = 0;
  bool have_order = false;
  std::vector<Element> table;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!have_order) {
      if (!line.starts_with("order")) throw ParseError(line_no, "expected 'order n'");
      auto nums = parse_numbers(trim(line.substr(5)), line_no);
      if (nums.size() != 1 || nums[0] == 0) throw ParseError(line_no, "expected 'order n' with n >= 1");
      n = nums[0];
      if (n > kMaxOrder) {
        throw ParseError(line_no, "order exceeds supported maximum " + std::to_string(kMaxOrder));
      }
      have_order = true;
      table.reserve(n * n);
      continue;
    }
    if (rows == n) throw ParseError(line_no, "more than " + std::to_string(n) + " table rows");
    auto nums = parse_numbers(line, line_no);
    if (nums.size() != n) {
      throw ParseError(line_no, "row has " + std::to_string(nums.size()) + " entries, expected " +
                                    std::to_string(n));
    }
    for (auto v : nums) {
      if (v >= n) throw ParseError(line_no, "entry " + std::to_string(v) + " out of range");
      table.push_back(static_cast<Element>(v));
    }
    ++rows;
  }
  if (!have_order) throw ParseError(line_no, "missing 'order n' line");
  if (rows != n) {
    throw ParseError(line_no, "expected " + std::to_string(n) + " rows, found " + std::to_string(rows));
  }
  return FiniteGroup::from_table(n, std::move(table));
}

std::string format_group(const FiniteGroup& g) {
  std::ostringstream os;
  os << "order " << g.order() << '\n';
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) {
      if (j) os << ' ';
      os << g.table()[i * g.order() + j];
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------

bool is_subgroup(const FiniteGroup& g, const ElementMask& mask) {
  if (!mask.test(0)) return false;
  const auto elems = mask.elements();
  if (!elems.empty() && elems.back() >= g.order()) return false;
  for (auto a : elems) {
    if (!mask.test(g.inv(a))) return false;
    for (auto b : elems) {
      if (!mask.test(g.mul(a, b))) return false;
    }
  }
  return true;
}

Subgroup Subgroup::from_mask(const FiniteGroup& g, const ElementMask& mask) {
  if (!is_subgroup(g, mask)) throw DomainError("element set is not a subgroup");
  return trusted(mask);
}

Subgroup Subgroup::from_elements(const FiniteGroup& g, std::span<const Element> elems) {
  ElementMask m;
  for (auto e : elems) {
    if (e >= g.order()) throw DomainError("element " + std::to_string(e) + " out of range");
    m.set(e);
  }
  return from_mask(g, m);
}

Subgroup Subgroup::trusted(const ElementMask& mask) {
  Subgroup s;
  s.mask_ = mask;
  s.elements_ = mask.elements();
  return s;
}

ElementMask generated_mask(const FiniteGroup& g, std::span<const Element> gens) {
  ElementMask m = ElementMask::single(0);
  std::vector<Element> frontier{0};
  frontier.reserve(g.order());
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const Element x = frontier[i];
    for (auto s : gens) {
      const Element y = g.mul(x, s);
      if (!m.test(y)) {
        m.set(y);
        frontier.push_back(y);
      }
    }
  }
  return m;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> gens) {
  return Subgroup::trusted(generated_mask(g, gens));
}

ElementMask conjugate_mask(const FiniteGroup& g, const ElementMask& p, Element x) {
  ElementMask out;
  for (auto u : p.elements()) out.set(g.conj(x, u));
  return out;
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& p, Element x) {
  return Subgroup::trusted(conjugate_mask(g, p.mask(), x));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& p) {
  if (!is_subgroup(g, p.mask())) throw DomainError("normalizer: argument is not a subgroup");
  ElementMask n;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (conjugate_mask(g, p.mask(), static_cast<Element>(x)) == p.mask()) {
      n.set(static_cast<Element>(x));
    }
  }
  return Subgroup::trusted(n);
}

std::vector<Element> generating_sequence(const FiniteGroup& g, const Subgroup& p) {
  std::vector<Element> gens;
  ElementMask current = ElementMask::single(0);
  for (auto e : p.elements()) {
    if (current.test(e)) continue;
    gens.push_back(e);
    current = generated_mask(g, gens);
    if (current == p.mask()) break;
  }
  return gens;
}

// ---------------------------------------------------------------------------

GroupMap::GroupMap(Subgroup domain, ElementMask codomain, std::vector<Element> images)
    : domain_(std::move(domain)), codomain_(codomain), images_(std::move(images)) {}

GroupMap GroupMap::from_pairs(const FiniteGroup& g,
                              std::span<const std::pair<Element, Element>> pairs,
                              const ElementMask& codomain) {
  std::vector<Element> images(g.order(), kUnmapped);
  ElementMask dom;
  for (auto [a, b] : pairs) {
    if (a >= g.order() || b >= g.order()) throw InvalidMorphism("element out of range");
    if (images[a] != kUnmapped && images[a] != b) {
      throw InvalidMorphism("element " + std::to_string(a) + " mapped twice");
    }
    images[a] = b;
    dom.set(a);
  }
  if (!is_subgroup(g, dom)) throw InvalidMorphism("domain is not a subgroup");
  GroupMap m(Subgroup::trusted(dom), codomain, std::move(images));
  if (!is_injective_homomorphism(g, m)) {
    throw InvalidMorphism("map " + m.to_string() + " is not an injective homomorphism into the codomain");
  }
  return m;
}

GroupMap GroupMap::identity(const FiniteGroup& g, const Subgroup& p) {
  std::vector<Element> images(g.order(), kUnmapped);
  for (auto u : p.elements()) images[u] = u;
  return GroupMap(p, p.mask(), std::move(images));
}

GroupMap GroupMap::conjugation(const FiniteGroup& g, const Subgroup& p, Element x,
                               const ElementMask& codomain) {
  std::vector<Element> images(g.order(), kUnmapped);
  for (auto u : p.elements()) images[u] = g.conj(x, u);
  return GroupMap(p, codomain, std::move(images));
}

ElementMask GroupMap::image() const {
  ElementMask m;
  for (auto u : domain_.elements()) m.set(images_[u]);
  return m;
}

bool GroupMap::is_identity() const {
  for (auto u : domain_.elements()) {
    if (images_[u] != u) return false;
  }
  return true;
}

GroupMap GroupMap::restrict_to(const Subgroup& sub) const {
  std::vector<Element> images(images_.size(), kUnmapped);
  for (auto u : sub.elements()) images[u] = images_[u];
  return GroupMap(sub, codomain_, std::move(images));
}

GroupMap GroupMap::then(const GroupMap& other) const {
  std::vector<Element> images(images_.size(), kUnmapped);
  for (auto u : domain_.elements()) images[u] = other.images_[images_[u]];
  return GroupMap(domain_, other.codomain_, std::move(images));
}

GroupMap GroupMap::inverse(const FiniteGroup& g, const ElementMask& codomain) const {
  (void)g;
  std::vector<Element> images(images_.size(), kUnmapped);
  for (auto u : domain_.elements()) images[images_[u]] = u;
  return GroupMap(Subgroup::trusted(image()), codomain, std::move(images));
}

GroupMap GroupMap::with_codomain(const ElementMask& codomain) const {
  GroupMap m = *this;
  m.codomain_ = codomain;
  return m;
}

std::string GroupMap::to_string() const {
  std::string out;
  for (auto u : domain_.elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(u) + "->" + std::to_string(images_[u]);
  }
  return out;
}

bool is_injective_homomorphism(const FiniteGroup& g, const GroupMap& m) {
  const auto& dom = m.domain().elements();
  if (m.images().size() != g.order()) return false;
  ElementMask img;
  for (auto u : dom) {
    const Element v = m(u);
    if (v == GroupMap::kUnmapped || v >= g.order() || !m.codomain().test(v) || img.test(v)) {
      return false;
    }
    img.set(v);
  }
  for (auto u : dom) {
    for (auto w : dom) {
      if (m(g.mul(u, w)) != g.mul(m(u), m(w))) return false;
    }
  }
  return true;
}

namespace {

// Extends the partial map defined by gens[i] -> imgs[i] over <gens> by
// breadth-first search on the Cayley graph. Returns false on an
// inconsistent edge, i.e. when no homomorphism extends the assignment.
bool extend(const FiniteGroup& g, std::span<const Element> gens, std::span<const Element> imgs,
            std::vector<Element>& images, std::vector<Element>& visited) {
  std::fill(images.begin(), images.end(), GroupMap::kUnmapped);
  visited.clear();
  images[0] = 0;
  visited.push_back(0);
  for (std::size_t i = 0; i < visited.size(); ++i) {
    const Element x = visited[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Element y = g.mul(x, gens[j]);
      const Element fy = g.mul(images[x], imgs[j]);
      if (images[y] == GroupMap::kUnmapped) {
        images[y] = fy;
        visited.push_back(y);
      } else if (images[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<GroupMap> monomorphisms(const FiniteGroup& g, const Subgroup& p, const Subgroup& q) {
  std::vector<GroupMap> out;
  if (p.order() > q.order()) return out;
  const auto gens = generating_sequence(g, p);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto ord = g.element_order(gens[i]);
    for (auto y : q.elements()) {
      if (g.element_order(y) == ord) candidates[i].push_back(y);
    }
  }
  std::vector<Element> imgs(gens.size());
  std::vector<Element> images(g.order());
  std::vector<Element> visited;

  auto injective = [&](std::size_t count) {
    ElementMask seen;
    for (std::size_t k = 0; k < count; ++k) {
      const Element v = images[visited[k]];
      if (seen.test(v)) return false;
      seen.set(v);
    }
    return true;
  };

  // Depth-first over generator images; prune as soon as the partial
  // assignment fails to extend or stops being injective.
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      if (!extend(g, gens, imgs, images, visited)) return;
      if (!injective(visited.size())) return;
      out.emplace_back(p, q.mask(), images);
      return;
    }
    for (auto y : candidates[depth]) {
      imgs[depth] = y;
      const std::span<const Element> gs(gens.data(), depth + 1);
      const std::span<const Element> is(imgs.data(), depth + 1);
      if (!extend(g, gs, is, images, visited)) continue;
      if (!injective(visited.size())) continue;
      self(self, depth + 1);
    }
  };
  if (gens.empty()) {
    std::vector<Element> trivial(g.order(), GroupMap::kUnmapped);
    trivial[0] = 0;
    out.emplace_back(p, q.mask(), std::move(trivial));
    return out;
  }
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

ElementMask DirectSquare::project1(const ElementMask& m) const {
  ElementMask out;
  for (auto x : m.elements()) out.set(pi1(x));
  return out;
}

ElementMask DirectSquare::project2(const ElementMask& m) const {
  ElementMask out;
  for (auto x : m.elements()) out.set(pi2(x));
  return out;
}

DirectSquare direct_square(const FiniteGroup& s) {
  const std::size_t n = s.order();
  if (n * n > kMaxOrder) {
    throw DomainError("|S|^2 = " + std::to_string(n * n) + " exceeds supported maximum " +
                      std::to_string(kMaxOrder));
  }
  std::vector<Element> table(n * n * n * n);
  for (std::size_t x = 0; x < n * n; ++x) {
    for (std::size_t y = 0; y < n * n; ++y) {
      const auto a = s.mul(static_cast<Element>(x / n), static_cast<Element>(y / n));
      const auto b = s.mul(static_cast<Element>(x % n), static_cast<Element>(y % n));
      table[x * n * n + y] = static_cast<Element>(a * n + b);
    }
  }
  DirectSquare sq;
  sq.n = n;
  sq.gamma = FiniteGroup::from_table(n * n, std::move(table));
  return sq;
}

}  // namespace semichar
