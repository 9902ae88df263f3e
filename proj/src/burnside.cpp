#include "semichar/burnside.hpp"

#include "semichar/errors.hpp"

namespace semichar {

mpq_class VirtualGSet::coefficient(ClassId c) const {
  auto it = coeffs_.find(c);
  return it == coeffs_.end() ? mpq_class(0) : it->second;
}

void VirtualGSet::add(ClassId c, const mpq_class& q) {
  if (c >= ambient_->num_classes()) throw DomainError("class id out of range");
  auto& slot = coeffs_[c];
  slot += q;
  slot.canonicalize();
  if (slot == 0) coeffs_.erase(c);
}

void VirtualGSet::set(ClassId c, const mpq_class& q) {
  if (c >= ambient_->num_classes()) throw DomainError("class id out of range");
  if (q == 0) {
    coeffs_.erase(c);
  } else {
    coeffs_[c] = q;
    coeffs_[c].canonicalize();
  }
}

VirtualGSet VirtualGSet::scaled(const mpq_class& q) const {
  VirtualGSet out(ambient_);
  if (q == 0) return out;
  for (const auto& [c, x] : coeffs_) out.coeffs_[c] = x * q;
  return out;
}

VirtualGSet VirtualGSet::operator+(const VirtualGSet& o) const {
  VirtualGSet out = *this;
  for (const auto& [c, x] : o.coeffs_) out.add(c, x);
  return out;
}

VirtualGSet VirtualGSet::operator-(const VirtualGSet& o) const {
  VirtualGSet out = *this;
  for (const auto& [c, x] : o.coeffs_) out.add(c, -x);
  return out;
}

bool VirtualGSet::all_nonnegative() const {
  for (const auto& [c, x] : coeffs_) {
    if (x < 0) return false;
  }
  return true;
}

bool VirtualGSet::all_integral() const {
  for (const auto& [c, x] : coeffs_) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

mpq_class VirtualGSet::cardinality() const {
  mpq_class total = 0;
  const auto n = ambient_->group().order();
  for (const auto& [c, x] : coeffs_) {
    const auto z = ambient_->subgroup(ambient_->class_rep(c)).order();
    total += x * mpz_class(static_cast<unsigned long>(n / z));
  }
  return total;
}

mpq_class fixed_count(const VirtualGSet& v, ClassId d) {
  mpq_class total = 0;
  for (const auto& [z, x] : v.coeffs()) {
    const auto m = v.ambient().mark(d, z);
    if (m != 0) total += x * mpz_class(static_cast<long>(m));
  }
  return total;
}

mpq_class fixed_count(const VirtualGSet& v, const ElementMask& d) {
  const auto& l = v.ambient();
  return fixed_count(v, l.class_of(l.id_of(d)));
}

std::vector<mpq_class> all_fixed_counts(const VirtualGSet& v) {
  const auto& l = v.ambient();
  std::vector<mpq_class> out(l.num_classes(), 0);
  for (const auto& [z, x] : v.coeffs()) {
    const auto col = l.mark_column(z);
    for (ClassId d = 0; d < l.num_classes(); ++d) {
      if (col[d] != 0) out[d] += x * mpz_class(static_cast<long>(col[d]));
    }
  }
  return out;
}

std::pair<mpz_class, VirtualGSet> clear_denominators(const VirtualGSet& v) {
  mpz_class m = 1;
  for (const auto& [c, x] : v.coeffs()) {
    if (x < 0) {
      throw NotABiset("negative coefficient " + x.get_str() + " at class " + std::to_string(c));
    }
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), x.get_den_mpz_t());
  }
  return {m, v.scaled(mpq_class(m))};
}

}  // namespace semichar
