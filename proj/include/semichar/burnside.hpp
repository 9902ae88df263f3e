#pragma once

// Virtual G-sets with rational coefficients (the rational Burnside ring)
// and their fixed-point counts.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "semichar/lattice.hpp"

namespace semichar {

/// sum_Z c_Z [G/Z] over conjugacy classes of subgroups of the ambient group.
/// Zero coefficients are never stored.
class VirtualGSet {
 public:
  explicit VirtualGSet(std::shared_ptr<const SubgroupLattice> ambient)
      : ambient_(std::move(ambient)) {}

  const SubgroupLattice& ambient() const { return *ambient_; }
  const std::shared_ptr<const SubgroupLattice>& ambient_ptr() const { return ambient_; }
  const std::map<ClassId, mpq_class>& coeffs() const { return coeffs_; }

  mpq_class coefficient(ClassId c) const;
  void add(ClassId c, const mpq_class& q);
  void set(ClassId c, const mpq_class& q);

  VirtualGSet scaled(const mpq_class& q) const;
  VirtualGSet operator+(const VirtualGSet& o) const;
  VirtualGSet operator-(const VirtualGSet& o) const;

  bool all_nonnegative() const;
  bool all_integral() const;
  /// sum c_Z |G/Z|
  mpq_class cardinality() const;

  friend bool operator==(const VirtualGSet& a, const VirtualGSet& b) {
    return a.ambient_ == b.ambient_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::shared_ptr<const SubgroupLattice> ambient_;
  std::map<ClassId, mpq_class> coeffs_;
};

/// |V^D| for D in class `d`, i.e. sum_Z c_Z |(G/Z)^D|.
mpq_class fixed_count(const VirtualGSet& v, ClassId d);
/// DomainError unless `d` is a subgroup of the ambient group.
mpq_class fixed_count(const VirtualGSet& v, const ElementMask& d);
/// Fixed-point counts at every class.
std::vector<mpq_class> all_fixed_counts(const VirtualGSet& v);

/// Least m > 0 making m * V integral, and m * V. NotABiset on a negative
/// coefficient.
std::pair<mpz_class, VirtualGSet> clear_denominators(const VirtualGSet& v);

}  // namespace semichar
