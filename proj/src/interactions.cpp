#include "decohere/interactions.hpp"

#include <cmath>

#include <fmt/format.h>

namespace decohere {

void CoulombSystem::validate() const {
  q1.in(dim::kCharge);
  q2.in(dim::kCharge);
  x1.in(dim::kLength);
  y1.in(dim::kLength);
  if (d.in(dim::kLength) <= 0.0) throw DomainError("closest-approach distance d must be positive");
  if (n_charges < 1) throw DomainError("a Coulomb system needs at least one elementary charge");
}

Quantity coulomb_delta_v(const CoulombSystem& sys, const Quantity& x2, ExpansionMode mode) {
  sys.validate();
  const Quantity coupling = constants().coulomb_k * sys.q1 * sys.q2;
  const Quantity r2 = sqrt(x2 * x2 + sys.d * sys.d);
  if (mode == ExpansionMode::kExpanded) {
    return coupling * (sys.x1 * x2 + sys.y1 * sys.d) / pow(r2, 3);
  }
  const Quantity dx = x2 - sys.x1;
  const Quantity dy = sys.d - sys.y1;
  const Quantity separation = sqrt(dx * dx + dy * dy);
  if (separation.value() == 0.0) {
    throw SingularityError(fmt::format("ion at x2 = {} m coincides with the displaced charge", x2.value()));
  }
  return coupling * (dimensionless(1.0) / separation - dimensionless(1.0) / r2);
}

EnergyProfile coulomb_profile(const CoulombSystem& sys, ExpansionMode mode) {
  sys.validate();
  const double coupling = (constants().coulomb_k * sys.q1 * sys.q2).value();
  const double d = sys.d.value();
  const double x1 = sys.x1.value();
  const double y1 = sys.y1.value();
  if (mode == ExpansionMode::kExpanded) {
    return [=](double x2) {
      const double r2 = x2 * x2 + d * d;
      return coupling * (x1 * x2 + y1 * d) / (r2 * std::sqrt(r2));
    };
  }
  return [=](double x2) {
    const double separation = std::hypot(x2 - x1, d - y1);
    if (separation == 0.0) throw SingularityError("ion coincides with the displaced charge");
    return coupling * (1.0 / separation - 1.0 / std::hypot(x2, d));
  };
}

void DipoleSystem::validate() const {
  if (p.in(dim::kDipoleMoment) < 0.0) throw DomainError("dipole moment must be non-negative");
  q.in(dim::kCharge);
  if (d.in(dim::kLength) <= 0.0) throw DomainError("closest-approach distance d must be positive");
  if (s.in(dim::kLength) < 0.0) throw DomainError("superposition separation s must be non-negative");
  if (!std::isfinite(alpha)) throw DomainError("dipole angle must be finite");
}

Quantity DipoleSystem::p_x() const { return p * std::cos(alpha); }
Quantity DipoleSystem::p_y() const { return p * std::sin(alpha); }

double DipoleSystem::omega_dipole() const {
  const double c = std::cos(alpha);
  if (std::fabs(c) < 1e-9) {
    throw SingularityError(fmt::format("geometric factor sec(alpha) diverges at alpha = {}", alpha));
  }
  return 1.0 / c;
}

Quantity dipole_delta_v(const DipoleSystem& sys, const Quantity& x2) {
  sys.validate();
  const Quantity r2sq = x2 * x2 + sys.d * sys.d;
  return 3.0 * constants().coulomb_k * sys.q * sys.s * (sys.p_x() * x2 + sys.p_y() * sys.d) / (r2sq * r2sq);
}

EnergyProfile dipole_profile(const DipoleSystem& sys) {
  sys.validate();
  const double scale = (3.0 * constants().coulomb_k * sys.q * sys.s).value();
  const double px = sys.p_x().value();
  const double py_d = (sys.p_y() * sys.d).value();
  const double d = sys.d.value();
  return [=](double x2) {
    const double r2sq = x2 * x2 + d * d;
    return scale * (px * x2 + py_d) / (r2sq * r2sq);
  };
}

Quantity kink_moment(const KinkProfile& profile, const Quantity& z) {
  profile.p0.in(dim::kDipoleMoment);
  if (z > profile.z0) return profile.p0;
  if (z < profile.z0) return -profile.p0;
  return 0.0 * profile.p0;
}

}  // namespace decohere
