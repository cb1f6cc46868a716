#pragma once

// System-environment interaction energies.
//
// Coordinates: the macromolecule sits at the origin in one branch of the
// superposition and at r1' = (x1, y1, 0) in the other. The environmental
// ion is at r2 = (x2, d, 0) in both branches, i.e. it travels along x at
// closest-approach distance d. Every function here returns the energy
// difference V(R') - V(R) that drives the relative phase of the branches.

#include <functional>

#include "decohere/quantities.hpp"

namespace decohere {

// Position-space energy difference: x2 in metres -> joules. Used by the
// quadrature, which cannot afford a dimension check per sample.
using EnergyProfile = std::function<double(double)>;

struct CoulombSystem {
  Quantity q1;  // charge of the ring in the microtubule, N e
  Quantity q2;  // environmental ion
  Quantity d;
  Quantity x1;
  Quantity y1;
  int n_charges = 1;

  // d > 0 and all dimensions as documented.
  void validate() const;
};

enum class ExpansionMode {
  kExact,     // K q1 q2 (1/|r2 - r1'| - 1/|r2|)
  kExpanded,  // first-order term K q1 q2 (x1 x2 + y1 d) / |r2|^3
};

// Throws SingularityError in exact mode when r2 coincides with r1'.
Quantity coulomb_delta_v(const CoulombSystem& sys, const Quantity& x2, ExpansionMode mode);
EnergyProfile coulomb_profile(const CoulombSystem& sys, ExpansionMode mode);

struct DipoleSystem {
  Quantity p;
  double alpha = 0.0;  // radians; p_x = p cos(alpha), p_y = p sin(alpha)
  Quantity q;
  Quantity d;
  Quantity s;  // |r1'|

  void validate() const;

  Quantity p_x() const;
  Quantity p_y() const;
  // sec(alpha). Throws SingularityError when |cos alpha| < 1e-9.
  double omega_dipole() const;
};

// 3 K q s (p_x x2 + p_y d) / (x2^2 + d^2)^2
Quantity dipole_delta_v(const DipoleSystem& sys, const Quantity& x2);
EnergyProfile dipole_profile(const DipoleSystem& sys);

// Tubulin dipole across a kink centred at z0: +p0 above, -p0 below, zero at
// the centre itself.
struct KinkProfile {
  Quantity p0;
  Quantity z0;
};

Quantity kink_moment(const KinkProfile& profile, const Quantity& z);

}  // namespace decohere
