#pragma once

#include "twistkit/disc_enumeration.hpp"
#include "twistkit/germ.hpp"
#include "twistkit/pearl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistkit::presets
{

/// Twist torus in S2 x S2: basis (D_Gamma, D_tau, S1, S2) with
/// multiplicative names (R, T, S1, S2); the spheres carry no boundary.
ConstraintTable theta_s2xs2_table();

/// GF2 potential built from the enumerated candidate classes, each of which
/// is taken to carry exactly one disc.
Potential theta_s2xs2_potential();

/// R, T, S2 -> R and S1 -> 1 into GF2[R, R^-1].
NamedHom theta_phi();
/// Collapse A -> t^(mu(A)/2): R -> t, T -> 1, S1 -> t^2, S2 -> t^2 over GF2.
NamedHom theta_collapse();
/// S1, S2 -> 1, R -> z1, T -> z2 over Q.
NamedHom theta_regularity();

/// constant 1, covectors +-e1, +-e2: the product torus in S2 x S2.
Germ clifford_2();
/// constant 1, covectors (1,0), (-1,1), (-1,-1).
Germ theta();
/// constant 1+s, single covector (1,-1).
Germ theta_s0(const Rational& s);

std::vector<std::string> table_names();
std::vector<std::string> germ_names();
/// `s` is only used by theta_s0.
std::optional<Germ> germ(const std::string& name, const Rational& s = 1);

} // namespace twistkit::presets
