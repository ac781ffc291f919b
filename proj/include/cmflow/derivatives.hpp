#pragma once

#include "cmflow/profile.hpp"

namespace cmflow {

/// 4th-order centered latitude derivative. Parity flips: even -> odd,
/// odd -> even, none -> none.
RadialProfile d_theta(const RadialProfile& f);

/// 4th-order centered second derivative. Parity is preserved.
RadialProfile d2_theta(const RadialProfile& f);

/// Ghost sign for the pole-mirrored stencil nodes: -1 for odd profiles
/// (derivative-type fields change sign across a pole), +1 otherwise
/// (rotationally symmetric scalars continue evenly through the poles,
/// whatever their equatorial symmetry).
double ghost_sign(Parity p);

/// 4-point interpolation of an even-node grid profile at theta = 0.
/// Requires num_points >= 4 and even num_points.
double interpolate_equator(const RadialProfile& f);

} // namespace cmflow
