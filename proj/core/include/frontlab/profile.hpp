#pragma once

#include <utility>
#include <vector>

#include "frontlab/field.hpp"
#include "frontlab/nonlinearity.hpp"

namespace frontlab {

/// Monotone 1D profile on a uniform grid xi >= 0, rising from 0 toward its
/// saturation value `limit`.  derivs holds the first derivative at the
/// nodes; for the shot profiles the pair (values, derivs) satisfies the
/// energy identity derivs^2/2 + F(values) = F(limit) at every node.
struct Profile1D {
  std::vector<double> xi;
  std::vector<double> values;
  std::vector<double> derivs;
  double limit = 1.0;

  double xi_max() const { return xi.empty() ? 0.0 : xi.back(); }
  /// Linear interpolation; x <= 0 gives 0, x past the grid gives `limit`.
  double eval(double x) const;
  double eval_deriv(double x) const;
};

/// Monotone connection 0 -> 1 of w'' = -f(w), w(0) = 0, w'(0) = sqrt(2 F(1)).
/// Integrated in the energy-reduced first-order form w' = sqrt(2(F(1)-F(w)))
/// with classic RK4, which keeps the trajectory on the connecting orbit (a
/// direct second-order shot is blown off it by the saddle at 1 long before
/// xi_max in double precision).  Throws when the requested grid leaves the
/// plateau unreached (w(xi_max) <= limit - 1e-6) or monotonicity fails.
Profile1D shoot_omega(const BistableNonlinearity& nl, double step = 1e-3,
                      double xi_max = 40.0);

/// Same construction driven by f_delta; saturates at 1 - delta/2.
Profile1D shoot_omega_delta(const TruncatedNonlinearity& tnl, double step = 1e-3,
                            double xi_max = 40.0);

/// The rising profile used for far-field subsolutions coincides with
/// shoot_omega; kept as a named entry point.
inline Profile1D shoot_u(const BistableNonlinearity& nl, double step = 1e-3,
                         double xi_max = 40.0) {
  return shoot_omega(nl, step, xi_max);
}

/// Planar front (phi, c): phi'' + c phi' + f(phi) = 0, phi(-inf) = 1,
/// phi(+inf) = 0, computed by bisection on the speed with shooting along
/// the unstable direction of the saddle at 1.
struct WaveSolution {
  double speed = 0.0;
  std::vector<double> xi;   ///< uniform symmetric grid on [-L, L]
  std::vector<double> phi;  ///< strictly decreasing, phi(0) = 1/2
  double residual = 0.0;    ///< max discrete ODE residual along the shot

  /// Interpolated profile value; 1 left of the grid, 0 right of it.
  double eval(double x) const;
};

/// Throws when the bracket does not straddle the speed; the message names
/// the shooting outcome at both ends.
WaveSolution solve_traveling_wave(const BistableNonlinearity& nl,
                                  double domain_half_length = 15.0, double step = 1e-3,
                                  std::pair<double, double> c_bracket = {1e-3, 1.2});

/// Radial lift x -> p(|x| - shift) on the active nodes, clamped to 0 inside
/// the shift radius; the ring carries the profile value at r_outer.
Field2D radialize(const Profile1D& p, double shift, const GridMask& mask);

}  // namespace frontlab
