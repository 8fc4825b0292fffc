#pragma once

#include <array>

namespace frontlab {

/// Cubic bistable reaction term f(s) = a*s*(1-s)*(s-theta) with stable zeros
/// at 0 and 1 and an unstable zero at theta in (0, 1/2).  The restriction
/// theta < 1/2 keeps the integral of f over [0,1] positive, which is what
/// makes the state 1 invading.  Outside [0,1] the term continues linearly
/// with slopes f'(0) and f'(1), so iterates that momentarily leave [0,1]
/// still see a C^1 function.
///
/// Immutable after construction; safe for concurrent reads.
class BistableNonlinearity {
public:
  /// Throws std::invalid_argument unless 0 < theta < 1/2 and amplitude > 0.
  BistableNonlinearity(double theta, double amplitude);

  double theta() const { return theta_; }
  double amplitude() const { return amplitude_; }

  double f(double s) const;
  double df(double s) const;

  /// Antiderivative of f with F(0) = 0, in closed form.
  double F(double s) const;

  /// Reaction term of the flipped unknown: g(t) = -f(1-t).
  double g(double t) const { return -f(1.0 - t); }
  double dg(double t) const { return df(1.0 - t); }

  /// Antiderivative of g with G(0) = 0; identical to F(1-t) - F(1).
  double G(double t) const { return F(1.0 - t) - F(1.0); }

  /// F(1) = a*(1-2*theta)/12, positive by construction.
  double mass() const;

  /// max |f'| over the whole line (attained on one of the linear tails).
  double max_slope() const;

private:
  double theta_;
  double amplitude_;
};

/// Truncation f_delta of a bistable term: equal to f on [0, 1-delta], then a
/// C^1 cubic-spline blend that crosses zero at 1-delta/2 and stays strictly
/// negative up to (and beyond) 1, with f_delta <= f everywhere.  Profiles
/// driven by f_delta saturate at 1-delta/2 instead of 1, which is what makes
/// them strict radial subsolutions.
class TruncatedNonlinearity {
public:
  /// Builds the blend and verifies its defining inequalities on a dense
  /// sample; the positive-mass condition (integral of f_delta up to
  /// 1-delta/2) is re-checked by quadrature.  Throws std::invalid_argument
  /// when delta is out of range or a check fails.
  TruncatedNonlinearity(const BistableNonlinearity& base, double delta);

  const BistableNonlinearity& base() const { return base_; }
  double delta() const { return delta_; }

  /// Saturation level 1 - delta/2.
  double limit() const { return 1.0 - 0.5 * delta_; }

  double f(double s) const;

  /// Antiderivative of f_delta with F(0) = 0 (piecewise closed form).
  double F(double s) const;

  /// F_delta evaluated at the saturation level; strictly positive.
  double mass_to_limit() const { return F_limit_; }

private:
  double eval_piece(const std::array<double, 4>& c, double tau) const;
  double eval_piece_integral(const std::array<double, 4>& c, double tau) const;

  BistableNonlinearity base_;
  double delta_;
  double s0_, s1_;                  // 1-delta, 1-delta/2
  std::array<double, 4> piece_a_;   // cubic on [s0, s1], coeffs in (s-s0)^k
  std::array<double, 4> piece_b_;   // cubic on [s1, 1], coeffs in (s-s1)^k
  double tail_value_, tail_slope_;  // linear continuation past s = 1
  double F_s0_, F_s1_, F_one_;      // antiderivative at the knots
  double F_limit_;
};

}  // namespace frontlab
