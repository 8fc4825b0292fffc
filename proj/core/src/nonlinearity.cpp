#include "frontlab/nonlinearity.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace frontlab {

BistableNonlinearity::BistableNonlinearity(double theta, double amplitude)
    : theta_(theta), amplitude_(amplitude) {
  if (!(theta > 0.0) || !(theta < 0.5)) {
    std::ostringstream msg;
    msg << "bistable nonlinearity requires 0 < theta < 1/2 (positive mass), got theta=" << theta;
    throw std::invalid_argument(msg.str());
  }
  if (!(amplitude > 0.0)) {
    throw std::invalid_argument("bistable nonlinearity requires amplitude > 0");
  }
}

double BistableNonlinearity::f(double s) const {
  if (s < 0.0) return -amplitude_ * theta_ * s;                 // slope f'(0)
  if (s > 1.0) return -amplitude_ * (1.0 - theta_) * (s - 1.0); // slope f'(1)
  return amplitude_ * s * (1.0 - s) * (s - theta_);
}

double BistableNonlinearity::df(double s) const {
  if (s < 0.0) return -amplitude_ * theta_;
  if (s > 1.0) return -amplitude_ * (1.0 - theta_);
  return amplitude_ * (-3.0 * s * s + 2.0 * (1.0 + theta_) * s - theta_);
}

double BistableNonlinearity::F(double s) const {
  if (s < 0.0) return -0.5 * amplitude_ * theta_ * s * s;
  if (s > 1.0) {
    const double e = s - 1.0;
    return mass() - 0.5 * amplitude_ * (1.0 - theta_) * e * e;
  }
  return amplitude_ * (s * s * (-0.25 * s * s + (1.0 + theta_) / 3.0 * s - 0.5 * theta_));
}

double BistableNonlinearity::mass() const {
  return amplitude_ * (1.0 - 2.0 * theta_) / 12.0;
}

double BistableNonlinearity::max_slope() const {
  return amplitude_ * std::max(theta_, 1.0 - theta_);
}

namespace {

// Cubic Hermite coefficients on [0, len] in local powers tau^k.
std::array<double, 4> hermite(double y0, double m0, double y1, double m1, double len) {
  return {y0, m0, (3.0 * (y1 - y0) / len - 2.0 * m0 - m1) / len,
          (2.0 * (y0 - y1) / len + m0 + m1) / (len * len)};
}

}  // namespace

TruncatedNonlinearity::TruncatedNonlinearity(const BistableNonlinearity& base, double delta)
    : base_(base), delta_(delta) {
  const double theta = base.theta();
  if (!(delta > 0.0) || !(1.0 - delta > theta)) {
    std::ostringstream msg;
    msg << "truncation requires 0 < delta < 1 - theta; got delta=" << delta
        << ", theta=" << theta;
    throw std::invalid_argument(msg.str());
  }
  s0_ = 1.0 - delta;
  s1_ = 1.0 - 0.5 * delta;

  // Spline data: keep value and slope of f at s0; cross zero at s1 with a
  // negative slope; land at s=1 on the shifted linear tail f(s) + f'(1)*delta/2
  // so the blend stays below f on both pieces.
  const double half = 0.5 * delta;
  const double v0 = base.f(s0_);
  const double m0 = base.df(s0_);
  double m1 = base.df(s1_);
  if (!(m1 < 0.0)) m1 = -v0 / (s1_ - s0_);  // wide-delta fallback, checked below
  const double slope_one = base.df(1.0);    // -a*(1-theta)
  const double v_end = slope_one * half;    // < 0
  piece_a_ = hermite(v0, m0, 0.0, m1, s1_ - s0_);
  piece_b_ = hermite(0.0, m1, v_end, slope_one, 1.0 - s1_);
  tail_value_ = v_end;
  tail_slope_ = slope_one;

  F_s0_ = base.F(s0_);
  F_s1_ = F_s0_ + eval_piece_integral(piece_a_, s1_ - s0_);
  F_one_ = F_s1_ + eval_piece_integral(piece_b_, 1.0 - s1_);
  F_limit_ = F_s1_;

  // Positive mass of the truncated term, re-checked by composite Simpson
  // quadrature as an independent route to the closed-form antiderivative.
  const int n = 2048;
  double quad = 0.0;
  const double hq = s1_ / n;
  for (int i = 0; i < n; ++i) {
    const double a = i * hq;
    quad += hq / 6.0 * (f(a) + 4.0 * f(a + 0.5 * hq) + f(a + hq));
  }
  if (!(quad > 0.0) || !(F_limit_ > 0.0) || std::abs(quad - F_limit_) > 1e-9) {
    std::ostringstream msg;
    msg << "truncated nonlinearity rejected: integral up to 1-delta/2 is " << quad
        << " (closed form " << F_limit_ << ") for delta=" << delta;
    throw std::invalid_argument(msg.str());
  }

  // Defining inequalities, sampled densely over and past the blend region.
  for (int i = 0; i <= 3000; ++i) {
    const double s = s0_ + (1.5 - s0_) * i / 3000.0;
    const double fd = f(s);
    if (fd > base.f(s) + 1e-13) {
      throw std::invalid_argument("truncated nonlinearity rejected: f_delta exceeds f");
    }
    if (s > s1_ + 1e-12 && !(fd < 0.0)) {
      throw std::invalid_argument(
          "truncated nonlinearity rejected: f_delta not negative past 1-delta/2");
    }
  }
}

double TruncatedNonlinearity::eval_piece(const std::array<double, 4>& c, double tau) const {
  return c[0] + tau * (c[1] + tau * (c[2] + tau * c[3]));
}

double TruncatedNonlinearity::eval_piece_integral(const std::array<double, 4>& c,
                                                  double tau) const {
  return tau * (c[0] + tau * (c[1] / 2.0 + tau * (c[2] / 3.0 + tau * c[3] / 4.0)));
}

double TruncatedNonlinearity::f(double s) const {
  if (s <= s0_) return base_.f(s);
  if (s <= s1_) return eval_piece(piece_a_, s - s0_);
  if (s <= 1.0) return eval_piece(piece_b_, s - s1_);
  return tail_value_ + tail_slope_ * (s - 1.0);
}

double TruncatedNonlinearity::F(double s) const {
  if (s <= s0_) return base_.F(s);
  if (s <= s1_) return F_s0_ + eval_piece_integral(piece_a_, s - s0_);
  if (s <= 1.0) return F_s1_ + eval_piece_integral(piece_b_, s - s1_);
  const double e = s - 1.0;
  return F_one_ + tail_value_ * e + 0.5 * tail_slope_ * e * e;
}

}  // namespace frontlab
