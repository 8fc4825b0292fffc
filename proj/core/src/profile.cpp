#include "frontlab/profile.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace frontlab {

namespace {

double interp_uniform(const std::vector<double>& xs, const std::vector<double>& ys, double x,
                      double lo_value, double hi_value) {
  if (xs.empty()) return lo_value;
  if (x <= xs.front()) return lo_value;
  if (x >= xs.back()) return hi_value;
  const double dx = xs[1] - xs[0];
  const size_t i = std::min(xs.size() - 2, static_cast<size_t>((x - xs.front()) / dx));
  const double t = (x - xs[i]) / (xs[i + 1] - xs[i]);
  return ys[i] + t * (ys[i + 1] - ys[i]);
}

}  // namespace

double Profile1D::eval(double x) const {
  if (x <= 0.0) return 0.0;
  return interp_uniform(xi, values, x, 0.0, limit);
}

double Profile1D::eval_deriv(double x) const {
  if (x <= 0.0) return derivs.empty() ? 0.0 : derivs.front();
  return interp_uniform(xi, derivs, x, derivs.front(), derivs.back());
}

namespace {

// Shared shooting core.  The second-order problem w'' = -f(w) with
// w'(0) = sqrt(2 F(limit)) conserves w'^2/2 + F(w), so along the monotone
// connection w' = sqrt(2 (F(limit) - F(w))) holds exactly; integrating this
// reduced equation keeps the stored (value, derivative) pairs on the energy
// level by construction.
Profile1D shoot_reduced(const std::function<double(double)>& F, double F_limit, double limit,
                        double step, double xi_max, const char* what) {
  if (!(step > 0.0) || !(xi_max > step)) {
    throw std::invalid_argument("profile shooting requires 0 < step < xi_max");
  }
  const auto slope = [&](double w) {
    if (w >= limit) return 0.0;
    return std::sqrt(std::max(0.0, 2.0 * (F_limit - F(w))));
  };

  const int n = static_cast<int>(std::llround(xi_max / step));
  Profile1D p;
  p.limit = limit;
  p.xi.resize(n + 1);
  p.values.resize(n + 1);
  p.derivs.resize(n + 1);
  double w = 0.0;
  for (int i = 0; i <= n; ++i) {
    p.xi[i] = i * step;
    p.values[i] = w;
    p.derivs[i] = slope(w);
    if (i == n) break;
    const double k1 = slope(w);
    const double k2 = slope(w + 0.5 * step * k1);
    const double k3 = slope(w + 0.5 * step * k2);
    const double k4 = slope(w + step * k3);
    w = std::min(limit, w + step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
  }

  if (!(p.values.back() > limit - 1e-6)) {
    std::ostringstream msg;
    msg << what << ": profile reaches only " << p.values.back() << " at xi_max=" << xi_max
        << " (plateau " << limit << " not attained; enlarge xi_max)";
    throw std::runtime_error(msg.str());
  }
  double worst_drift = 0.0;
  for (int i = 0; i <= n; ++i) {
    if (p.values[i] < 0.0 || p.values[i] > limit) {
      throw std::runtime_error(std::string(what) + ": profile left (0, limit)");
    }
    // Strict growth until the plateau, where increments drop below one ulp.
    if (i < n && p.values[i + 1] < p.values[i]) {
      throw std::runtime_error(std::string(what) + ": profile not monotone (step too coarse)");
    }
    if (i < n && limit - p.values[i] > 1e-12 && !(p.values[i + 1] > p.values[i])) {
      throw std::runtime_error(std::string(what) + ": profile stalled before the plateau");
    }
    worst_drift = std::max(
        worst_drift, std::abs(0.5 * p.derivs[i] * p.derivs[i] + F(p.values[i]) - F_limit));
  }
  if (worst_drift > 1e-8) {
    std::ostringstream msg;
    msg << what << ": energy drift " << worst_drift << " exceeds 1e-8 (step too coarse)";
    throw std::runtime_error(msg.str());
  }
  return p;
}

}  // namespace

Profile1D shoot_omega(const BistableNonlinearity& nl, double step, double xi_max) {
  return shoot_reduced([&nl](double s) { return nl.F(s); }, nl.F(1.0), 1.0, step, xi_max,
                       "shoot_omega");
}

Profile1D shoot_omega_delta(const TruncatedNonlinearity& tnl, double step, double xi_max) {
  return shoot_reduced([&tnl](double s) { return tnl.F(s); }, tnl.mass_to_limit(),
                       tnl.limit(), step, xi_max, "shoot_omega_delta");
}

// ---------------------------------------------------------------------------
// Traveling wave
// ---------------------------------------------------------------------------

namespace {

struct ShotOutcome {
  int sign = 0;  // +1 overshoot (phi crossed 0), -1 undershoot (phi turned back up)
  double xi_event = 0.0;
};

constexpr double kSaddleOffset = 1e-6;

double unstable_rate(const BistableNonlinearity& nl, double c) {
  const double a1 = -nl.df(1.0);  // > 0
  return 0.5 * (-c + std::sqrt(c * c + 4.0 * a1));
}

// Integrate phi'' + c phi' + f(phi) = 0 from just below the saddle at 1,
// leaving along its unstable eigendirection, and classify the failure mode.
// When `trace` is set the trajectory is recorded at every step.
ShotOutcome shoot_wave(const BistableNonlinearity& nl, double c, double step, double budget,
                       std::vector<double>* trace) {
  double phi = 1.0 - kSaddleOffset;
  double dphi = -kSaddleOffset * unstable_rate(nl, c);
  const auto rhs = [&](double p, double dp, double& out_dp, double& out_ddp) {
    out_dp = dp;
    out_ddp = -c * dp - nl.f(p);
  };
  if (trace) {
    trace->clear();
    trace->push_back(phi);
  }
  const long nmax = std::llround(budget / step);
  for (long i = 0; i < nmax; ++i) {
    double k1p, k1v, k2p, k2v, k3p, k3v, k4p, k4v;
    rhs(phi, dphi, k1p, k1v);
    rhs(phi + 0.5 * step * k1p, dphi + 0.5 * step * k1v, k2p, k2v);
    rhs(phi + 0.5 * step * k2p, dphi + 0.5 * step * k2v, k3p, k3v);
    rhs(phi + step * k3p, dphi + step * k3v, k4p, k4v);
    phi += step / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    dphi += step / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    if (trace) trace->push_back(phi);
    if (phi < -1e-10) return {+1, (i + 1) * step};
    if (dphi > 1e-12) return {phi > 1e-7 ? -1 : +1, (i + 1) * step};
  }
  return {phi < 1e-7 ? +1 : -1, budget};
}

}  // namespace

double WaveSolution::eval(double x) const { return interp_uniform(xi, phi, x, 1.0, 0.0); }

WaveSolution solve_traveling_wave(const BistableNonlinearity& nl, double domain_half_length,
                                  double step, std::pair<double, double> c_bracket) {
  const double budget = std::max(200.0, 6.0 * domain_half_length);
  double c_lo = c_bracket.first;
  double c_hi = c_bracket.second;
  const ShotOutcome s_lo = shoot_wave(nl, c_lo, step, budget, nullptr);
  const ShotOutcome s_hi = shoot_wave(nl, c_hi, step, budget, nullptr);
  if (s_lo.sign == s_hi.sign || s_lo.sign != +1) {
    std::ostringstream msg;
    msg << "speed bracket [" << c_lo << ", " << c_hi << "] does not straddle the wave: "
        << "shot at " << c_lo << " -> " << (s_lo.sign > 0 ? "overshoot" : "undershoot")
        << " (xi=" << s_lo.xi_event << "), shot at " << c_hi << " -> "
        << (s_hi.sign > 0 ? "overshoot" : "undershoot") << " (xi=" << s_hi.xi_event << ")";
    throw std::invalid_argument(msg.str());
  }
  while (c_hi - c_lo > 1e-8) {
    const double cm = 0.5 * (c_lo + c_hi);
    const ShotOutcome sm = shoot_wave(nl, cm, step, budget, nullptr);
    if (sm.sign == +1) {
      c_lo = cm;
    } else {
      c_hi = cm;
    }
  }
  const double c = 0.5 * (c_lo + c_hi);

  // Rebuild the converged trajectory densely and measure how well it solves
  // the ODE before it is blown off the connection.
  std::vector<double> traj;
  shoot_wave(nl, c, step, budget, &traj);
  size_t last = traj.size() - 1;
  for (size_t i = 0; i < traj.size(); ++i) {
    if (traj[i] < 1e-9) {
      last = i;
      break;
    }
  }
  double residual = 0.0;
  for (size_t i = 1; i + 1 <= last; ++i) {
    const double dd = (traj[i + 1] - 2.0 * traj[i] + traj[i - 1]) / (step * step);
    const double d1 = (traj[i + 1] - traj[i - 1]) / (2.0 * step);
    residual = std::max(residual, std::abs(dd + c * d1 + nl.f(traj[i])));
  }

  // Center the profile at phi = 1/2 on a uniform symmetric grid, extending
  // by the exact saddle linearizations beyond the traced span.
  double xi_half = 0.0;
  for (size_t i = 0; i + 1 <= last; ++i) {
    if (traj[i] >= 0.5 && traj[i + 1] < 0.5) {
      xi_half = (i + (traj[i] - 0.5) / (traj[i] - traj[i + 1])) * step;
      break;
    }
  }
  const double rate_one = unstable_rate(nl, c);
  const double rate_zero = 0.5 * (-c - std::sqrt(c * c - 4.0 * nl.df(0.0)));

  WaveSolution w;
  w.speed = c;
  w.residual = residual;
  const int n = static_cast<int>(std::llround(domain_half_length / step));
  w.xi.resize(2 * n + 1);
  w.phi.resize(2 * n + 1);
  const double xi_end = last * step;
  for (int k = -n; k <= n; ++k) {
    const double xo = k * step;
    const double xt = xo + xi_half;
    double value;
    if (xt < 0.0) {
      value = 1.0 - kSaddleOffset * std::exp(rate_one * xt);
    } else if (xt > xi_end) {
      value = traj[last] * std::exp(rate_zero * (xt - xi_end));
    } else {
      const size_t i = std::min(last - 1, static_cast<size_t>(xt / step));
      const double t = xt / step - i;
      value = traj[i] + t * (traj[i + 1] - traj[i]);
    }
    w.xi[k + n] = xo;
    w.phi[k + n] = value;
  }

  for (size_t i = 0; i + 1 < w.phi.size(); ++i) {
    if (!(w.phi[i + 1] < w.phi[i])) {
      throw std::runtime_error("traveling wave profile is not strictly decreasing");
    }
  }
  if (!(w.phi.front() > 1.0 - 1e-3) || !(w.phi.back() < 1e-3)) {
    std::ostringstream msg;
    msg << "domain_half_length=" << domain_half_length
        << " too short for the wave tails: phi(-L)=" << w.phi.front()
        << ", phi(L)=" << w.phi.back();
    throw std::runtime_error(msg.str());
  }
  return w;
}

Field2D radialize(const Profile1D& p, double shift, const GridMask& mask) {
  if (!(shift >= 0.0)) throw std::invalid_argument("radialize requires shift >= 0");
  Field2D out(mask, 0.0, p.eval(mask.r_outer() - shift));
  for (int d = 0; d < mask.n_active(); ++d) {
    const Vec2 xy = mask.dof_xy(d);
    out.v[d] = p.eval(xy.norm() - shift);
  }
  return out;
}

}  // namespace frontlab
