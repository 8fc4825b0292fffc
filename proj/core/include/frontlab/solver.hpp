#pragma once

#include <functional>
#include <string>
#include <vector>

#include "frontlab/field.hpp"
#include "frontlab/nonlinearity.hpp"
#include "frontlab/profile.hpp"

namespace frontlab {

struct SolverConfig {
  double newton_tol = 1e-10;  ///< sup norm target for the PDE residual
  int max_newton = 50;
  double armijo_factor = 0.5;              ///< backtracking ratio
  double min_step = 9.5367431640625e-07;   ///< 2^-20
  double fallback_flow_dt = 0.0;           ///< 0 picks 0.2*h^2/4
  double linear_tol = 1e-12;               ///< CG tolerance on the Newton system
  int max_flow_steps = 20000;              ///< fallback budget

  void validate() const;
};

/// Discrete Laplacian of the field: classic five-point stencil at interior
/// nodes, trapezoidal cell closures along the obstacle staircase (zero-flux
/// there), field.boundary_value on the Dirichlet ring.  Exact on constants
/// and linear fields; equals 2N = 4 on |x|^2 away from boundaries.
Field2D apply_laplacian(const GridMask& mask, const Field2D& field);

/// PDE residual r = -lap(u) - f(u) at every active node, and its sup norm.
void steady_residual(const GridMask& mask, const BistableNonlinearity& nl, const Field2D& u,
                     std::vector<double>& r);
double steady_residual_sup(const GridMask& mask, const BistableNonlinearity& nl,
                           const Field2D& u);

/// Damped Newton for -lap(u) = f(u) with value 1 on the ring and zero flux
/// on the obstacle.  On stagnation the iterate is relaxed by semi-implicit
/// gradient-flow steps (ramped dt) until Newton re-enters its basin.  The
/// converged state must satisfy 0 < u <= 1 at every active node; a
/// violation throws, as does an exhausted fallback budget.
Field2D solve_steady(const GridMask& mask, const BistableNonlinearity& nl,
                     const Field2D& u_init, const SolverConfig& cfg = {});

using RingValueFn = std::function<double(Vec2)>;

/// One semi-implicit step: explicit reaction, implicit diffusion.  Requires
/// dt * max|f'| <= 1 so the reaction map is monotone; the result must stay
/// in [-1e-12, 1+1e-12] or the step throws (asserted, never clipped).
/// `ring` overrides the uniform ring value when given.
Field2D step_parabolic(const GridMask& mask, const BistableNonlinearity& nl,
                       const Field2D& u, double dt, const RingValueFn& ring = {});

struct ClassificationReport {
  enum class Verdict { Invaded, Blocked, Indeterminate };
  Verdict verdict = Verdict::Indeterminate;
  double min_value = 0.0;
  Vec2 argmin{0.0, 0.0};
  double residual = 0.0;  ///< sup PDE residual of the classified state
  double tol_liouville = 0.0;
  double theta = 0.0;

  std::string verdict_name() const;
};

/// Long-time dichotomy on a converged state: Invaded when min u > 1 - tol,
/// Blocked when min u <= theta, Indeterminate in the transient band between.
ClassificationReport classify_solution(const Field2D& u, const BistableNonlinearity& nl,
                                       double tol_liouville = 1e-2);

struct InvasionConfig {
  double t_end = 60.0;
  double dt = 0.1;
  int record_every = 10;
  /// Initial front sits at x1 = -(r_outer - front_offset).
  double front_offset = 2.0;
  Vec2 probe_center{0.0, 0.0};
  double probe_radius = 1.0;
};

struct InvasionResult {
  std::vector<double> times;
  std::vector<double> probe_min;
  std::vector<double> mass;
  Field2D final_state;
  ClassificationReport report;
};

/// Parabolic invasion run: the initial datum is the planar wave profile
/// placed left of the obstacle, and the ring carries the translating wave
/// trace (which saturates at 1 once the front has passed).  Minimum over
/// the probe region and total mass are recorded every record_every steps.
InvasionResult run_invasion(const GridMask& mask, const BistableNonlinearity& nl,
                            const WaveSolution& wave, const InvasionConfig& cfg);

struct OrderCheck {
  bool holds = false;
  double worst_gap = 0.0;  ///< min over nodes of u - p(|x| - r0)
};

/// Verifies u(x) >= p(|x| - r0) - tol_order at every active node with
/// |x| >= r0 (the discrete sub/supersolution ordering).
OrderCheck check_subsolution_order(const Field2D& u, const Profile1D& p, double r0,
                                   double tol_order);

}  // namespace frontlab
