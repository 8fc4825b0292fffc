#pragma once

#include <vector>

#include "frontlab/grid_mask.hpp"

namespace frontlab {

/// Scalar unknown on the active nodes of a mask, dof-indexed, together with
/// the value it takes on the Dirichlet ring and solve metadata.
struct Field2D {
  Field2D() = default;
  Field2D(const GridMask& m, double init, double ring_value)
      : mask(&m), v(static_cast<size_t>(m.n_active()), init), boundary_value(ring_value) {}

  const GridMask* mask = nullptr;
  std::vector<double> v;
  double boundary_value = 1.0;

  double residual_norm = -1.0;  ///< sup norm of the PDE residual after a solve
  int iterations = 0;

  double min_value() const;
  double max_value() const;
  /// Location of the minimum over active nodes.
  Vec2 argmin() const;
};

/// max_i |a_i - b_i| over active nodes (fields must share a mask).
double sup_distance(const Field2D& a, const Field2D& b);

}  // namespace frontlab
