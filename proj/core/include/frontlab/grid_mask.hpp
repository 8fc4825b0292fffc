#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "frontlab/geometry.hpp"

namespace frontlab {

enum class CellClass : std::uint8_t { Active, Obstacle, Dirichlet };

/// Uniform node-centered grid over the truncated domain: nodes inside the
/// obstacle are Obstacle, nodes at or beyond the truncation radius are
/// Dirichlet, everything else is Active (the unknowns).  The zero-flux
/// obstacle condition is carried variationally: a grid cell contributes to
/// stencils only when none of its four corners is an Obstacle node, which
/// reproduces the classic five-point stencil away from the body and
/// mirror-reflection closures along its staircase boundary.
class GridMask {
public:
  /// Point-in-polygon classification of every node.  Enforces that the
  /// truncation radius clears the obstacle by `clearance` length units,
  /// that any declared narrow passage spans at least 6 active cells, and
  /// that the active set is 4-connected.  Throws on violation.
  static GridMask rasterize(const ObstacleBoundary& b, double h, double r_outer,
                            double clearance = 5.0);

  /// All-Neumann rectangular island [0,w] x [0,h_len]; test domains.
  static GridMask island_box(double width, double height, double h);

  /// All-Neumann island of the nodes inside `region` within the given
  /// bounding box.
  static GridMask island_region(double h, Vec2 lo, Vec2 hi,
                                const std::function<bool(Vec2)>& region);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double h() const { return h_; }
  double r_outer() const { return r_outer_; }

  // Node coordinates; the integer offset form keeps mirrored node pairs at
  // exactly opposite y.
  double x_of(int i) const { return origin_.x + (i - mid_) * h_; }
  double y_of(int j) const { return origin_.y + (j - mid_) * h_; }
  int node(int i, int j) const { return j * nx_ + i; }

  CellClass cls(int i, int j) const { return cls_[node(i, j)]; }
  CellClass cls_node(int n) const { return cls_[n]; }

  int n_active() const { return static_cast<int>(dof_node_.size()); }
  /// Dof index of node (i,j), or -1 when the node is not Active.
  int dof_at(int i, int j) const { return dof_[node(i, j)]; }
  int dof_node(int dof) const { return dof_node_[dof]; }
  Vec2 dof_xy(int dof) const {
    const int n = dof_node_[dof];
    return {x_of(n % nx_), y_of(n / nx_)};
  }

  /// Per-dof stencil closure.  nb[k] is the neighboring dof (W,E,S,N), or
  /// -1 for a Dirichlet neighbor, -2 where the face is closed (obstacle or
  /// grid edge).  weight2[k] is the edge weight in half units (0,1,2):
  /// edges flanked by two open cells get full weight, one open cell half.
  /// mass4 counts open incident cells (0..4), i.e. the trapezoidal node
  /// area in quarter-cell units.
  struct Stencil {
    std::array<std::int32_t, 4> nb;
    std::array<std::uint8_t, 4> weight2;
    std::uint8_t mass4;
  };
  const Stencil& stencil(int dof) const { return stencils_[dof]; }

  /// Edge weight (0, 0.5, 1) and node mass factor (0..1) as doubles.
  static double edge_weight(const Stencil& s, int k) { return 0.5 * s.weight2[k]; }
  static double node_mass(const Stencil& s) { return 0.25 * s.mass4; }

  /// Generator tag of the boundary this mask was rasterized from.
  const std::string& source_tag() const { return source_tag_; }

  bool has_dirichlet() const { return has_dirichlet_; }

private:
  void build_dofs_and_stencils();
  void check_connected() const;

  int nx_ = 0, ny_ = 0, mid_ = 0;
  Vec2 origin_{0.0, 0.0};
  double h_ = 0.0, r_outer_ = 0.0;
  bool has_dirichlet_ = false;
  std::vector<CellClass> cls_;
  std::vector<std::int32_t> dof_;
  std::vector<std::int32_t> dof_node_;
  std::vector<Stencil> stencils_;
  std::string source_tag_;
};

/// Free-function form of GridMask::rasterize.
GridMask rasterize(const ObstacleBoundary& b, double h, double r_outer,
                   double clearance = 5.0);

}  // namespace frontlab
