#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace frontlab {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm2() const { return x * x + y * y; }
  double norm() const;
  Vec2 normalized() const;
  /// Rotate by -90 degrees: for a CCW-oriented loop this turns an edge
  /// direction into the outward normal.
  Vec2 rot_cw() const { return {y, -x}; }
};

/// Closed polyline; the edge from pts.back() to pts.front() is implicit.
struct Loop {
  std::vector<Vec2> pts;

  int size() const { return static_cast<int>(pts.size()); }
  Vec2 edge_start(int e) const { return pts[e]; }
  Vec2 edge_end(int e) const { return pts[(e + 1) % pts.size()]; }
  /// Outward unit normal of edge e (loop assumed CCW around solid).
  Vec2 edge_normal(int e) const;
  double signed_area() const;
};

/// Compact obstacle described by one or more disjoint, simple, positively
/// oriented (CCW, solid on the left) boundary loops.  Generators record the
/// corner-rounding radius they used and, when the body contains a narrow
/// open passage that the solver grid must resolve, its width.
class ObstacleBoundary {
public:
  ObstacleBoundary() = default;
  explicit ObstacleBoundary(std::vector<Loop> loops, double corner_radius = 0.0);

  const std::vector<Loop>& loops() const { return loops_; }
  bool empty() const { return loops_.empty(); }
  int total_vertices() const;

  double corner_radius() const { return corner_radius_; }
  /// Width of the narrowest open passage through the body, +inf when the
  /// generator declared none.
  double min_passage() const { return min_passage_; }
  void set_min_passage(double w) { min_passage_ = w; }

  /// Generator tag ("family;param=value;..."), used to match masks against
  /// the parameters they were rasterized from.
  const std::string& tag() const { return tag_; }
  void set_tag(std::string t) { tag_ = std::move(t); }

  /// Even-odd point membership over all loops.
  bool contains(Vec2 p) const;
  double distance_to_boundary(Vec2 p) const;

  Vec2 bbox_lo() const { return bbox_lo_; }
  Vec2 bbox_hi() const { return bbox_hi_; }
  double max_vertex_radius() const;

  /// All vertices scaled about the origin; rounding radius and passage
  /// width scale along.
  ObstacleBoundary scaled(double factor) const;

  /// Emit boundary points with spacing at most `spacing`, together with the
  /// outward normal of the edge each point lies on.
  void densify(double spacing, std::vector<Vec2>& points, std::vector<Vec2>& normals) const;

  /// Simplicity, orientation and disjointness checks; throws on violation.
  void validate() const;

private:
  std::vector<Loop> loops_;
  double corner_radius_ = 0.0;
  double min_passage_ = std::numeric_limits<double>::infinity();
  std::string tag_;
  Vec2 bbox_lo_, bbox_hi_;
};

// ---------------------------------------------------------------------------
// Geometric hypothesis tests
// ---------------------------------------------------------------------------

struct StarShapedResult {
  bool star_shaped = false;
  /// A point that sees every boundary point with the outward-normal
  /// condition satisfied (present when star_shaped).
  std::optional<Vec2> center;
  /// Loop-local index of the edge whose half-plane emptied the candidate
  /// set, or that failed the visibility verification.
  std::optional<int> violating_edge;
};

/// Decides star-shapedness of a single-loop body exactly (up to tol): a
/// center must satisfy n_e . x <= n_e . p_e + tol for every boundary edge e,
/// so the candidate set is the intersection of one half-plane per edge.  A
/// nonempty intersection yields a witness which is then re-verified by
/// sampling segments from it to the boundary.  Empty bodies count as
/// star-shaped.
StarShapedResult is_star_shaped(const ObstacleBoundary& b, double tol = 1e-9);

struct DirectionalConvexityResult {
  bool directionally_convex = false;
  /// Offset a of the separating line {x . e = a} (present on success).
  std::optional<double> plane_offset;
  /// Transverse offset of a scanline meeting the body in >= 2 segments, or
  /// of one of the two scanlines whose chords admit no common offset.
  std::optional<double> violating_line_offset;
};

/// Scanline test of directional convexity with respect to direction e:
/// every line parallel to e must meet the body in at most one segment, and
/// all chords must share a common coordinate a along e.  scan_spacing = 0
/// picks span/2048.
DirectionalConvexityResult is_directionally_convex(const ObstacleBoundary& b, Vec2 e_dir,
                                                   double tol = 1e-9,
                                                   double scan_spacing = 0.0);

/// Segments (sorted, paired) cut by the line p(t) = t*dir + offset*n with
/// n = dir rotated +90deg.  Exposed for the brute-force test oracles.
std::vector<std::pair<double, double>> line_body_intersections(const ObstacleBoundary& b,
                                                               Vec2 dir, double offset);

// ---------------------------------------------------------------------------
// Obstacle families
// ---------------------------------------------------------------------------

/// Regular polygon approximation of the disk of radius r0, mirror-symmetric
/// about the x-axis.  edge_len controls the vertex spacing.
ObstacleBoundary make_disk(double r0, double edge_len = 0.02);

/// Disk with n_spikes thin protrusions of extent eps and width O(eps^2),
/// rounded tips.  The spikes lean sideways (their axes miss the disk
/// center), which is what destroys every candidate star center as soon as
/// eps > 0; at eps = 0 the plain disk is returned.  Even n_spikes gives a
/// body mirror-symmetric about the x-axis.
ObstacleBoundary make_spiky_disk(double r0, double eps, int n_spikes,
                                 double edge_len = 0.02);

/// Rectangle with thin teeth of height eps on its top and bottom sides.
/// The limit eps = 0 is directionally convex with respect to e1; any eps > 0
/// is not (lines through the tooth band cross several teeth).
ObstacleBoundary make_comb(double eps);

/// Ball + corridor + channelled annulus assembly.  The annulus of radii
/// r1 < r2 is centered at x0 = (r0 + r2 + beta1, 0), linked to the ball
/// B_r0 by a corridor of length beta1, and opened toward +x by a straight
/// channel of half-width 1.5*eta cut through its far wall, so the annular
/// hole communicates with the exterior only through that channel.  The
/// whole body is scaled by eps.
struct CounterexampleParams {
  double r0 = 1.0;
  double r1 = 1.0;
  double r2 = 2.0;
  double beta1 = 1.0;
  double eta = 0.1;
  double eps = 1.0;

  /// Requires 0 < r1 < r2, eta < (r2-r1)/4, beta1 > 0, r0 > 0, eps in (0,1].
  void validate() const;
  /// Center of the annular region before scaling: (r0 + r2 + beta1, 0).
  Vec2 annulus_center() const { return {r0 + r2 + beta1, 0.0}; }
  std::string tag() const;
};

ObstacleBoundary make_counterexample(const CounterexampleParams& p, double edge_len = 0.02);

// ---------------------------------------------------------------------------
// Boundary metrics
// ---------------------------------------------------------------------------

/// Symmetric Hausdorff distance between the two boundaries, computed on
/// vertex sets densified to `spacing`.
double boundary_distance_c0(const ObstacleBoundary& a, const ObstacleBoundary& b,
                            double spacing = 0.0125);

/// Max over densified points of one boundary of the angle (radians) between
/// its outward normal and the normal at the closest point of the other
/// boundary; symmetrized.
double boundary_distance_c1(const ObstacleBoundary& a, const ObstacleBoundary& b,
                            double spacing = 0.0125);

}  // namespace frontlab
