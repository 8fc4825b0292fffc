#include "frontlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace frontlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

double Vec2::norm() const { return std::hypot(x, y); }

Vec2 Vec2::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
  return {x / n, y / n};
}

Vec2 Loop::edge_normal(int e) const {
  return (edge_end(e) - edge_start(e)).normalized().rot_cw();
}

double Loop::signed_area() const {
  double a = 0.0;
  for (int e = 0; e < size(); ++e) a += edge_start(e).cross(edge_end(e));
  return 0.5 * a;
}

namespace {

double point_segment_dist2(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = ab.norm2();
  double t = len2 > 0.0 ? (p - a).dot(ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const Vec2 q = a + ab * t;
  return (p - q).norm2();
}

bool segments_properly_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const double d1 = (b - a).cross(c - a);
  const double d2 = (b - a).cross(d - a);
  const double d3 = (d - c).cross(a - c);
  const double d4 = (d - c).cross(b - c);
  return ((d1 > 0.0) != (d2 > 0.0)) && ((d3 > 0.0) != (d4 > 0.0));
}

}  // namespace

ObstacleBoundary::ObstacleBoundary(std::vector<Loop> loops, double corner_radius)
    : loops_(std::move(loops)), corner_radius_(corner_radius) {
  // Drop duplicate consecutive vertices before any validation.
  for (auto& loop : loops_) {
    std::vector<Vec2> clean;
    clean.reserve(loop.pts.size());
    for (const Vec2& p : loop.pts) {
      if (clean.empty() || (p - clean.back()).norm2() > 1e-28) clean.push_back(p);
    }
    while (clean.size() > 1 && (clean.front() - clean.back()).norm2() <= 1e-28) {
      clean.pop_back();
    }
    loop.pts = std::move(clean);
  }
  bbox_lo_ = {std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
  bbox_hi_ = {std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
  for (const auto& loop : loops_) {
    for (const Vec2& p : loop.pts) {
      bbox_lo_.x = std::min(bbox_lo_.x, p.x);
      bbox_lo_.y = std::min(bbox_lo_.y, p.y);
      bbox_hi_.x = std::max(bbox_hi_.x, p.x);
      bbox_hi_.y = std::max(bbox_hi_.y, p.y);
    }
  }
  validate();
}

int ObstacleBoundary::total_vertices() const {
  int n = 0;
  for (const auto& loop : loops_) n += loop.size();
  return n;
}

void ObstacleBoundary::validate() const {
  for (const auto& loop : loops_) {
    if (loop.size() < 3) throw std::invalid_argument("boundary loop with fewer than 3 vertices");
    if (!(loop.signed_area() > 0.0)) {
      throw std::invalid_argument("boundary loop is not positively oriented (CCW)");
    }
    // Simplicity: no proper crossings between non-adjacent edges.
    const int n = loop.size();
    for (int i = 0; i < n; ++i) {
      const Vec2 a = loop.edge_start(i), b = loop.edge_end(i);
      for (int j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;  // adjacent around the seam
        if (segments_properly_intersect(a, b, loop.edge_start(j), loop.edge_end(j))) {
          std::ostringstream msg;
          msg << "boundary loop self-intersects between edges " << i << " and " << j;
          throw std::invalid_argument(msg.str());
        }
      }
    }
  }
  // Loops must be pairwise disjoint (no nesting, no crossing).
  for (size_t li = 0; li < loops_.size(); ++li) {
    for (size_t lj = li + 1; lj < loops_.size(); ++lj) {
      const Loop& a = loops_[li];
      const Loop& c = loops_[lj];
      for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < c.size(); ++j) {
          if (segments_properly_intersect(a.edge_start(i), a.edge_end(i), c.edge_start(j),
                                          c.edge_end(j))) {
            throw std::invalid_argument("boundary loops intersect");
          }
        }
      }
    }
  }
}

bool ObstacleBoundary::contains(Vec2 p) const {
  // Even-odd rule with a half-open vertical rule, so vertices on the test
  // ray are counted exactly once.
  bool inside = false;
  for (const auto& loop : loops_) {
    const int n = loop.size();
    for (int e = 0; e < n; ++e) {
      const Vec2 a = loop.edge_start(e), b = loop.edge_end(e);
      if ((a.y <= p.y) != (b.y <= p.y)) {
        const double xc = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (xc > p.x) inside = !inside;
      }
    }
  }
  return inside;
}

double ObstacleBoundary::distance_to_boundary(Vec2 p) const {
  double best = std::numeric_limits<double>::max();
  for (const auto& loop : loops_) {
    for (int e = 0; e < loop.size(); ++e) {
      best = std::min(best, point_segment_dist2(p, loop.edge_start(e), loop.edge_end(e)));
    }
  }
  return std::sqrt(best);
}

double ObstacleBoundary::max_vertex_radius() const {
  double r2 = 0.0;
  for (const auto& loop : loops_) {
    for (const Vec2& p : loop.pts) r2 = std::max(r2, p.norm2());
  }
  return std::sqrt(r2);
}

ObstacleBoundary ObstacleBoundary::scaled(double factor) const {
  std::vector<Loop> out = loops_;
  for (auto& loop : out) {
    for (auto& p : loop.pts) p = p * factor;
  }
  ObstacleBoundary b(std::move(out), corner_radius_ * factor);
  b.min_passage_ = min_passage_ * factor;
  b.tag_ = tag_;
  return b;
}

void ObstacleBoundary::densify(double spacing, std::vector<Vec2>& points,
                               std::vector<Vec2>& normals) const {
  points.clear();
  normals.clear();
  for (const auto& loop : loops_) {
    for (int e = 0; e < loop.size(); ++e) {
      const Vec2 a = loop.edge_start(e), b = loop.edge_end(e);
      const double len = (b - a).norm();
      const Vec2 nrm = loop.edge_normal(e);
      const int sub = std::max(1, static_cast<int>(std::ceil(len / spacing)));
      for (int k = 0; k < sub; ++k) {
        points.push_back(a + (b - a) * (static_cast<double>(k) / sub));
        normals.push_back(nrm);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Star-shapedness via half-plane intersection
// ---------------------------------------------------------------------------

namespace {

std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, Vec2 n, double c) {
  std::vector<Vec2> out;
  const int m = static_cast<int>(poly.size());
  for (int i = 0; i < m; ++i) {
    const Vec2 cur = poly[i];
    const Vec2 nxt = poly[(i + 1) % m];
    const double fc = n.dot(cur) - c;
    const double fn = n.dot(nxt) - c;
    if (fc <= 0.0) out.push_back(cur);
    if ((fc < 0.0 && fn > 0.0) || (fc > 0.0 && fn <= 0.0)) {
      out.push_back(cur + (nxt - cur) * (fc / (fc - fn)));
    }
  }
  return out;
}

Vec2 polygon_vertex_mean(const std::vector<Vec2>& poly) {
  Vec2 c{0.0, 0.0};
  for (const Vec2& p : poly) c = c + p;
  return c * (1.0 / static_cast<double>(poly.size()));
}

// Intersect the per-edge half-planes {x : n_e.x <= n_e.p_e + tol}.  Returns
// the kernel polygon, or empties out and reports the first edge whose
// constraint produced the empty set.
std::vector<Vec2> kernel_polygon(const Loop& loop, double tol, int* violating_edge) {
  Vec2 lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
  Vec2 hi{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
  for (const Vec2& p : loop.pts) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  const double pad = 1.0 + (hi - lo).norm();
  std::vector<Vec2> poly = {{lo.x - pad, lo.y - pad},
                            {hi.x + pad, lo.y - pad},
                            {hi.x + pad, hi.y + pad},
                            {lo.x - pad, hi.y + pad}};
  for (int e = 0; e < loop.size(); ++e) {
    const Vec2 n = loop.edge_normal(e);
    poly = clip_halfplane(poly, n, n.dot(loop.edge_start(e)) + tol);
    if (poly.size() < 3) {
      if (violating_edge) *violating_edge = e;
      return {};
    }
  }
  return poly;
}

bool visible_from(const ObstacleBoundary& b, const Loop& loop, Vec2 x, double tol,
                  int* bad_edge) {
  // Sample boundary points and interior segment points; everything on the
  // segment x + t*(y - x), t in (0,1), has to stay in the closed body.
  const double diam = (b.bbox_hi() - b.bbox_lo()).norm();
  const double spacing = std::max(diam / 512.0, 1e-6);
  for (int e = 0; e < loop.size(); ++e) {
    const Vec2 a = loop.edge_start(e), bb = loop.edge_end(e);
    const double len = (bb - a).norm();
    const int sub = std::max(1, static_cast<int>(std::ceil(len / spacing)));
    const Vec2 nrm = loop.edge_normal(e);
    for (int k = 0; k <= sub; ++k) {
      const Vec2 y = a + (bb - a) * (static_cast<double>(k) / sub);
      if (nrm.dot(y - x) < -tol - 1e-12) {
        if (bad_edge) *bad_edge = e;
        return false;
      }
      for (int ti = 1; ti <= 9; ++ti) {
        const Vec2 p = x + (y - x) * (0.1 * ti);
        if (!b.contains(p) && b.distance_to_boundary(p) > 1e-9) {
          if (bad_edge) *bad_edge = e;
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

StarShapedResult is_star_shaped(const ObstacleBoundary& b, double tol) {
  if (b.empty()) return {true, std::nullopt, std::nullopt};
  if (b.loops().size() != 1) {
    throw std::invalid_argument("is_star_shaped expects a single-loop boundary");
  }
  const Loop& loop = b.loops()[0];

  int edge = -1;
  std::vector<Vec2> kernel = kernel_polygon(loop, tol, &edge);
  if (kernel.empty()) return {false, std::nullopt, edge};

  Vec2 witness = polygon_vertex_mean(kernel);
  int bad = -1;
  if (visible_from(b, loop, witness, tol, &bad)) return {true, witness, std::nullopt};

  // The tol-relaxed kernel may admit points that fail strict visibility;
  // retry from the unrelaxed kernel before giving up.
  std::vector<Vec2> strict = kernel_polygon(loop, 0.0, &edge);
  if (!strict.empty()) {
    witness = polygon_vertex_mean(strict);
    if (visible_from(b, loop, witness, tol, &bad)) return {true, witness, std::nullopt};
  }
  return {false, std::nullopt, bad};
}

// ---------------------------------------------------------------------------
// Directional convexity via scanlines
// ---------------------------------------------------------------------------

std::vector<std::pair<double, double>> line_body_intersections(const ObstacleBoundary& b,
                                                               Vec2 dir, double offset) {
  const Vec2 d = dir.normalized();
  const Vec2 n{-d.y, d.x};
  std::vector<double> ts;
  for (const auto& loop : b.loops()) {
    for (int e = 0; e < loop.size(); ++e) {
      const Vec2 a = loop.edge_start(e), bb = loop.edge_end(e);
      const double sa = n.dot(a) - offset;
      const double sb = n.dot(bb) - offset;
      if ((sa <= 0.0) != (sb <= 0.0)) {
        const double ta = d.dot(a), tb = d.dot(bb);
        ts.push_back(ta + (tb - ta) * (sa / (sa - sb)));
      }
    }
  }
  std::sort(ts.begin(), ts.end());
  std::vector<std::pair<double, double>> segs;
  for (size_t i = 0; i + 1 < ts.size(); i += 2) {
    if (!segs.empty() && ts[i] - segs.back().second < 1e-12) {
      segs.back().second = ts[i + 1];
    } else {
      segs.emplace_back(ts[i], ts[i + 1]);
    }
  }
  return segs;
}

DirectionalConvexityResult is_directionally_convex(const ObstacleBoundary& b, Vec2 e_dir,
                                                   double tol, double scan_spacing) {
  if (b.empty()) return {true, 0.0, std::nullopt};
  const Vec2 d = e_dir.normalized();
  const Vec2 n{-d.y, d.x};

  double smin = std::numeric_limits<double>::max();
  double smax = std::numeric_limits<double>::lowest();
  for (const auto& loop : b.loops()) {
    for (const Vec2& p : loop.pts) {
      const double s = n.dot(p);
      smin = std::min(smin, s);
      smax = std::max(smax, s);
    }
  }
  const double spacing = scan_spacing > 0.0 ? scan_spacing : (smax - smin) / 2048.0;

  double lo = std::numeric_limits<double>::lowest();
  double hi = std::numeric_limits<double>::max();
  double lo_line = 0.0, hi_line = 0.0;
  bool any = false;
  for (double s = smin + 0.5 * spacing; s < smax; s += spacing) {
    const auto segs = line_body_intersections(b, d, s);
    if (segs.empty()) continue;
    if (segs.size() > 1) return {false, std::nullopt, s};
    any = true;
    if (segs[0].first > lo) {
      lo = segs[0].first;
      lo_line = s;
    }
    if (segs[0].second < hi) {
      hi = segs[0].second;
      hi_line = s;
    }
  }
  if (!any) return {true, 0.0, std::nullopt};
  if (lo <= hi + tol) return {true, 0.5 * (lo + hi), std::nullopt};
  (void)hi_line;
  return {false, std::nullopt, lo_line};
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

namespace {

// Mirror an open chain across the x-axis and append it reversed, producing a
// closed CCW loop with exact coordinate symmetry.  The chain must start and
// end on the axis.
Loop close_symmetric(std::vector<Vec2> upper) {
  Loop loop;
  loop.pts = std::move(upper);
  for (int i = static_cast<int>(loop.pts.size()) - 2; i >= 1; --i) {
    loop.pts.push_back({loop.pts[i].x, -loop.pts[i].y});
  }
  return loop;
}

void append_arc(std::vector<Vec2>& pts, Vec2 center, double radius, double a0, double a1,
                double edge_len, bool include_last) {
  const int n = std::max(2, static_cast<int>(std::ceil(std::abs(a1 - a0) * radius / edge_len)));
  for (int k = 0; k <= (include_last ? n : n - 1); ++k) {
    const double a = a0 + (a1 - a0) * k / n;
    pts.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
  }
}

// One analytic piece of a composite boundary chain: dense points plus exact
// unit tangents at the two ends (used for corner rounding).
struct ChainPiece {
  std::vector<Vec2> pts;
  Vec2 tan_in, tan_out;
};

// Cubic Bezier blend between trimmed piece ends; the trim distance doubles
// as the rounding radius.
void append_bezier(std::vector<Vec2>& out, Vec2 p0, Vec2 t0, Vec2 p3, Vec2 t3, int samples) {
  const double k = (p3 - p0).norm() / 3.0;
  const Vec2 p1 = p0 + t0 * k;
  const Vec2 p2 = p3 - t3 * k;
  for (int i = 1; i < samples; ++i) {
    const double t = static_cast<double>(i) / samples;
    const double u = 1.0 - t;
    out.push_back(p0 * (u * u * u) + p1 * (3.0 * u * u * t) + p2 * (3.0 * u * t * t) +
                  p3 * (t * t * t));
  }
}

std::vector<Vec2> join_chain(const std::vector<ChainPiece>& pieces, double round_radius) {
  std::vector<Vec2> out;
  for (size_t i = 0; i < pieces.size(); ++i) {
    std::vector<Vec2> pts = pieces[i].pts;
    if (i > 0 && round_radius > 0.0) {
      const Vec2 corner = pts.front();
      // Trim both sides of the corner by the rounding radius.
      while (out.size() > 1 && (out.back() - corner).norm() < round_radius) out.pop_back();
      size_t skip = 0;
      while (skip + 1 < pts.size() && (pts[skip] - corner).norm() < round_radius) ++skip;
      const Vec2 p0 = out.back();
      const Vec2 p3 = pts[skip];
      append_bezier(out, p0, pieces[i - 1].tan_out, p3, pieces[i].tan_in, 8);
      pts.erase(pts.begin(), pts.begin() + skip);
    }
    for (const Vec2& p : pts) {
      if (out.empty() || (p - out.back()).norm2() > 1e-28) out.push_back(p);
    }
  }
  return out;
}

}  // namespace

ObstacleBoundary make_disk(double r0, double edge_len) {
  if (!(r0 > 0.0)) throw std::invalid_argument("make_disk requires r0 > 0");
  int half = std::max(24, static_cast<int>(std::ceil(kPi * r0 / edge_len)));
  std::vector<Vec2> upper;
  upper.reserve(half + 1);
  for (int k = 0; k <= half; ++k) {
    const double a = kPi * k / half;
    upper.push_back({r0 * std::cos(a), r0 * std::sin(a)});
  }
  // Walk from angle pi to 0 so mirroring yields a CCW loop.
  std::reverse(upper.begin(), upper.end());
  ObstacleBoundary b({close_symmetric(std::move(upper))});
  std::ostringstream tag;
  tag << "disk;r0=" << r0;
  b.set_tag(tag.str());
  return b;
}

ObstacleBoundary make_spiky_disk(double r0, double eps, int n_spikes, double edge_len) {
  if (eps < 0.0) throw std::invalid_argument("make_spiky_disk requires eps >= 0");
  if (eps == 0.0) {
    ObstacleBoundary b = make_disk(r0, edge_len);
    std::ostringstream tag;
    tag << "spiky_disk;r0=" << r0 << ";eps=0;n=" << n_spikes;
    b.set_tag(tag.str());
    return b;
  }
  if (n_spikes < 1) throw std::invalid_argument("make_spiky_disk requires n_spikes >= 1");

  const double tilt = 0.6109;  // ~35 deg; slanted spikes admit no star center
  const double w = std::min(eps * eps, eps / 6.0);
  struct Spike {
    double entry_angle, exit_angle;
    std::vector<Vec2> pts;
  };
  std::vector<Spike> spikes;
  for (int k = 0; k < n_spikes; ++k) {
    const double beta = (k + 0.5) * 2.0 * kPi / n_spikes;
    const double sign = std::sin(beta) >= 0.0 ? 1.0 : -1.0;  // mirror the tilt below the axis
    const Vec2 base{r0 * std::cos(beta), r0 * std::sin(beta)};
    const Vec2 d{std::cos(beta + sign * tilt), std::sin(beta + sign * tilt)};
    const Vec2 side = d.rot_cw();  // right of the spike axis, seen along d
    const double reach = r0 + eps - w;
    const double cosr = base.dot(d) / r0;
    const double s = -r0 * cosr + std::sqrt(r0 * r0 * (cosr * cosr - 1.0) + reach * reach);
    const Vec2 tip = base + d * s;

    Spike sp;
    const Vec2 c_in = (base + side * w).normalized() * r0;
    const Vec2 c_out = (base - side * w).normalized() * r0;
    sp.entry_angle = std::atan2(c_in.y, c_in.x);
    sp.exit_angle = std::atan2(c_out.y, c_out.x);
    sp.pts.push_back(c_in);
    sp.pts.push_back(tip + side * w);
    const double a_side = std::atan2(side.y, side.x);
    append_arc(sp.pts, tip, w, a_side, a_side + kPi, std::max(edge_len / 4.0, w / 3.0), true);
    sp.pts.push_back(c_out);
    spikes.push_back(std::move(sp));
  }
  std::sort(spikes.begin(), spikes.end(), [](const Spike& a, const Spike& b) {
    return a.entry_angle < b.entry_angle;
  });

  std::vector<Vec2> pts;
  for (size_t k = 0; k < spikes.size(); ++k) {
    pts.insert(pts.end(), spikes[k].pts.begin(), spikes[k].pts.end());
    const double a0 = spikes[k].exit_angle;
    double a1 = spikes[(k + 1) % spikes.size()].entry_angle;
    if (a1 <= a0) a1 += 2.0 * kPi;
    append_arc(pts, {0.0, 0.0}, r0, a0, a1, edge_len, false);
  }
  ObstacleBoundary b({Loop{std::move(pts)}}, w);
  std::ostringstream tag;
  tag << "spiky_disk;r0=" << r0 << ";eps=" << eps << ";n=" << n_spikes;
  b.set_tag(tag.str());
  return b;
}

ObstacleBoundary make_comb(double eps) {
  if (eps < 0.0) throw std::invalid_argument("make_comb requires eps >= 0");
  const double hx = 1.0, hy = 0.6;
  std::vector<Vec2> pts;
  pts.push_back({hx, -hy});
  pts.push_back({hx, hy});
  if (eps > 0.0) {
    const double wt = 0.25 * eps;
    const double centers[5] = {0.8, 0.4, 0.0, -0.4, -0.8};
    for (double cx : centers) {  // top side, walked right to left
      pts.push_back({cx + wt, hy});
      pts.push_back({cx + wt, hy + eps});
      pts.push_back({cx - wt, hy + eps});
      pts.push_back({cx - wt, hy});
    }
  }
  pts.push_back({-hx, hy});
  pts.push_back({-hx, -hy});
  if (eps > 0.0) {
    const double wt = 0.25 * eps;
    const double centers[5] = {-0.8, -0.4, 0.0, 0.4, 0.8};
    for (double cx : centers) {  // bottom side, left to right
      pts.push_back({cx - wt, -hy});
      pts.push_back({cx - wt, -hy - eps});
      pts.push_back({cx + wt, -hy - eps});
      pts.push_back({cx + wt, -hy});
    }
  }
  ObstacleBoundary b({Loop{std::move(pts)}});
  std::ostringstream tag;
  tag << "comb;eps=" << eps;
  b.set_tag(tag.str());
  return b;
}

void CounterexampleParams::validate() const {
  std::ostringstream msg;
  if (!(r0 > 0.0)) msg << "r0 must be positive; ";
  if (!(0.0 < r1 && r1 < r2)) msg << "need 0 < r1 < r2; ";
  if (!(beta1 > 0.0)) msg << "beta1 must be positive; ";
  if (!(eta > 0.0 && eta < 0.25 * (r2 - r1))) msg << "need 0 < eta < (r2-r1)/4; ";
  if (!(1.5 * eta < 0.75 * r1)) msg << "channel half-width 1.5*eta must stay below 0.75*r1; ";
  if (!(eps > 0.0 && eps <= 1.0)) msg << "need eps in (0,1]; ";
  const std::string s = msg.str();
  if (!s.empty()) throw std::invalid_argument("counterexample params: " + s);
}

std::string CounterexampleParams::tag() const {
  std::ostringstream t;
  t.precision(17);
  t << "counterexample;r0=" << r0 << ";r1=" << r1 << ";r2=" << r2 << ";beta1=" << beta1
    << ";eta=" << eta << ";eps=" << eps;
  return t.str();
}

ObstacleBoundary make_counterexample(const CounterexampleParams& p, double edge_len) {
  p.validate();
  const Vec2 x0 = p.annulus_center();
  const double wc = 0.5 * std::min(p.r0, p.r2);  // corridor half-width
  const double sch = 1.5 * p.eta;                // channel half-width
  const double rf = 0.25 * p.eta;                // corner rounding

  const double gb = std::asin(wc / p.r0);   // corridor attach angle on the ball
  const double g2 = std::asin(wc / p.r2);   // corridor attach angle on the outer circle
  const double a2 = std::asin(sch / p.r2);  // channel mouth angle, outer circle
  const double a1 = std::asin(sch / p.r1);  // channel mouth angle, inner circle

  // Upper half of the single boundary loop, walked from the ball's left
  // axis point to the inner circle's left axis point; the lower half is the
  // exact mirror.  Tangents are those of the walk direction.
  std::vector<ChainPiece> pieces;

  ChainPiece ball;  // angle pi down to gb (clockwise walk over the ball top)
  append_arc(ball.pts, {0.0, 0.0}, p.r0, kPi, gb, edge_len, true);
  ball.tan_in = {0.0, 1.0};
  ball.tan_out = {std::sin(gb), -std::cos(gb)};
  pieces.push_back(std::move(ball));

  ChainPiece corridor_wall;  // y = wc, rightward
  corridor_wall.pts = {{std::sqrt(p.r0 * p.r0 - wc * wc), wc},
                       {x0.x - std::sqrt(p.r2 * p.r2 - wc * wc), wc}};
  corridor_wall.tan_in = corridor_wall.tan_out = {1.0, 0.0};
  pieces.push_back(std::move(corridor_wall));

  ChainPiece outer;  // angle pi-g2 down to a2 over the annulus top
  append_arc(outer.pts, x0, p.r2, kPi - g2, a2, edge_len, true);
  outer.tan_in = {std::sin(kPi - g2), -std::cos(kPi - g2)};
  outer.tan_out = {std::sin(a2), -std::cos(a2)};
  pieces.push_back(std::move(outer));

  ChainPiece channel_wall;  // y = sch, inward (leftward)
  channel_wall.pts = {{x0.x + std::sqrt(p.r2 * p.r2 - sch * sch), sch},
                      {x0.x + std::sqrt(p.r1 * p.r1 - sch * sch), sch}};
  channel_wall.tan_in = channel_wall.tan_out = {-1.0, 0.0};
  pieces.push_back(std::move(channel_wall));

  ChainPiece inner;  // angle a1 up to pi around the annular hole
  append_arc(inner.pts, x0, p.r1, a1, kPi, edge_len, true);
  inner.tan_in = {-std::sin(a1), std::cos(a1)};
  inner.tan_out = {0.0, -1.0};
  pieces.push_back(std::move(inner));

  std::vector<Vec2> upper = join_chain(pieces, rf);
  ObstacleBoundary body({close_symmetric(std::move(upper))}, rf);
  body.set_min_passage(2.0 * sch);
  ObstacleBoundary out = p.eps == 1.0 ? std::move(body) : body.scaled(p.eps);
  out.set_tag(p.tag());
  return out;
}

// ---------------------------------------------------------------------------
// Boundary metrics
// ---------------------------------------------------------------------------

namespace {

struct Densified {
  std::vector<Vec2> pts;
  std::vector<Vec2> nrm;
};

Densified densify_boundary(const ObstacleBoundary& b, double spacing) {
  Densified d;
  b.densify(spacing, d.pts, d.nrm);
  return d;
}

size_t closest_index(const std::vector<Vec2>& pts, Vec2 q) {
  size_t best = 0;
  double bd = std::numeric_limits<double>::max();
  for (size_t i = 0; i < pts.size(); ++i) {
    const double d2 = (pts[i] - q).norm2();
    if (d2 < bd) {
      bd = d2;
      best = i;
    }
  }
  return best;
}

double directed_hausdorff(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  double worst = 0.0;
  for (const Vec2& p : a) {
    double bd = std::numeric_limits<double>::max();
    for (const Vec2& q : b) bd = std::min(bd, (p - q).norm2());
    worst = std::max(worst, bd);
  }
  return std::sqrt(worst);
}

double directed_normal_angle(const Densified& a, const Densified& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.pts.size(); ++i) {
    const size_t j = closest_index(b.pts, a.pts[i]);
    const double c = std::clamp(a.nrm[i].dot(b.nrm[j]), -1.0, 1.0);
    worst = std::max(worst, std::acos(c));
  }
  return worst;
}

}  // namespace

double boundary_distance_c0(const ObstacleBoundary& a, const ObstacleBoundary& b,
                            double spacing) {
  const Densified da = densify_boundary(a, spacing);
  const Densified db = densify_boundary(b, spacing);
  return std::max(directed_hausdorff(da.pts, db.pts), directed_hausdorff(db.pts, da.pts));
}

double boundary_distance_c1(const ObstacleBoundary& a, const ObstacleBoundary& b,
                            double spacing) {
  const Densified da = densify_boundary(a, spacing);
  const Densified db = densify_boundary(b, spacing);
  return std::max(directed_normal_angle(da, db), directed_normal_angle(db, da));
}

}  // namespace frontlab
