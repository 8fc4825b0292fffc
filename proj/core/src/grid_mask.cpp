#include "frontlab/grid_mask.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace frontlab {

namespace {

// Scanline point-in-polygon for a whole grid row at once: collect the x
// crossings of the row line with every edge (half-open rule in y), sort, and
// mark the inside runs.
void classify_row(const ObstacleBoundary& b, double y, int nx,
                  const std::function<double(int)>& x_of, std::vector<bool>& inside) {
  std::vector<double> xs;
  for (const auto& loop : b.loops()) {
    const int n = loop.size();
    for (int e = 0; e < n; ++e) {
      const Vec2 pa = loop.edge_start(e), pb = loop.edge_end(e);
      if ((pa.y <= y) != (pb.y <= y)) {
        xs.push_back(pa.x + (y - pa.y) * (pb.x - pa.x) / (pb.y - pa.y));
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  std::fill(inside.begin(), inside.end(), false);
  if (xs.empty()) return;
  for (int i = 0; i < nx; ++i) {
    const double x = x_of(i);
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    inside[i] = ((xs.end() - it) % 2) == 1;  // odd number of crossings to the right
  }
}

}  // namespace

GridMask GridMask::rasterize(const ObstacleBoundary& b, double h, double r_outer,
                             double clearance) {
  if (!(h > 0.0) || !(r_outer > 0.0)) {
    throw std::invalid_argument("rasterize requires h > 0 and r_outer > 0");
  }
  if (!b.empty() && !(r_outer > b.max_vertex_radius() + clearance)) {
    std::ostringstream msg;
    msg << "truncation radius " << r_outer << " too small: need > "
        << b.max_vertex_radius() + clearance << " (obstacle extent plus clearance "
        << clearance << ")";
    throw std::invalid_argument(msg.str());
  }
  if (std::isfinite(b.min_passage())) {
    // A passage of width W holds floor(W/h)-1 strictly interior nodes.
    const int span = static_cast<int>(std::floor(b.min_passage() / h)) - 1;
    if (span < 6) {
      std::ostringstream msg;
      msg << "narrowest passage (width " << b.min_passage() << ") under-resolved at h=" << h
          << ": spans " << span << " active cells, need >= 6 (h <= " << b.min_passage() / 8.0
          << " required)";
      throw std::invalid_argument(msg.str());
    }
  }

  GridMask m;
  m.h_ = h;
  m.r_outer_ = r_outer;
  m.mid_ = static_cast<int>(std::ceil(r_outer / h)) + 1;
  m.nx_ = m.ny_ = 2 * m.mid_ + 1;
  m.cls_.assign(static_cast<size_t>(m.nx_) * m.ny_, CellClass::Dirichlet);
  m.has_dirichlet_ = true;
  m.source_tag_ = b.tag();

  const double r2 = r_outer * r_outer;
  std::vector<bool> inside(m.nx_, false);
  for (int j = 0; j < m.ny_; ++j) {
    const double y = m.y_of(j);
    if (!b.empty()) {
      classify_row(b, y, m.nx_, [&](int i) { return m.x_of(i); }, inside);
    }
    for (int i = 0; i < m.nx_; ++i) {
      const double x = m.x_of(i);
      if (!b.empty() && inside[i]) {
        m.cls_[m.node(i, j)] = CellClass::Obstacle;
      } else if (x * x + y * y < r2) {
        m.cls_[m.node(i, j)] = CellClass::Active;
      }
    }
  }

  m.build_dofs_and_stencils();
  m.check_connected();
  return m;
}

GridMask GridMask::island_box(double width, double height, double h) {
  return island_region(h, {0.0, 0.0}, {width, height}, [](Vec2) { return true; });
}

GridMask GridMask::island_region(double h, Vec2 lo, Vec2 hi,
                                 const std::function<bool(Vec2)>& region) {
  GridMask m;
  m.h_ = h;
  m.r_outer_ = 0.0;
  m.mid_ = 0;
  m.nx_ = static_cast<int>(std::round((hi.x - lo.x) / h)) + 1;
  m.ny_ = static_cast<int>(std::round((hi.y - lo.y) / h)) + 1;
  if (m.nx_ < 2 || m.ny_ < 2) throw std::invalid_argument("island region too small");
  m.cls_.assign(static_cast<size_t>(m.nx_) * m.ny_, CellClass::Obstacle);
  m.has_dirichlet_ = false;
  m.source_tag_ = "island";
  m.origin_ = lo;
  for (int j = 0; j < m.ny_; ++j) {
    for (int i = 0; i < m.nx_; ++i) {
      if (region({m.x_of(i), m.y_of(j)})) m.cls_[m.node(i, j)] = CellClass::Active;
    }
  }
  m.build_dofs_and_stencils();
  m.check_connected();
  return m;
}

void GridMask::build_dofs_and_stencils() {
  dof_.assign(cls_.size(), -1);
  dof_node_.clear();
  for (size_t n = 0; n < cls_.size(); ++n) {
    if (cls_[n] == CellClass::Active) {
      dof_[n] = static_cast<std::int32_t>(dof_node_.size());
      dof_node_.push_back(static_cast<std::int32_t>(n));
    }
  }

  // A cell (i,j) spans nodes (i..i+1, j..j+1); open iff no corner is an
  // obstacle node.  Cells off the grid are closed.
  auto cell_open = [&](int i, int j) -> bool {
    if (i < 0 || j < 0 || i + 1 >= nx_ || j + 1 >= ny_) return false;
    return cls_[node(i, j)] != CellClass::Obstacle &&
           cls_[node(i + 1, j)] != CellClass::Obstacle &&
           cls_[node(i, j + 1)] != CellClass::Obstacle &&
           cls_[node(i + 1, j + 1)] != CellClass::Obstacle;
  };

  stencils_.assign(dof_node_.size(), Stencil{});
  for (int dof = 0; dof < n_active(); ++dof) {
    const int n = dof_node_[dof];
    const int i = n % nx_;
    const int j = n / nx_;
    Stencil s{};
    const bool c_sw = cell_open(i - 1, j - 1);
    const bool c_se = cell_open(i, j - 1);
    const bool c_nw = cell_open(i - 1, j);
    const bool c_ne = cell_open(i, j);
    s.mass4 = static_cast<std::uint8_t>(c_sw + c_se + c_nw + c_ne);

    struct Dir {
      int di, dj;
      bool ca, cb;  // the two cells flanking the edge
    };
    const Dir dirs[4] = {{-1, 0, c_sw, c_nw},   // W
                         {+1, 0, c_se, c_ne},   // E
                         {0, -1, c_sw, c_se},   // S
                         {0, +1, c_nw, c_ne}};  // N
    for (int k = 0; k < 4; ++k) {
      const int ii = i + dirs[k].di;
      const int jj = j + dirs[k].dj;
      const int w2 = static_cast<int>(dirs[k].ca) + static_cast<int>(dirs[k].cb);
      s.weight2[k] = static_cast<std::uint8_t>(w2);
      if (w2 == 0 || ii < 0 || jj < 0 || ii >= nx_ || jj >= ny_) {
        s.nb[k] = -2;
        s.weight2[k] = 0;
        continue;
      }
      const CellClass c = cls_[node(ii, jj)];
      if (c == CellClass::Active) {
        s.nb[k] = dof_[node(ii, jj)];
      } else if (c == CellClass::Dirichlet) {
        s.nb[k] = -1;
      } else {
        s.nb[k] = -2;  // unreachable: an open edge never points at an obstacle node
        s.weight2[k] = 0;
      }
    }
    stencils_[dof] = s;
  }
}

void GridMask::check_connected() const {
  if (dof_node_.empty()) throw std::invalid_argument("mask has no active nodes");
  std::vector<bool> seen(dof_node_.size(), false);
  std::deque<int> queue;
  queue.push_back(0);
  seen[0] = true;
  size_t visited = 1;
  while (!queue.empty()) {
    const int d = queue.front();
    queue.pop_front();
    for (int k = 0; k < 4; ++k) {
      const int nb = stencils_[d].nb[k];
      if (nb >= 0 && !seen[nb]) {
        seen[nb] = true;
        ++visited;
        queue.push_back(nb);
      }
    }
  }
  if (visited != dof_node_.size()) {
    std::ostringstream msg;
    msg << "active region is not 4-connected: " << visited << " of " << dof_node_.size()
        << " nodes reachable";
    throw std::invalid_argument(msg.str());
  }
}

GridMask rasterize(const ObstacleBoundary& b, double h, double r_outer, double clearance) {
  return GridMask::rasterize(b, h, r_outer, clearance);
}

}  // namespace frontlab
