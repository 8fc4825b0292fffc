#include "frontlab/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frontlab {

double Field2D::min_value() const { return *std::min_element(v.begin(), v.end()); }

double Field2D::max_value() const { return *std::max_element(v.begin(), v.end()); }

Vec2 Field2D::argmin() const {
  const auto it = std::min_element(v.begin(), v.end());
  return mask->dof_xy(static_cast<int>(it - v.begin()));
}

double sup_distance(const Field2D& a, const Field2D& b) {
  if (a.mask != b.mask || a.v.size() != b.v.size()) {
    throw std::invalid_argument("sup_distance: fields live on different masks");
  }
  double worst = 0.0;
  for (size_t i = 0; i < a.v.size(); ++i) worst = std::max(worst, std::abs(a.v[i] - b.v[i]));
  return worst;
}

}  // namespace frontlab
