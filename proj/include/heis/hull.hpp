#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heis/checked.hpp"
#include "heis/rational.hpp"

namespace heis {

// Integer lattice vector in the abelianization H_ab = Z^2.
struct Vec2 {
  int64_t x = 0;
  int64_t y = 0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) {
  return {checked_add(a.x, b.x), checked_add(a.y, b.y)};
}
inline Vec2 operator-(Vec2 a, Vec2 b) {
  return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)};
}
inline Vec2 operator-(Vec2 a) { return {checked_neg(a.x), checked_neg(a.y)}; }

inline int64_t cross(Vec2 a, Vec2 b) { return checked_cross(a.x, b.y, a.y, b.x); }
inline int64_t dot(Vec2 a, Vec2 b) {
  return checked_add(checked_mul(a.x, b.x), checked_mul(a.y, b.y));
}
inline int64_t norm_sq(Vec2 a) { return dot(a, a); }

inline std::string to_string(Vec2 v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

// Convex hull B = conv(+-phi(A)): CCW vertex list, centrally symmetric,
// no three retained vertices collinear, origin strictly interior.
// The vertex list starts at the vertex of smallest angle in [0, 2pi)
// from the positive x-axis, so equal hulls compare equal.
class HullPolygon {
 public:
  // Builds the hull of points ∪ -points. Throws ConfigError if the points
  // span less than the full plane (origin would not be interior).
  static HullPolygon of_symmetrized(const std::vector<Vec2>& points);

  const std::vector<Vec2>& vertices() const { return verts_; }
  size_t size() const { return verts_.size(); }

  // Minkowski functional: min{ lambda >= 0 : v in lambda*B }, exact.
  Rational norm(Vec2 v) const;

  bool contains(Vec2 v) const { return norm(v) <= 1; }

  // One vertex per antipodal pair, angles in [0, pi), CCW order.
  std::vector<Vec2> half_directions() const;

 private:
  std::vector<Vec2> verts_;
};

}  // namespace heis
