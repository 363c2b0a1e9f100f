#include "heis/hull.hpp"

#include <algorithm>

#include "heis/errors.hpp"

namespace heis {

namespace {

// Angular half: 0 for angle in [0,pi) from the positive x-axis, 1 otherwise.
int angular_half(Vec2 v) {
  if (v.y > 0 || (v.y == 0 && v.x > 0)) return 0;
  return 1;
}

// Strict CCW angle order starting at direction (1,0).
bool angle_less(Vec2 a, Vec2 b) {
  int ha = angular_half(a), hb = angular_half(b);
  if (ha != hb) return ha < hb;
  int64_t c = cross(a, b);
  if (c != 0) return c > 0;
  return norm_sq(a) < norm_sq(b);  // collinear: nearer first
}

}  // namespace

HullPolygon HullPolygon::of_symmetrized(const std::vector<Vec2>& points) {
  std::vector<Vec2> pts;
  pts.reserve(points.size() * 2);
  for (Vec2 p : points) {
    if (p.x == 0 && p.y == 0) continue;  // central generators vanish in H_ab
    pts.push_back(p);
    pts.push_back(-p);
  }
  if (pts.empty()) throw ConfigError("abelianized generating set is trivial");

  // Andrew monotone chain with strict turns (collinear points dropped).
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto build = [&](auto begin, auto end) {
    std::vector<Vec2> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             cross(chain.back() - chain[chain.size() - 2], *it - chain.back()) <= 0)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<Vec2> lower = build(pts.begin(), pts.end());
  std::vector<Vec2> upper = build(pts.rbegin(), pts.rend());

  HullPolygon hull;
  hull.verts_.assign(lower.begin(), lower.end() - 1);
  hull.verts_.insert(hull.verts_.end(), upper.begin(), upper.end() - 1);

  if (hull.verts_.size() < 3)
    throw ConfigError("abelianized generators are collinear; rank < 2");

  // Canonical start vertex.
  auto first = std::min_element(hull.verts_.begin(), hull.verts_.end(), angle_less);
  std::rotate(hull.verts_.begin(), first, hull.verts_.end());
  return hull;
}

Rational HullPolygon::norm(Vec2 v) const {
  if (v.x == 0 && v.y == 0) return 0;
  const size_t n = verts_.size();
  for (size_t a = 0; a < n; ++a) {
    Vec2 u = verts_[a];
    Vec2 w = verts_[(a + 1) % n];
    int64_t cu = cross(u, v);
    int64_t cw = cross(v, w);
    if (cu >= 0 && cw >= 0) {
      // v = alpha*u + beta*w with alpha,beta >= 0; the functional is alpha+beta.
      int64_t den = cross(u, w);
      return rational(checked_add(cw, cu), den);
    }
  }
  throw Error("hull cone scan failed (non-convex vertex list?)");
}

std::vector<Vec2> HullPolygon::half_directions() const {
  std::vector<Vec2> dirs;
  for (Vec2 v : verts_)
    if (angular_half(v) == 0) dirs.push_back(v);
  std::sort(dirs.begin(), dirs.end(), angle_less);
  return dirs;
}

}  // namespace heis
