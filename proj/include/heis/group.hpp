#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "heis/checked.hpp"

namespace heis {

// Element of the discrete Heisenberg group in normal form x^i y^j z^k,
// z = [x,y] = x^-1 y^-1 x y. The normal form is unique, so equality is
// componentwise. Collection rule: y^j x^i = x^i y^j z^(-ij).
struct GroupElement {
  int64_t i = 0;
  int64_t j = 0;
  int64_t k = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline GroupElement identity() { return {}; }

inline bool is_identity(const GroupElement& g) {
  return g.i == 0 && g.j == 0 && g.k == 0;
}

inline GroupElement mul(const GroupElement& g, const GroupElement& h) {
  return {checked_add(g.i, h.i), checked_add(g.j, h.j),
          checked_sub(checked_add(g.k, h.k), checked_mul(g.j, h.i))};
}

inline GroupElement inv(const GroupElement& g) {
  return {checked_neg(g.i), checked_neg(g.j),
          checked_sub(checked_neg(g.k), checked_mul(g.i, g.j))};
}

// [g,h] = g^-1 h^-1 g h, always central: z^(i_g j_h - j_g i_h).
inline GroupElement commutator(const GroupElement& g, const GroupElement& h) {
  return {0, 0, checked_cross(g.i, h.j, g.j, h.i)};
}

inline GroupElement pow(GroupElement g, int64_t n) {
  if (n < 0) {
    g = inv(g);
    n = checked_neg(n);
  }
  GroupElement acc = identity();
  while (n > 0) {
    if (n & 1) acc = mul(acc, g);
    g = mul(g, g);
    n >>= 1;
  }
  return acc;
}

inline std::string to_string(const GroupElement& g) {
  return "(" + std::to_string(g.i) + "," + std::to_string(g.j) + "," +
         std::to_string(g.k) + ")";
}

struct GroupElementHash {
  size_t operator()(const GroupElement& g) const {
    size_t h = std::hash<int64_t>{}(g.i);
    h ^= std::hash<int64_t>{}(g.j) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<int64_t>{}(g.k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace heis
