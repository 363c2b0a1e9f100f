#include <doctest.h>

#include <algorithm>
#include <random>

#include "heis/genset.hpp"
#include "heis/hull.hpp"

using namespace heis;

namespace {

// Hull correctness by definition: vertices are input points in strict CCW
// convex position and every symmetrized input point lies weakly inside.
void check_is_hull(const HullPolygon& hull, const std::vector<Vec2>& points) {
  const auto& v = hull.vertices();
  const size_t n = v.size();
  REQUIRE(n >= 4);  // centrally symmetric, not a segment

  std::vector<Vec2> all;
  for (Vec2 p : points) {
    if (p == Vec2{0, 0}) continue;
    all.push_back(p);
    all.push_back(-p);
  }
  for (Vec2 u : v) {
    CHECK(std::count(all.begin(), all.end(), u) > 0);
    CHECK(std::count(v.begin(), v.end(), -u) == 1);  // central symmetry
  }
  for (size_t a = 0; a < n; ++a) {
    Vec2 e = v[(a + 1) % n] - v[a];
    CHECK(cross(e, v[(a + 2) % n] - v[(a + 1) % n]) > 0);  // strict convex turn
    for (Vec2 p : all) CHECK(cross(e, p - v[a]) >= 0);     // inside half-plane
    CHECK(cross(e, Vec2{0, 0} - v[a]) > 0);                // origin interior
  }
}

GenSet from(std::vector<Generator> gens) { return GenSet("test", std::move(gens)); }

}  // namespace

TEST_CASE("parse_validate") {
  GenSet ok = parse_genset(R"({"name":"std","generators":[
    {"label":"x","i":1,"j":0,"k":0},{"label":"y","i":0,"j":1,"k":0}]})");
  CHECK(ok.size() == 2);
  CHECK(ok.generator(0).label == "x");
  CHECK(ok.alphabet().size() == 4);

  // lattice index 2: x^2, y does not generate
  CHECK_THROWS_AS(from({{"x2", {2, 0, 0}}, {"y", {0, 1, 0}}}), ConfigError);
  // index 1 with a non-basis-looking pair
  CHECK_NOTHROW(from({{"xy", {1, 1, 0}}, {"y", {0, 1, 0}}}));
  // rank 1
  CHECK_THROWS_AS(from({{"x", {1, 0, 0}}, {"x3", {3, 0, 0}}}), ConfigError);
  // identity generator
  CHECK_THROWS_AS(from({{"e", {0, 0, 0}}, {"y", {0, 1, 0}}}), ConfigError);
  // duplicate label
  CHECK_THROWS_AS(from({{"x", {1, 0, 0}}, {"x", {0, 1, 0}}}), ConfigError);
  // malformed json
  CHECK_THROWS_AS(parse_genset("{"), ConfigError);
  CHECK_THROWS_AS(parse_genset(R"({"name":"a","generators":[{"label":"x"}]})"),
                  ConfigError);
}

TEST_CASE("hull: spec shapes") {
  GenSet std_gens = standard_genset();
  CHECK(std_gens.hull().vertices() ==
        std::vector<Vec2>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}});

  GenSet hexa = from({{"x", {1, 0, 0}}, {"y", {0, 1, 0}}, {"xy", {1, 1, 0}}});
  CHECK(hexa.hull().vertices() ==
        std::vector<Vec2>{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
  check_is_hull(hexa.hull(), {{1, 0}, {0, 1}, {1, 1}});

  GenSet hexb = from({{"x", {1, 0, 0}}, {"y", {0, 1, 0}}, {"xiy", {-1, 1, 0}}});
  check_is_hull(hexb.hull(), {{1, 0}, {0, 1}, {-1, 1}});
  CHECK(hexb.hull().size() == 6);

  // central generators do not contribute to the hull
  GenSet with_z = from({{"x", {1, 0, 0}}, {"y", {0, 1, 0}}, {"z", {0, 0, 1}}});
  CHECK(with_z.hull().vertices() == std_gens.hull().vertices());

  // random sets: hull is correct by definition
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int64_t> d(-6, 6);
  int built = 0;
  while (built < 50) {
    std::vector<Generator> gens{{"a", {1, 0, 0}}, {"b", {0, 1, 0}}};
    std::vector<Vec2> pts{{1, 0}, {0, 1}};
    for (int t = 0; t < 4; ++t) {
      Vec2 p{d(rng), d(rng)};
      if (p == Vec2{0, 0}) continue;
      gens.push_back({"g" + std::to_string(t), {p.x, p.y, 0}});
      pts.push_back(p);
    }
    GenSet A = from(std::move(gens));
    check_is_hull(A.hull(), pts);
    ++built;
  }
}

TEST_CASE("norm_B") {
  GenSet std_gens = standard_genset();
  const HullPolygon& diamond = std_gens.hull();
  CHECK(diamond.norm({1, 1}) == 2);  // L1 on the diamond
  CHECK(diamond.norm({0, 0}) == 0);
  CHECK(diamond.norm({3, -4}) == 7);

  GenSet hexa = from({{"x", {1, 0, 0}}, {"y", {0, 1, 0}}, {"xy", {1, 1, 0}}});
  CHECK(hexa.hull().norm({2, 1}) == 2);  // (1,1) + (1,0)
  CHECK(hexa.hull().norm({1, 1}) == 1);

  for (const HullPolygon* hull : {&diamond, &hexa.hull()}) {
    for (Vec2 v : hull->vertices()) CHECK(hull->norm(v) == 1);
  }

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int64_t> d(-50, 50);
  for (int t = 0; t < 500; ++t) {
    Vec2 v{d(rng), d(rng)};
    Vec2 w{d(rng), d(rng)};
    const HullPolygon& B = hexa.hull();
    CHECK(B.norm(v) == B.norm(-v));
    CHECK(B.norm(v + w) <= B.norm(v) + B.norm(w));
    int64_t n = 1 + (t % 20);
    CHECK(B.norm({n * v.x, n * v.y}) == n * B.norm(v));
  }

  // every generator lies in B, boundary iff norm exactly 1
  GenSet mix = from({{"a", {2, 1, 3}}, {"b", {1, 1, 0}}, {"c", {0, 1, -1}}});
  for (size_t g = 0; g < mix.size(); ++g)
    CHECK(mix.hull().norm(mix.abelianization(g)) <= 1);
}

TEST_CASE("constants") {
  GenSetConstants c = standard_genset().constants();
  CHECK(c.k_max == 0);
  CHECK(c.m_prime == 1);
  CHECK(c.c_min == 1);
  CHECK(c.t_max_sq == 1);

  GenSet with_z = from({{"x", {1, 0, 0}}, {"y", {0, 1, 0}}, {"z", {0, 0, 1}}});
  GenSetConstants cz = with_z.constants();
  CHECK(cz.k_max == 1);
  CHECK(cz.m_prime == 1);
  CHECK(cz.c_min == 1);

  GenSet skew = from({{"xyz3", {1, 1, 3}}, {"y", {0, 1, 0}}});
  GenSetConstants cs = skew.constants();
  CHECK(cs.k_max == 3);
  CHECK(cs.m_prime == 1);
  CHECK(cs.c_min == 1);
  CHECK(cs.t_max_sq == 2);  // |phi(xyz3)| = sqrt(2)

  // write-once t'_max cache
  GenSet A = standard_genset();
  CHECK(!A.cached_t_prime_max());
  A.cache_t_prime_max(1);
  A.cache_t_prime_max(99);
  CHECK(A.cached_t_prime_max() == 1);
}
