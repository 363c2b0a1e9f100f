#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "heis/metric.hpp"
#include "oracles.hpp"

using namespace heis;

namespace {

GenSet xyz_genset() {
  return GenSet("xyz", {{"x", {1, 0, 0}}, {"y", {0, 1, 0}}, {"z", {0, 0, 1}}});
}

GenSet xy_y_genset() {
  return GenSet("xy_y", {{"xy", {1, 1, 0}}, {"y", {0, 1, 0}}});
}

}  // namespace

TEST_CASE("ball: small exact sizes for {x,y}") {
  GenSet A = standard_genset();
  LengthTable T0 = LengthTable::enumerate_ball(A, 0);
  CHECK(T0.size() == 1);
  CHECK(T0.length(identity()) == 0);

  LengthTable T1 = LengthTable::enumerate_ball(A, 1);
  CHECK(T1.size() == 5);  // e, x, x^-1, y, y^-1
  CHECK(T1.counts() == std::vector<int64_t>{1, 4});

  LengthTable T = LengthTable::enumerate_ball(A, 6);
  CHECK(T.length({0, 0, 1}) == 4);   // |z| = 4
  CHECK(T.length({2, 3, 0}) == 5);
  CHECK(!T.try_length({0, 0, 3}));   // |z^3| = 8 > 6
  CHECK_THROWS_AS(T.length({0, 0, 3}), OutOfRangeError);
}

TEST_CASE("ball: agrees with the exhaustive word oracle") {
  for (const GenSet& A : {standard_genset(), xyz_genset(), xy_y_genset()}) {
    const int64_t R = 5;
    LengthTable T = LengthTable::enumerate_ball(A, R);
    auto naive = oracle::naive_ball(A, R);
    CHECK(T.size() == naive.size());
    for (const auto& [triple, len] : naive) {
      auto [i, j, k] = triple;
      CHECK(T.length({i, j, k}) == len);
    }
  }
}

TEST_CASE("ball: metric axioms sampled inside the table") {
  GenSet A = standard_genset();
  LengthTable T = LengthTable::enumerate_ball(A, 8);

  std::vector<GroupElement> all;
  for (const auto& [g, e] : T.entries()) all.push_back(g);

  for (const GroupElement& g : all) {
    // inverse symmetry
    CHECK(T.length(inv(g)) == T.length(g));
    // Lipschitz in every letter
    for (SignedGen s : A.alphabet()) {
      auto n = T.try_length(mul(g, A.element_of(s)));
      if (n) CHECK(std::abs(*n - T.length(g)) <= 1);
    }
  }
}

TEST_CASE("geodesic recovery") {
  GenSet A = xy_y_genset();
  LengthTable T = LengthTable::enumerate_ball(A, 7);
  for (const auto& [g, e] : T.entries()) {
    Word w = T.geodesic(g);
    CHECK(static_cast<int64_t>(w.length()) == T.length(g));
    CHECK(eval_word(w, A) == g);
  }
}

TEST_CASE("polynomial growth of degree ~4") {
  GenSet A = standard_genset();
  LengthTable T = LengthTable::enumerate_ball(A, 16, {.keep_parents = false});
  std::vector<int64_t> cum(T.counts().size());
  int64_t total = 0;
  for (size_t n = 0; n < cum.size(); ++n) cum[n] = total += T.counts()[n];
  double slope = (std::log(static_cast<double>(cum[16])) -
                  std::log(static_cast<double>(cum[10]))) /
                 (std::log(16.0) - std::log(10.0));
  CHECK(slope >= 3.5);
  CHECK(slope <= 4.5);
}

TEST_CASE("i_a_profile") {
  GenSet A = standard_genset();
  LengthTable T = LengthTable::enumerate_ball(A, 8);
  auto prof = i_a_profile(T);
  CHECK(prof.at(0) == 0);
  CHECK(prof.count(2) == 0);  // no central element of length exactly 2
  CHECK(prof.at(4) == 1);     // z
  CHECK(prof.at(8) == 4);     // z^4 = [x^2, y^2]
  // monotone over the lengths present
  int64_t prev = -1;
  for (auto [n, kmax] : prof) {
    CHECK(kmax >= prev);
    prev = kmax;
  }
}

TEST_CASE("k_extremes") {
  GenSet A = standard_genset();
  LengthTable T = LengthTable::enumerate_ball(A, 8);
  CHECK(k_extremes(T, 0, 0, 4) == std::pair<int64_t, int64_t>{-1, 1});
  CHECK(k_extremes(T, 1, 1, 2) == std::pair<int64_t, int64_t>{-1, 0});
  CHECK(k_extremes(T, 0, 0, 8) == std::pair<int64_t, int64_t>{-4, 4});
  CHECK_THROWS_AS(k_extremes(T, 5, 5, 2), OutOfRangeError);
}

TEST_CASE("depth") {
  GenSet A = standard_genset();
  LengthTable T = LengthTable::enumerate_ball(A, 10);

  CHECK(depth(T, identity()).depth == 1);
  CHECK(depth(T, {1, 0, 0}).depth == 1);

  // every computed depth is witnessed: some element at that distance is
  // strictly longer, and everything strictly nearer is not
  std::mt19937_64 rng(11);
  std::vector<GroupElement> all;
  for (const auto& [g, e] : T.entries())
    if (T.length(g) <= 6) all.push_back(g);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(60);
  for (const GroupElement& g : all) {
    DepthRecord r = depth(T, g);
    CHECK(r.depth >= 1);
    // brute-force distance to a longer element over words of length <= depth
    int64_t lg = T.length(g);
    std::vector<GroupElement> frontier{g};
    bool found = false;
    for (int64_t d = 1; d <= r.depth && !found; ++d) {
      std::vector<GroupElement> next;
      for (const GroupElement& h : frontier)
        for (SignedGen s : A.alphabet()) {
          GroupElement n = mul(h, A.element_of(s));
          auto ln = T.try_length(n);
          if (!ln || *ln > lg) {
            found = true;
            CHECK(d == r.depth);
          } else {
            next.push_back(n);
          }
        }
      frontier = std::move(next);
    }
    CHECK(found);
  }

  // a genuine dead end (depth >= 2) exists at this scale
  int64_t max_depth = 0;
  for (const auto& [g, e] : T.entries())
    if (T.length(g) <= 8) max_depth = std::max(max_depth, depth(T, g).depth);
  CHECK(max_depth >= 2);
}

TEST_CASE("retreat_depth") {
  GenSet A = standard_genset();
  LengthTable T = LengthTable::enumerate_ball(A, 10);

  // a generator retreats immediately: it can walk outward forever
  RetreatRecord r = retreat_depth(T, {1, 0, 0}, 8);
  REQUIRE(r.retreat_depth.has_value());
  CHECK(*r.retreat_depth == 1);

  // retreat depth is certified and bounded by length + 1 everywhere sampled
  for (const auto& [g, e] : T.entries()) {
    if (T.length(g) > 6 || T.length(g) == 0) continue;
    RetreatRecord rec = retreat_depth(T, g, 8);
    REQUIRE(rec.retreat_depth.has_value());
    CHECK(*rec.retreat_depth >= 1);
    CHECK(*rec.retreat_depth <= T.length(g) + 1);
  }
}

TEST_CASE("memory cap") {
  GenSet A = standard_genset();
  BallOptions opt;
  opt.memory_cap_bytes = 1024;  // absurdly small
  CHECK_THROWS_AS(LengthTable::enumerate_ball(A, 16, opt), ResourceCapError);
}

TEST_CASE("t_prime_max") {
  GenSet A = xy_y_genset();
  LengthTable T = LengthTable::enumerate_ball(A, 4);
  // x = (xy) y^-1 has length 2, y has length 1
  CHECK(t_prime_max(T) == 2);
  CHECK(T.genset().cached_t_prime_max() == 2);
  CHECK(t_prime_max(LengthTable::enumerate_ball(standard_genset(), 2)) == 1);
}
