#include "heis/metric.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "heis/errors.hpp"

namespace heis {

namespace {

// Hash-map node plus bucket overhead, parent links included.
constexpr uint64_t kBytesPerEntry = 80;

}  // namespace

LengthTable LengthTable::enumerate_ball(const GenSet& A, int64_t radius,
                                        const BallOptions& options) {
  if (radius < 0) throw Error("radius must be nonnegative");

  LengthTable T(A, radius, options.keep_parents);
  T.counts_.assign(radius + 1, 0);
  T.entries_.reserve(1024);

  std::vector<GroupElement> frontier{identity()};
  T.entries_[identity()] = {0, -1};
  T.counts_[0] = 1;

  const auto& alphabet = A.alphabet();
  std::vector<GroupElement> letter_elems;
  for (SignedGen s : alphabet) letter_elems.push_back(A.element_of(s));

  const int64_t fit_level = radius / 2;
  for (int64_t level = 1; level <= radius; ++level) {
    std::vector<GroupElement> next;
    for (const GroupElement& g : frontier) {
      for (size_t a = 0; a < letter_elems.size(); ++a) {
        GroupElement h = mul(g, letter_elems[a]);
        auto [it, inserted] = T.entries_.try_emplace(
            h, Entry{static_cast<int32_t>(level),
                     options.keep_parents ? static_cast<int16_t>(a)
                                          : static_cast<int16_t>(-1)});
        if (inserted) next.push_back(h);
      }
    }
    T.counts_[level] = static_cast<int64_t>(next.size());
    frontier = std::move(next);

    // Degree-4 growth model fitted at half radius.
    if (level == fit_level && fit_level >= 4) {
      double c = static_cast<double>(T.entries_.size()) /
                 (static_cast<double>(fit_level) * fit_level * fit_level * fit_level);
      double projected = c * static_cast<double>(radius) * radius * radius * radius *
                         static_cast<double>(kBytesPerEntry);
      if (projected > static_cast<double>(options.memory_cap_bytes))
        throw ResourceCapError(
            "projected ball size " + std::to_string(static_cast<uint64_t>(projected)) +
            " bytes exceeds memory cap " + std::to_string(options.memory_cap_bytes));
    }
  }
  return T;
}

int64_t LengthTable::length(const GroupElement& g) const {
  auto it = entries_.find(g);
  if (it == entries_.end())
    throw OutOfRangeError("element " + heis::to_string(g) + " outside ball of radius " +
                          std::to_string(radius_) + " (its length exceeds the radius)");
  return it->second.length;
}

std::optional<int64_t> LengthTable::try_length(const GroupElement& g) const {
  auto it = entries_.find(g);
  if (it == entries_.end()) return std::nullopt;
  return it->second.length;
}

Word LengthTable::geodesic(const GroupElement& g) const {
  if (!keep_parents_) throw Error("table built without parent links");
  Word w;
  GroupElement cur = g;
  while (true) {
    auto it = entries_.find(cur);
    if (it == entries_.end())
      throw OutOfRangeError("element outside ball of radius " + std::to_string(radius_));
    if (it->second.parent_letter < 0) break;
    SignedGen letter = genset_.alphabet()[it->second.parent_letter];
    w.letters.push_back(letter);
    cur = mul(cur, inv(genset_.element_of(letter)));
  }
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

std::map<int64_t, int64_t> i_a_profile(const LengthTable& T) {
  std::map<int64_t, int64_t> profile;
  for (const auto& [g, e] : T.entries()) {
    if (g.i != 0 || g.j != 0) continue;
    int64_t a = checked_abs(g.k);
    auto [it, inserted] = profile.try_emplace(e.length, a);
    if (!inserted) it->second = std::max(it->second, a);
  }
  return profile;
}

std::pair<int64_t, int64_t> k_extremes(const LengthTable& T, int64_t i, int64_t j,
                                       int64_t n_prime) {
  bool found = false;
  int64_t kmin = 0, kmax = 0;
  for (const auto& [g, e] : T.entries()) {
    if (g.i != i || g.j != j || e.length > n_prime) continue;
    if (!found) {
      kmin = kmax = g.k;
      found = true;
    } else {
      kmin = std::min(kmin, g.k);
      kmax = std::max(kmax, g.k);
    }
  }
  if (!found)
    throw OutOfRangeError("no element with abelianization (" + std::to_string(i) + "," +
                          std::to_string(j) + ") within length " +
                          std::to_string(n_prime));
  return {kmin, kmax};
}

DepthRecord depth(const LengthTable& T, const GroupElement& g) {
  const int64_t l = T.length(g);
  std::vector<GroupElement> letter_elems;
  for (SignedGen s : T.genset().alphabet())
    letter_elems.push_back(T.genset().element_of(s));

  std::unordered_set<GroupElement, GroupElementHash> seen{g};
  std::vector<GroupElement> frontier{g};
  for (int64_t d = 1;; ++d) {
    std::vector<GroupElement> next;
    for (const GroupElement& cur : frontier) {
      for (const GroupElement& a : letter_elems) {
        GroupElement h = mul(cur, a);
        if (!seen.insert(h).second) continue;
        auto len = T.try_length(h);
        // Absent from the table means |h| > R >= |g|: strictly longer.
        if (!len || *len > l) return {g, l, d};
        next.push_back(h);
      }
    }
    if (next.empty())
      throw Error("depth search exhausted a finite component (impossible in H)");
    frontier = std::move(next);
  }
}

RetreatRecord retreat_depth(const LengthTable& T, const GroupElement& g,
                            int64_t escape_radius) {
  const int64_t l = T.length(g);
  if (!(l < escape_radius && escape_radius <= T.radius()))
    throw Error("retreat_depth requires |g| < escape_radius <= table radius");

  std::vector<GroupElement> letter_elems;
  for (SignedGen s : T.genset().alphabet())
    letter_elems.push_back(T.genset().element_of(s));

  for (int64_t d = 1; d <= l + 1; ++d) {
    const int64_t threshold = l - d;  // traverse only elements longer than this
    std::unordered_set<GroupElement, GroupElementHash> seen{g};
    std::vector<GroupElement> frontier{g};
    bool reached = false;
    while (!frontier.empty() && !reached) {
      std::vector<GroupElement> next;
      for (const GroupElement& cur : frontier) {
        for (const GroupElement& a : letter_elems) {
          GroupElement h = mul(cur, a);
          if (!seen.insert(h).second) continue;
          auto len = T.try_length(h);
          if (!len || *len >= escape_radius) {
            // Outside the table is beyond the escape sphere already.
            reached = true;
            break;
          }
          if (*len > threshold) next.push_back(h);
        }
        if (reached) break;
      }
      frontier = std::move(next);
    }
    if (reached) return {g, l, d, escape_radius};
  }
  // d = l+1 admits every element, and the ball is connected to its spheres;
  // not reaching the escape sphere means something is deeply wrong.
  return {g, l, std::nullopt, escape_radius};
}

int64_t t_prime_max(const LengthTable& T) {
  if (auto cached = T.genset().cached_t_prime_max()) return *cached;
  int64_t lx = T.length({1, 0, 0});
  int64_t ly = T.length({0, 1, 0});
  int64_t v = std::max(lx, ly);
  T.genset().cache_t_prime_max(v);
  return v;
}

}  // namespace heis
