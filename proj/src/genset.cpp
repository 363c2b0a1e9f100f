#include "heis/genset.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "heis/errors.hpp"

namespace heis {

namespace {

// Lattice index [Z^2 : <vectors>] via Hermite normal form: column-reduce the
// 2xn exponent matrix with integer operations to an upper-triangular pair,
// index = |d1 * d2|. Returns 0 when the rank is < 2.
int64_t lattice_index(std::vector<Vec2> vecs) {
  Vec2 pivot{0, 0};
  std::vector<int64_t> ys;
  for (Vec2 v : vecs) {
    // Euclid on first coordinates, carrying second coordinates along.
    while (v.x != 0) {
      if (pivot.x == 0) {
        std::swap(pivot, v);
        continue;
      }
      int64_t q = v.x / pivot.x;
      v = v - Vec2{checked_mul(q, pivot.x), checked_mul(q, pivot.y)};
      if (v.x != 0) std::swap(pivot, v);
    }
    ys.push_back(v.y);
  }
  if (pivot.x == 0) return 0;
  int64_t e = 0;
  for (int64_t y : ys) e = std::gcd(e, y);
  if (e == 0) return 0;
  return checked_abs(checked_mul(pivot.x, e));
}

}  // namespace

GenSet::GenSet(std::string name, std::vector<Generator> generators)
    : name_(std::move(name)), gens_(std::move(generators)) {
  if (gens_.empty()) throw ConfigError("generating set is empty");

  std::set<std::string> labels;
  std::vector<Vec2> abelian;
  for (const Generator& g : gens_) {
    if (g.label.empty()) throw ConfigError("generator label is empty");
    if (!labels.insert(g.label).second)
      throw ConfigError("duplicate generator label: " + g.label);
    if (is_identity(g.element))
      throw ConfigError("generator '" + g.label + "' is the identity");
    abelian.push_back({g.element.i, g.element.j});
  }

  int64_t index = lattice_index(abelian);
  if (index != 1)
    throw ConfigError("abelianized generators do not generate Z^2 (lattice index " +
                      std::to_string(index) + "); the set does not generate H");

  for (int idx = 0; idx < static_cast<int>(gens_.size()); ++idx) {
    alphabet_.push_back({idx, +1});
    alphabet_.push_back({idx, -1});
  }

  hull_ = HullPolygon::of_symmetrized(abelian);
}

GenSetConstants GenSet::constants() const {
  GenSetConstants c;
  c.c_min = std::numeric_limits<int64_t>::max();
  for (const Generator& g : gens_) {
    c.k_max = std::max(c.k_max, checked_abs(g.element.k));
    Vec2 v{g.element.i, g.element.j};
    c.t_max_sq = std::max(c.t_max_sq, norm_sq(v));
  }
  for (size_t a = 0; a < gens_.size(); ++a) {
    for (size_t b = a + 1; b < gens_.size(); ++b) {
      // |cross| is invariant under inverting either argument, so pairs from
      // A suffice for the max and the nonzero min over A u A^-1.
      int64_t cr = checked_abs(cross(abelianization(a), abelianization(b)));
      c.m_prime = std::max(c.m_prime, cr);
      if (cr != 0) c.c_min = std::min(c.c_min, cr);
    }
  }
  if (c.c_min == std::numeric_limits<int64_t>::max())
    throw Error("all generator pairs commute; validation should have rejected this set");
  return c;
}

GenSet::GenSet(const GenSet& other)
    : name_(other.name_),
      gens_(other.gens_),
      alphabet_(other.alphabet_),
      hull_(other.hull_),
      t_prime_max_(other.t_prime_max_.load()) {}

GenSet& GenSet::operator=(const GenSet& other) {
  if (this != &other) {
    name_ = other.name_;
    gens_ = other.gens_;
    alphabet_ = other.alphabet_;
    hull_ = other.hull_;
    t_prime_max_.store(other.t_prime_max_.load());
  }
  return *this;
}

void GenSet::cache_t_prime_max(int64_t value) const {
  int64_t expected = -1;  // write-once: later writers lose, which is fine
  t_prime_max_.compare_exchange_strong(expected, value);
}

std::optional<int64_t> GenSet::cached_t_prime_max() const {
  int64_t v = t_prime_max_.load();
  if (v < 0) return std::nullopt;
  return v;
}

GenSet parse_genset(const std::string& config_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(config_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed genset config: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("name") || !doc.contains("generators"))
    throw ConfigError("genset config must be an object with 'name' and 'generators'");
  if (!doc["name"].is_string() || !doc["generators"].is_array())
    throw ConfigError("genset config: 'name' must be a string, 'generators' an array");

  std::vector<Generator> gens;
  for (const auto& g : doc["generators"]) {
    if (!g.is_object() || !g.contains("label") || !g.contains("i") ||
        !g.contains("j") || !g.contains("k"))
      throw ConfigError("each generator needs 'label', 'i', 'j', 'k'");
    if (!g["label"].is_string() || !g["i"].is_number_integer() ||
        !g["j"].is_number_integer() || !g["k"].is_number_integer())
      throw ConfigError("generator fields have wrong types");
    gens.push_back({g["label"].get<std::string>(),
                    {g["i"].get<int64_t>(), g["j"].get<int64_t>(), g["k"].get<int64_t>()}});
  }
  return GenSet(doc["name"].get<std::string>(), std::move(gens));
}

GenSet standard_genset() {
  return GenSet("std", {{"x", {1, 0, 0}}, {"y", {0, 1, 0}}});
}

}  // namespace heis
