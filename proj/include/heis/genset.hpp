#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heis/group.hpp"
#include "heis/hull.hpp"
#include "heis/rational.hpp"

namespace heis {

struct Generator {
  std::string label;
  GroupElement element;
};

// A letter: a generator of A or its inverse.
struct SignedGen {
  int index = 0;  // position in GenSet::generators()
  int sign = 1;   // +1 or -1

  friend bool operator==(const SignedGen&, const SignedGen&) = default;
};

// Derived constants of a generating set. t_max is reported squared so it
// stays an exact integer. t_prime_max = max(|x|_A, |y|_A) needs a metric
// query and is cached separately (see GenSet::t_prime_max).
struct GenSetConstants {
  int64_t k_max = 0;      // max |k| over x^i y^j z^k in A
  int64_t m_prime = 0;    // max |cross(phi(a), phi(b))|, a,b in A u A^-1
  int64_t c_min = 0;      // min nonzero |cross(phi(a), phi(b))|
  int64_t t_max_sq = 0;   // max squared Euclidean norm of phi(a)
};

// Validated finite generating set for the Heisenberg group. Word lengths
// are always measured over the symmetrized alphabet A u A^-1.
class GenSet {
 public:
  // Validates: nonempty, unique labels, no identity generator, and the
  // abelianizations generate all of Z^2 (lattice index 1 via HNF). A pair
  // of elements whose abelianizations form a Z^2 basis has commutator
  // z^{+-1}, so phi(A) generating Z^2 implies A generates H.
  GenSet(std::string name, std::vector<Generator> generators);

  GenSet(const GenSet& other);
  GenSet& operator=(const GenSet& other);

  const std::string& name() const { return name_; }
  const std::vector<Generator>& generators() const { return gens_; }
  size_t size() const { return gens_.size(); }

  const Generator& generator(int index) const { return gens_.at(index); }

  GroupElement element_of(SignedGen s) const {
    const GroupElement& e = gens_.at(s.index).element;
    return s.sign > 0 ? e : inv(e);
  }

  Vec2 abelianization(int index) const {
    const GroupElement& e = gens_.at(index).element;
    return {e.i, e.j};
  }

  std::string letter_name(SignedGen s) const {
    return s.sign > 0 ? gens_.at(s.index).label : gens_.at(s.index).label + "^-1";
  }

  // A u A^-1, in generator order, each generator followed by its inverse.
  const std::vector<SignedGen>& alphabet() const { return alphabet_; }

  const HullPolygon& hull() const { return hull_; }

  GenSetConstants constants() const;

  // Write-once cache filled by the metric module (needs a ball table).
  void cache_t_prime_max(int64_t value) const;
  std::optional<int64_t> cached_t_prime_max() const;

 private:
  std::string name_;
  std::vector<Generator> gens_;
  std::vector<SignedGen> alphabet_;
  HullPolygon hull_;

  mutable std::atomic<int64_t> t_prime_max_{-1};  // -1 = not yet computed
};

// Parses the JSON config {"name": str, "generators":
// [{"label": str, "i": int, "j": int, "k": int}, ...]} and validates.
// Generator order is significant: it fixes word-letter indexing in reports.
GenSet parse_genset(const std::string& config_text);

// Standard generating set {x, y}.
GenSet standard_genset();

}  // namespace heis
