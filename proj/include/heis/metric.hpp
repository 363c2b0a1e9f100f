#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "heis/genset.hpp"
#include "heis/group.hpp"
#include "heis/word.hpp"

namespace heis {

struct BallOptions {
  uint64_t memory_cap_bytes = uint64_t{2} << 30;  // 2 GiB
  bool keep_parents = true;  // roughly doubles memory; off for pure counting
};

struct DepthRecord {
  GroupElement element;
  int64_t length = 0;
  int64_t depth = 0;  // distance to the nearest strictly longer element
};

struct RetreatRecord {
  GroupElement element;
  int64_t length = 0;
  // Minimal d such that the element reaches the escape sphere through
  // elements longer than length-d. nullopt = UNKNOWN (never a guess).
  std::optional<int64_t> retreat_depth;
  int64_t escape_radius = 0;
};

// Exhaustive word-length table for the ball of radius R around the identity,
// built by single-source BFS over A u A^-1. Immutable once built; absence of
// an element always means its length exceeds the radius.
class LengthTable {
 public:
  struct Entry {
    int32_t length = 0;
    int16_t parent_letter = -1;  // index into GenSet::alphabet(), -1 at the root
  };
  using Map = std::unordered_map<GroupElement, Entry, GroupElementHash>;

  static LengthTable enumerate_ball(const GenSet& A, int64_t radius,
                                    const BallOptions& options = {});

  const GenSet& genset() const { return genset_; }
  int64_t radius() const { return radius_; }
  size_t size() const { return entries_.size(); }
  bool has_parents() const { return keep_parents_; }

  bool contains(const GroupElement& g) const { return entries_.count(g) > 0; }

  // Exact |g|_A. Throws OutOfRangeError when g is outside the ball.
  int64_t length(const GroupElement& g) const;
  std::optional<int64_t> try_length(const GroupElement& g) const;

  // A geodesic word for g, recovered from parent links.
  Word geodesic(const GroupElement& g) const;

  // counts[n] = #{g : |g|_A = n}.
  const std::vector<int64_t>& counts() const { return counts_; }

  const Map& entries() const { return entries_; }

 private:
  LengthTable(GenSet A, int64_t radius, bool keep_parents)
      : genset_(std::move(A)), radius_(radius), keep_parents_(keep_parents) {}

  GenSet genset_;
  int64_t radius_;
  bool keep_parents_;
  Map entries_;
  std::vector<int64_t> counts_;
};

// I_A: map n -> max |k| over central elements z^k of length exactly n.
// Lengths with no central element are omitted.
std::map<int64_t, int64_t> i_a_profile(const LengthTable& T);

// Exact k range over {k : |x^i y^j z^k|_A <= n_prime}.
// Throws OutOfRangeError when the coset has no element within n_prime.
std::pair<int64_t, int64_t> k_extremes(const LengthTable& T, int64_t i, int64_t j,
                                       int64_t n_prime);

// Distance from g to the nearest strictly longer element. Neighbors outside
// the table are certified longer (their length exceeds the radius), so the
// answer is exact for every stored g. depth(identity) = 1; dead end <=> >= 2.
DepthRecord depth(const LengthTable& T, const GroupElement& g);

// Minimal d >= 1 such that g reaches the sphere of radius escape_radius
// through elements of length > |g| - d. Requires |g| < escape_radius <= R.
// Reaching the escape sphere is the finite surrogate for "unbounded
// component of the complement of B_{|g|-d}(1)".
RetreatRecord retreat_depth(const LengthTable& T, const GroupElement& g,
                            int64_t escape_radius);

// max(|x|_A, |y|_A); fills the write-once cache on T's generating set.
int64_t t_prime_max(const LengthTable& T);

}  // namespace heis
