#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heis/genset.hpp"
#include "heis/hull.hpp"
#include "heis/metric.hpp"
#include "heis/rational.hpp"
#include "heis/word.hpp"

namespace heis {

// Optimal zonotope weights over the hull directions: maximizes the area
// Q(b) = sum_{i<j} b_i b_j |cross(v_i,v_j)| over the simplex sum b = 1,
// b >= 0. Perimeter-2 normalization: area(perimeter P) = m_a * P^2, so
// m_a = Q(b*) / 4.
struct IsoperimetrixSolution {
  std::vector<Vec2> directions;   // hull half-directions, CCW in [0,pi)
  std::vector<Rational> weights;  // optimal, aligned with directions
  Rational area;                  // Q(b*) = zonotope area at perimeter 2
  Rational m_a;                   // isoperimetric constant, area / 4
};

// Exact support-enumeration solver: for every support subset the KKT
// system (equal partial derivatives on the support, weights summing to 1)
// is solved in rational arithmetic and the best feasible solution wins.
IsoperimetrixSolution isoperimetrix(const HullPolygon& B);

Rational zonotope_area(const std::vector<Vec2>& directions,
                       const std::vector<Rational>& weights);

// Greedy integer apportionment of real proportions: row n increments the
// coordinate j maximizing n*b_j - b_{(n-1)j}, ties to the lowest index.
struct Apportionment {
  std::vector<Rational> weights;
  std::vector<std::vector<int64_t>> rows;  // rows[n], n = 0..N
};

Apportionment apportion(const std::vector<Rational>& b, int64_t N);

// The length-2n word a_1^{b_n1} ... a_m^{b_nm} a_1^{-b_n1} ... a_m^{-b_nm}
// over the generators assigned to the hull directions; always central.
struct FattestWord {
  Word word;
  int64_t k = 0;
};

// One letter per hull half-direction v_i, with phi(letter) = v_i.
// Several generators may sit on the same ray; prefer minimal |k|, then
// config order, a positive letter before the inverse of another generator.
std::vector<SignedGen> fattest_letters(const GenSet& A);

FattestWord fattest_word(const GenSet& A, int64_t n);

// Interpolation block from w_{n-1} to w_n: stage 0 inserts the new letter
// pair separated by one letter, each later stage transposes the inserted
// inverse letter with an adjacent letter. Every stage is central-valued and
// consecutive exponents differ by at most M'_A. Stage count <= 2n.
struct InterpolationStage {
  Word word;
  int64_t k = 0;
  std::string move;
};

std::vector<InterpolationStage> interpolate(const GenSet& A, int64_t n);

// Exponent-spread pair: two words of length <= len(w) + d with the same
// abelianization as w and exponents as far apart as either construction
// reaches: (a) conjugation by powers of the best-sweeping generator,
// (b) appending the commutator of powers of geodesic words for x and y.
struct SpreadResult {
  Word plus;
  Word minus;
  int64_t gap = 0;
  std::string construction;  // "identity", "conjugation" or "commutator"
};

SpreadResult spread_words(const GenSet& A, const LengthTable& T, const Word& w,
                          int64_t d);

// Brute force over all orderings of a letter multiset (size <= 9):
// extreme central exponents and the exact mean over all n! orderings.
struct ReorderExtremes {
  int64_t k_min = 0;
  int64_t k_max = 0;
  Rational mean;
  int64_t i = 0;  // shared abelianization of every ordering
  int64_t j = 0;
};

ReorderExtremes reorder_extremes(const GenSet& A, std::vector<SignedGen> letters);

}  // namespace heis
