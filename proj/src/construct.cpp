#include "heis/construct.hpp"

#include <algorithm>
#include <cassert>
#include <tuple>

#include "heis/errors.hpp"

namespace heis {

namespace {

// Solves M x = rhs over the rationals by Gaussian elimination.
// Returns false when M is singular.
bool solve_linear(std::vector<std::vector<Rational>> M, std::vector<Rational> rhs,
                  std::vector<Rational>& out) {
  const size_t n = M.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(M[piv], M[col]);
    std::swap(rhs[piv], rhs[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col] == 0) continue;
      Rational f = M[r][col] / M[col][col];
      for (size_t c = col; c < n; ++c) M[r][c] -= f * M[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  out.resize(n);
  for (size_t r = 0; r < n; ++r) out[r] = rhs[r] / M[r][r];
  return true;
}

bool signed_gen_less(SignedGen a, SignedGen b) {
  return std::tie(a.index, a.sign) < std::tie(b.index, b.sign);
}

Word repeat_letter(SignedGen s, int64_t times) {
  Word w;
  w.letters.assign(static_cast<size_t>(times), s);
  return w;
}

Word repeat_word(const Word& w, int64_t times) {
  Word r;
  for (int64_t t = 0; t < times; ++t)
    r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
  return r;
}

}  // namespace

Rational zonotope_area(const std::vector<Vec2>& directions,
                       const std::vector<Rational>& weights) {
  Rational q = 0;
  for (size_t i = 0; i < directions.size(); ++i)
    for (size_t j = i + 1; j < directions.size(); ++j)
      q += weights[i] * weights[j] *
           rational(checked_abs(cross(directions[i], directions[j])));
  return q;
}

IsoperimetrixSolution isoperimetrix(const HullPolygon& B) {
  IsoperimetrixSolution best;
  best.directions = B.half_directions();
  const size_t m = best.directions.size();
  best.weights.assign(m, Rational(0));
  best.area = -1;

  std::vector<std::vector<int64_t>> C(m, std::vector<int64_t>(m, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      C[i][j] = checked_abs(cross(best.directions[i], best.directions[j]));

  // Stationary weights on a support S satisfy sum_{j in S} C_ij b_j = mu for
  // every i in S and sum b = 1. If the bordered system is singular, Q is
  // constant on its whole solution set, and a maximizer with a support whose
  // system is nonsingular also exists, so skipping singular supports is safe.
  for (uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<size_t> support;
    for (size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) support.push_back(i);
    if (support.size() < 2) continue;

    const size_t s = support.size();
    std::vector<std::vector<Rational>> M(s + 1, std::vector<Rational>(s + 1, Rational(0)));
    std::vector<Rational> rhs(s + 1, Rational(0));
    for (size_t r = 0; r < s; ++r) {
      for (size_t c = 0; c < s; ++c) M[r][c] = rational(C[support[r]][support[c]]);
      M[r][s] = -1;
      M[s][r] = 1;
    }
    rhs[s] = 1;

    std::vector<Rational> sol;
    if (!solve_linear(std::move(M), std::move(rhs), sol)) continue;
    bool feasible = true;
    for (size_t r = 0; r < s; ++r)
      if (sol[r] < 0) feasible = false;
    if (!feasible) continue;

    std::vector<Rational> weights(m, Rational(0));
    for (size_t r = 0; r < s; ++r) weights[support[r]] = sol[r];
    Rational q = zonotope_area(best.directions, weights);
    if (q > best.area) {
      best.area = q;
      best.weights = std::move(weights);
    }
  }

  if (best.area < 0) throw Error("no feasible zonotope weights found");
  best.m_a = best.area / 4;
  return best;
}

Apportionment apportion(const std::vector<Rational>& b, int64_t N) {
  for (const Rational& w : b)
    if (w < 0) throw Error("apportionment weights must be nonnegative");
  Rational total = 0;
  for (const Rational& w : b) total += w;
  if (total != 1) throw Error("apportionment weights must sum to 1");

  const size_t m = b.size();
  Apportionment ap;
  ap.weights = b;
  ap.rows.push_back(std::vector<int64_t>(m, 0));
  for (int64_t n = 1; n <= N; ++n) {
    std::vector<int64_t> row = ap.rows.back();
    size_t best_j = 0;
    Rational best_gap;
    for (size_t i = 0; i < m; ++i) {
      Rational gap = rational(n) * b[i] - rational(row[i]);
      if (i == 0 || gap > best_gap) {
        best_gap = gap;
        best_j = i;
      }
    }
    row[best_j] += 1;
    ap.rows.push_back(std::move(row));
  }
  return ap;
}

std::vector<SignedGen> fattest_letters(const GenSet& A) {
  std::vector<SignedGen> letters;
  for (Vec2 dir : A.hull().half_directions()) {
    bool found = false;
    SignedGen pick{};
    int64_t pick_absk = 0;
    for (SignedGen s : A.alphabet()) {
      GroupElement e = A.element_of(s);
      if (Vec2{e.i, e.j} != dir) continue;
      int64_t absk = checked_abs(e.k);
      if (!found || absk < pick_absk) {
        pick = s;
        pick_absk = absk;
        found = true;
      }
    }
    if (!found)
      throw Error("no generator on hull ray " + heis::to_string(dir) +
                  " (hull vertices are generator images; this cannot happen)");
    letters.push_back(pick);
  }
  return letters;
}

FattestWord fattest_word(const GenSet& A, int64_t n) {
  if (n < 0) throw Error("fattest_word requires n >= 0");
  IsoperimetrixSolution iso = isoperimetrix(A.hull());
  std::vector<SignedGen> letters = fattest_letters(A);
  Apportionment ap = apportion(iso.weights, n);
  const std::vector<int64_t>& row = ap.rows[n];

  FattestWord fw;
  for (size_t i = 0; i < letters.size(); ++i)
    fw.word = concat(fw.word, repeat_letter(letters[i], row[i]));
  for (size_t i = 0; i < letters.size(); ++i)
    fw.word = concat(fw.word,
                     repeat_letter({letters[i].index, -letters[i].sign}, row[i]));

  GroupElement e = eval_word(fw.word, A);
  if (e.i != 0 || e.j != 0) throw Error("fattest word is not central");
  fw.k = e.k;
  return fw;
}

std::vector<InterpolationStage> interpolate(const GenSet& A, int64_t n) {
  if (n < 1) throw Error("interpolate requires n >= 1");
  IsoperimetrixSolution iso = isoperimetrix(A.hull());
  std::vector<SignedGen> letters = fattest_letters(A);
  Apportionment ap = apportion(iso.weights, n);
  const std::vector<int64_t>& prev = ap.rows[n - 1];
  const std::vector<int64_t>& row = ap.rows[n];

  size_t j = 0;
  while (j < row.size() && row[j] == prev[j]) ++j;
  if (j == row.size()) throw Error("apportionment rows n-1 and n are identical");

  Word base;  // w_{n-1}
  for (size_t i = 0; i < letters.size(); ++i)
    base = concat(base, repeat_letter(letters[i], prev[i]));
  for (size_t i = 0; i < letters.size(); ++i)
    base = concat(base, repeat_letter({letters[i].index, -letters[i].sign}, prev[i]));

  const SignedGen a = letters[j];
  const SignedGen a_inv{a.index, -a.sign};

  // Final positions in w_n: end of the j block in each half.
  int64_t prefix = 0;
  for (size_t i = 0; i <= j; ++i) prefix += row[i];
  const size_t p1 = static_cast<size_t>(prefix - 1);
  const size_t p2 = static_cast<size_t>(n + prefix - 1);

  auto make_stage = [&](const Word& w, std::string move) {
    GroupElement e = eval_word(w, A);
    if (e.i != 0 || e.j != 0) throw Error("interpolation stage is not central");
    return InterpolationStage{w, e.k, std::move(move)};
  };

  std::vector<InterpolationStage> stages;
  if (n == 1) {
    // The empty word has no room for a letter between the pair.
    Word w = insert_letter(insert_letter(base, 0, a), 1, a_inv);
    stages.push_back(make_stage(w, "insert " + A.letter_name(a) + "," +
                                       A.letter_name(a_inv) + " adjacent"));
    return stages;
  }

  // Insert the pair separated by one letter, the new letter already at its
  // final slot; only the inverse then walks right. Keeps the stage count
  // at n-1 <= 2n.
  Word w = insert_letter(insert_letter(base, p1, a), p1 + 2, a_inv);
  stages.push_back(make_stage(w, "insert " + A.letter_name(a) + "," +
                                     A.letter_name(a_inv) + " at " +
                                     std::to_string(p1) + "," +
                                     std::to_string(p1 + 2)));
  for (size_t pos = p1 + 2; pos < p2; ++pos) {
    w = transpose_adjacent(w, pos);
    stages.push_back(make_stage(w, "transpose " + std::to_string(pos)));
  }
  return stages;
}

SpreadResult spread_words(const GenSet& A, const LengthTable& T, const Word& w,
                          int64_t d) {
  if (d < 0) throw Error("spread_words requires d >= 0");
  GroupElement e = eval_word(w, A);
  const Vec2 ab{e.i, e.j};

  // (a) conjugation: a^s w a^-s shifts the exponent by s*cross(phi(a), ab).
  SignedGen best_a{};
  int64_t best_c = 0;
  for (SignedGen s : A.alphabet()) {
    GroupElement ge = A.element_of(s);
    int64_t c = cross({ge.i, ge.j}, ab);
    if (checked_abs(c) > checked_abs(best_c)) {
      best_c = c;
      best_a = s;
    }
  }
  const int64_t s_pow = d / 2;
  const int64_t gap_conj = checked_mul(2, checked_mul(s_pow, checked_abs(best_c)));

  // (b) commutator append: w [w_x^t, w_y^t] shifts the exponent by +-t^2.
  Word wx = T.geodesic({1, 0, 0});
  Word wy = T.geodesic({0, 1, 0});
  const int64_t l_p = 2 * static_cast<int64_t>(wx.length() + wy.length());
  const int64_t t = d / l_p;
  const int64_t gap_comm = checked_mul(2, checked_mul(t, t));

  SpreadResult r;
  if (gap_conj == 0 && gap_comm == 0) {
    r.plus = r.minus = w;
    r.gap = 0;
    r.construction = "identity";
    return r;
  }
  if (gap_comm >= gap_conj) {
    Word wxt = repeat_word(wx, t), wyt = repeat_word(wy, t);
    // [u,v] = u^-1 v^-1 u v
    Word comm = concat(concat(inverse_word(wxt), inverse_word(wyt)), concat(wxt, wyt));
    Word anti = concat(concat(inverse_word(wyt), inverse_word(wxt)), concat(wyt, wxt));
    r.plus = concat(w, comm);
    r.minus = concat(w, anti);
    r.gap = gap_comm;
    r.construction = "commutator";
  } else {
    SignedGen a = best_c > 0 ? best_a : SignedGen{best_a.index, -best_a.sign};
    Word up = repeat_letter(a, s_pow);
    Word down = inverse_word(up);
    r.plus = concat(concat(up, w), down);
    r.minus = concat(concat(down, w), up);
    r.gap = gap_conj;
    r.construction = "conjugation";
  }
  // Orient so that plus really carries the larger exponent.
  if (eval_word(r.plus, A).k < eval_word(r.minus, A).k) std::swap(r.plus, r.minus);
  return r;
}

ReorderExtremes reorder_extremes(const GenSet& A, std::vector<SignedGen> letters) {
  if (letters.size() > 9)
    throw Error("reorder_extremes brute force is capped at multiset size 9");
  std::sort(letters.begin(), letters.end(), signed_gen_less);

  ReorderExtremes r;
  bool first = true;
  int64_t sum = 0;
  int64_t count = 0;
  do {
    GroupElement e = identity();
    for (SignedGen s : letters) e = mul(e, A.element_of(s));
    if (first) {
      r.k_min = r.k_max = e.k;
      r.i = e.i;
      r.j = e.j;
      first = false;
    } else {
      r.k_min = std::min(r.k_min, e.k);
      r.k_max = std::max(r.k_max, e.k);
    }
    sum = checked_add(sum, e.k);
    ++count;
  } while (std::next_permutation(letters.begin(), letters.end(), signed_gen_less));

  // next_permutation visits each distinct ordering once; identical letters
  // make every distinct ordering equally likely among the n!, so the mean
  // over distinct orderings equals the mean over all n!.
  r.mean = rational(sum, count);
  return r;
}

}  // namespace heis
