#include "heis/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <tuple>

#include "heis/errors.hpp"
#include "heis/rational.hpp"

namespace heis {

namespace {

using Coset = std::pair<int64_t, int64_t>;

struct CosetElem {
  int64_t k;
  int64_t len;
};

// Ordered so reports iterate cosets deterministically.
std::map<Coset, std::vector<CosetElem>> cosets_by_k(const LengthTable& T) {
  std::map<Coset, std::vector<CosetElem>> m;
  for (const auto& [g, e] : T.entries()) m[{g.i, g.j}].push_back({g.k, e.length});
  for (auto& [ij, v] : m)
    std::sort(v.begin(), v.end(), [](auto a, auto b) { return a.k < b.k; });
  return m;
}

std::string coset_str(Coset c) {
  return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
}

// Under the z = x^-1 y^-1 x y convention the exponent center of the coset
// (i,j) sits at -ij/2: reorderings of a word sweep k symmetrically about it.
// Doubled to stay integral.
int64_t coset_center_doubled(Coset c) {
  return checked_neg(checked_mul(c.first, c.second));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += "\"";
  return out;
}

const char* kNotDeskVerifiable =
    "asymptotic claim (unbounded over all of H): NOT DESK-VERIFIABLE at finite "
    "radius; this check reports the stabilized desk-scale measurement only";

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::PASS: return "PASS";
    case Verdict::FAIL: return "FAIL";
    case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "?";
}

std::string report_to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check_name;
  j["genset"] = r.genset_name;
  j["radius"] = r.radius;
  j["verdict"] = verdict_name(r.verdict);
  if (r.witness) j["witness"] = *r.witness;
  nlohmann::ordered_json ms = nlohmann::ordered_json::array();
  for (const auto& [param, value] : r.measurements)
    ms.push_back({{"parameter", param}, {"value", value}});
  j["measurements"] = ms;
  j["notes"] = r.notes;
  return j.dump(2);
}

std::string report_to_csv(const CheckReport& r, bool with_header) {
  std::string out;
  if (with_header) out += "check,genset,radius,parameter,value,verdict\n";
  for (const auto& [param, value] : r.measurements)
    out += r.check_name + "," + csv_field(r.genset_name) + "," +
           std::to_string(r.radius) + "," + csv_field(param) + "," +
           csv_field(value) + "," + verdict_name(r.verdict) + "\n";
  return out;
}

CheckReport check_geo(const GenSet& A, int64_t R, const BallOptions& opt) {
  CheckReport rep{"geo", A.name(), R, {}, Verdict::INCONCLUSIVE, {}, {}};
  rep.notes.push_back(
      "surrogate: max coset deviation |min-length - hull norm| stabilizes from "
      "radius R-2 to R");
  if (R < 4) {
    rep.notes.push_back("radius too small to compare R-2 against R");
    return rep;
  }
  LengthTable T = LengthTable::enumerate_ball(A, R, opt);

  std::map<Coset, int64_t> minlen;
  for (const auto& [g, e] : T.entries()) {
    auto [it, inserted] = minlen.try_emplace({g.i, g.j}, e.length);
    if (!inserted) it->second = std::min<int64_t>(it->second, e.length);
  }

  auto max_dev = [&](int64_t r) {
    Rational best = 0;
    Coset best_c{0, 0};
    for (const auto& [c, len] : minlen) {
      if (len > r) continue;
      Rational dev = rational_abs(rational(len) - A.hull().norm({c.first, c.second}));
      if (dev > best) {
        best = dev;
        best_c = c;
      }
    }
    return std::pair{best, best_c};
  };

  auto [dev_small, c_small] = max_dev(R - 2);
  auto [dev_full, c_full] = max_dev(R);
  rep.measurements.push_back({"max_deviation@R-2", to_string(dev_small)});
  rep.measurements.push_back({"max_deviation@R", to_string(dev_full)});
  if (dev_small == dev_full) {
    rep.verdict = Verdict::PASS;
  } else {
    rep.verdict = Verdict::FAIL;
    rep.witness = "coset " + coset_str(c_full) + " deviation " + to_string(dev_full);
  }
  return rep;
}

CheckReport check_kout(const GenSet& A, int64_t R, const BallOptions& opt) {
  CheckReport rep{"kout", A.name(), R, {}, Verdict::INCONCLUSIVE, {}, {}};
  rep.notes.push_back(
      "surrogate: C* = max length drop moving outward from the coset center, "
      "stabilized across radii R-4, R-2, R");
  if (R < 6) {
    rep.notes.push_back("radius too small to compare three radii");
    return rep;
  }
  LengthTable T = LengthTable::enumerate_ball(A, R, opt);
  auto cosets = cosets_by_k(T);

  struct Best {
    int64_t c_star = 0;
    Coset coset{0, 0};
    int64_t k1 = 0, k2 = 0;
  };

  auto sweep = [&](int64_t r) {
    Best best;
    for (const auto& [c, elems] : cosets) {
      const int64_t center2 = coset_center_doubled(c);
      // Outward-increasing side: k1 <= k2, both at or above the center.
      int64_t min_len_above = -1;
      int64_t min_k_above = 0;
      for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
        if (it->len > r) continue;
        if (min_len_above >= 0 && 2 * it->k >= center2) {
          int64_t drop = it->len - min_len_above;
          if (drop > best.c_star) best = {drop, c, it->k, min_k_above};
        }
        if (min_len_above < 0 || it->len < min_len_above) {
          min_len_above = it->len;
          min_k_above = it->k;
        }
      }
      // Mirrored side: k2 <= k1 at or below the center.
      int64_t min_len_below = -1;
      int64_t min_k_below = 0;
      for (const CosetElem& e : elems) {
        if (e.len > r) continue;
        if (min_len_below >= 0 && 2 * e.k <= center2) {
          int64_t drop = e.len - min_len_below;
          if (drop > best.c_star) best = {drop, c, e.k, min_k_below};
        }
        if (min_len_below < 0 || e.len < min_len_below) {
          min_len_below = e.len;
          min_k_below = e.k;
        }
      }
    }
    return best;
  };

  Best b4 = sweep(R - 4), b2 = sweep(R - 2), b0 = sweep(R);
  rep.measurements.push_back({"c_star@R-4", std::to_string(b4.c_star)});
  rep.measurements.push_back({"c_star@R-2", std::to_string(b2.c_star)});
  rep.measurements.push_back({"c_star@R", std::to_string(b0.c_star)});
  if (b4.c_star == b2.c_star && b2.c_star == b0.c_star) {
    rep.verdict = Verdict::PASS;
  } else {
    rep.verdict = Verdict::FAIL;
    rep.witness = "coset " + coset_str(b0.coset) + " k1=" + std::to_string(b0.k1) +
                  " k2=" + std::to_string(b0.k2) +
                  " drop=" + std::to_string(b0.c_star);
  }
  return rep;
}

std::vector<DepthProfileRow> depth_profile(const LengthTable& T) {
  std::map<int64_t, DepthProfileRow> rows;
  for (const auto& [g, e] : T.entries()) {
    DepthRecord d = depth(T, g);
    auto [it, inserted] = rows.try_emplace(
        e.length, DepthProfileRow{e.length, d.depth, g});
    if (inserted) continue;
    auto key = [](const GroupElement& x) { return std::tie(x.i, x.j, x.k); };
    if (d.depth > it->second.max_depth ||
        (d.depth == it->second.max_depth && key(g) < key(it->second.witness)))
      it->second = {e.length, d.depth, g};
  }
  std::vector<DepthProfileRow> out;
  for (auto& [l, row] : rows) out.push_back(row);
  return out;
}

CheckReport check_depth_growth(const GenSet& A, int64_t R, const BallOptions& opt) {
  CheckReport rep{"depth_growth", A.name(), R, {}, Verdict::INCONCLUSIVE, {}, {}};
  rep.notes.push_back(kNotDeskVerifiable);
  rep.notes.push_back(
      "desk-scale consequence checked: a dead end (depth >= 2) exists");
  LengthTable T = LengthTable::enumerate_ball(A, R, opt);

  std::vector<DepthProfileRow> profile = depth_profile(T);
  DepthProfileRow deepest{0, 0, identity()};
  for (const DepthProfileRow& row : profile) {
    if (row.max_depth > deepest.max_depth) deepest = row;
    rep.measurements.push_back(
        {"max_depth@l=" + std::to_string(row.length), std::to_string(row.max_depth)});
  }
  rep.measurements.push_back({"max_depth", std::to_string(deepest.max_depth)});
  if (deepest.max_depth >= 2) {
    rep.verdict = Verdict::PASS;
    rep.witness = "dead end " + to_string(deepest.witness) + " length " +
                  std::to_string(deepest.length) + " depth " +
                  std::to_string(deepest.max_depth);
  } else {
    rep.verdict = Verdict::FAIL;
    rep.witness = "no dead end of depth >= 2 within radius " + std::to_string(R);
  }
  return rep;
}

CheckReport check_retreat_bounded(const GenSet& A, int64_t R, int64_t escape_radius,
                                  const BallOptions& opt) {
  CheckReport rep{"retreat_bounded", A.name(), R, {}, Verdict::INCONCLUSIVE, {}, {}};
  rep.notes.push_back(kNotDeskVerifiable);
  rep.notes.push_back(
      "surrogate: reaching the escape sphere stands in for lying in an "
      "unbounded component; max retreat depth over a fixed pool of elements "
      "(length <= escape-4), stabilized as the escape sphere grows from "
      "escape-2 to escape");
  if (escape_radius < 6 || escape_radius > R) {
    rep.notes.push_back("need 6 <= escape_radius <= R");
    return rep;
  }
  // The pool must not change between the two runs: longer elements carry
  // deeper pockets, so a growing pool would inflate the max for reasons
  // unrelated to escape-sphere convergence.
  const int64_t pool_max = escape_radius - 4;

  struct Sweep {
    int64_t max_certified = 0;
    int64_t unknown = 0;
    GroupElement witness;
  };
  auto run = [&](int64_t radius, int64_t escape) {
    LengthTable T = LengthTable::enumerate_ball(A, radius, opt);
    Sweep s;
    auto key = [](const GroupElement& x) { return std::tie(x.i, x.j, x.k); };
    for (const auto& [g, e] : T.entries()) {
      if (e.length > pool_max) continue;
      RetreatRecord r = retreat_depth(T, g, escape);
      if (!r.retreat_depth) {
        ++s.unknown;
        continue;
      }
      if (*r.retreat_depth > s.max_certified ||
          (*r.retreat_depth == s.max_certified && key(g) < key(s.witness)))
        s = {*r.retreat_depth, s.unknown, g};
    }
    return s;
  };

  Sweep small = run(R - 2, escape_radius - 2);
  Sweep full = run(R, escape_radius);
  rep.measurements.push_back(
      {"max_retreat@(R-2,escape-2)", std::to_string(small.max_certified)});
  rep.measurements.push_back({"max_retreat@(R,escape)", std::to_string(full.max_certified)});
  rep.measurements.push_back({"unknown@(R-2,escape-2)", std::to_string(small.unknown)});
  rep.measurements.push_back({"unknown@(R,escape)", std::to_string(full.unknown)});
  rep.measurements.push_back({"escape_radius", std::to_string(escape_radius)});
  if (small.max_certified == full.max_certified) {
    rep.verdict = Verdict::PASS;
    rep.witness = "max retreat at " + to_string(full.witness);
  } else {
    rep.verdict = Verdict::FAIL;
    rep.witness = "element " + to_string(full.witness) + " retreat " +
                  std::to_string(full.max_certified) + " vs " +
                  std::to_string(small.max_certified) + " at smaller radius";
  }
  return rep;
}

CheckReport check_dirvar(const GenSet& A, const std::vector<int64_t>& n_list,
                         int64_t R, const BallOptions& opt) {
  CheckReport rep{"dirvar", A.name(), R, {}, Verdict::INCONCLUSIVE, {}, {}};
  rep.notes.push_back(
      "sqrt(n) law: projection diameters of geodesic prefix paths for z^n, "
      "factor-3 band on diam/sqrt(n) per functional (squared ratios compared)");
  LengthTable T = LengthTable::enumerate_ball(A, R, opt);

  const std::vector<Vec2> functionals{{1, 0}, {0, 1}, {1, 1}};
  bool fail = false;
  std::string fail_witness;
  int usable_total = 0;

  for (Vec2 f : functionals) {
    std::vector<std::pair<int64_t, Rational>> ratios;  // (n, diam^2/n)
    for (int64_t n : n_list) {
      GroupElement zn{0, 0, n};
      if (!T.contains(zn)) {
        rep.notes.push_back("n=" + std::to_string(n) +
                            " skipped: z^n outside radius " + std::to_string(R));
        continue;
      }
      Word w = T.geodesic(zn);
      int64_t cur = 0, lo = 0, hi = 0;
      GroupElement acc = identity();
      for (SignedGen s : w.letters) {
        acc = mul(acc, A.element_of(s));
        cur = checked_add(checked_mul(f.x, acc.i), checked_mul(f.y, acc.j));
        lo = std::min(lo, cur);
        hi = std::max(hi, cur);
      }
      int64_t diam = hi - lo;
      rep.measurements.push_back(
          {"diam[f=" + to_string(f) + "][n=" + std::to_string(n) + "]",
           std::to_string(diam)});
      ratios.push_back({n, rational(checked_mul(diam, diam), n)});
    }
    usable_total += static_cast<int>(ratios.size());
    if (ratios.size() < 2) continue;
    auto [mn, mx] = std::minmax_element(
        ratios.begin(), ratios.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    rep.measurements.push_back(
        {"ratio_sq_band[f=" + to_string(f) + "]",
         to_string(mn->second) + ".." + to_string(mx->second)});
    if (mx->second > 9 * mn->second) {
      fail = true;
      fail_witness = "functional " + to_string(f) + ": diam^2/n spans " +
                     to_string(mn->second) + " (n=" + std::to_string(mn->first) +
                     ") to " + to_string(mx->second) +
                     " (n=" + std::to_string(mx->first) + ")";
    }
  }

  if (usable_total < 2 * static_cast<int>(functionals.size())) {
    rep.notes.push_back("too few z^n inside the ball to fit a band");
    return rep;  // INCONCLUSIVE: radius cap
  }
  rep.verdict = fail ? Verdict::FAIL : Verdict::PASS;
  if (fail) rep.witness = fail_witness;
  return rep;
}

CheckReport check_allkapprox(const GenSet& A, int64_t R, const BallOptions& opt) {
  CheckReport rep{"allkapprox", A.name(), R, {}, Verdict::INCONCLUSIVE, {}, {}};
  rep.notes.push_back(
      "bracketing target: coset center -ij/2 (z = x^-1 y^-1 x y convention) "
      "must lie between k_min and k_max once n' exceeds the coset minimal "
      "length by the measured threshold I");
  if (R < 6) {
    rep.notes.push_back("radius too small");
    return rep;
  }
  LengthTable T = LengthTable::enumerate_ball(A, R, opt);
  auto cosets = cosets_by_k(T);

  int64_t max_gap = 0;
  Coset max_gap_coset{0, 0};
  int64_t measured_i = 0;
  int64_t verified_cosets = 0;
  int64_t gap00_small = 0, gap00_full = 0;

  for (const auto& [c, elems] : cosets) {
    int64_t minlen = elems.front().len;
    for (const CosetElem& e : elems) minlen = std::min(minlen, e.len);
    const int64_t center2 = coset_center_doubled(c);

    int64_t first_ok = -1;
    for (int64_t np = minlen; np <= R; ++np) {
      std::vector<int64_t> ks;
      for (const CosetElem& e : elems)
        if (e.len <= np) ks.push_back(e.k);
      std::sort(ks.begin(), ks.end());

      int64_t gap = 0;
      for (size_t t = 1; t < ks.size(); ++t) gap = std::max(gap, ks[t] - ks[t - 1]);
      if (gap > max_gap) {
        max_gap = gap;
        max_gap_coset = c;
      }
      if (c == Coset{0, 0}) {
        if (np == R - 4) gap00_small = gap;
        if (np == R) gap00_full = gap;
      }
      bool ok = 2 * ks.front() <= center2 && center2 <= 2 * ks.back();
      if (ok && first_ok < 0) first_ok = np;
    }
    // Once bracketing holds it keeps holding: k_min only decreases and
    // k_max only increases with n'.
    int64_t offset = (first_ok < 0) ? (R - minlen + 1) : (first_ok - minlen);
    measured_i = std::max(measured_i, offset);
  }
  for (const auto& [c, elems] : cosets) {
    int64_t minlen = elems.front().len;
    for (const CosetElem& e : elems) minlen = std::min(minlen, e.len);
    if (minlen + measured_i <= R) ++verified_cosets;
  }

  rep.measurements.push_back({"max_gap", std::to_string(max_gap)});
  rep.measurements.push_back({"measured_D", to_string(rational(max_gap, 2))});
  rep.measurements.push_back({"measured_I", std::to_string(measured_i)});
  rep.measurements.push_back({"verified_cosets", std::to_string(verified_cosets)});
  rep.measurements.push_back({"gap(0,0)@R-4", std::to_string(gap00_small)});
  rep.measurements.push_back({"gap(0,0)@R", std::to_string(gap00_full)});

  if (verified_cosets >= 1 && gap00_full <= gap00_small) {
    rep.verdict = Verdict::PASS;
  } else {
    rep.verdict = Verdict::FAIL;
    rep.witness = "coset " + coset_str(max_gap_coset) + " max gap " +
                  std::to_string(max_gap) + "; verified cosets " +
                  std::to_string(verified_cosets);
  }
  return rep;
}

std::vector<CheckReport> run_all_checks(const GenSet& A, int64_t R,
                                        int64_t escape_radius, int threads,
                                        const BallOptions& opt) {
  std::vector<std::function<CheckReport()>> jobs{
      [&] { return check_geo(A, R, opt); },
      [&] { return check_kout(A, R, opt); },
      [&] { return check_depth_growth(A, R, opt); },
      [&] { return check_retreat_bounded(A, R, escape_radius, opt); },
      [&] { return check_dirvar(A, {1, 4, 9, 16}, R, opt); },
      [&] { return check_allkapprox(A, R, opt); },
  };

  std::vector<CheckReport> reports(jobs.size());
  if (threads > 1) {
    std::vector<std::future<CheckReport>> futs;
    for (auto& job : jobs)
      futs.push_back(std::async(std::launch::async, job));
    for (size_t t = 0; t < futs.size(); ++t) reports[t] = futs[t].get();
  } else {
    for (size_t t = 0; t < jobs.size(); ++t) reports[t] = jobs[t]();
  }
  return reports;
}

}  // namespace heis
