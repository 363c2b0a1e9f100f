#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heis/genset.hpp"
#include "heis/metric.hpp"

namespace heis {

enum class Verdict { PASS, FAIL, INCONCLUSIVE };

std::string verdict_name(Verdict v);

// One empirical check. "Bounded" claims are operationalized as stabilization
// of the measured maximum across successive radii; each report says which
// surrogate it used. FAIL always carries a witness; INCONCLUSIVE only when a
// radius or size cap got in the way.
struct CheckReport {
  std::string check_name;
  std::string genset_name;
  int64_t radius = 0;
  std::vector<std::pair<std::string, std::string>> measurements;
  Verdict verdict = Verdict::INCONCLUSIVE;
  std::optional<std::string> witness;
  std::vector<std::string> notes;
};

std::string report_to_json(const CheckReport& r);
// One CSV row per measurement: check,genset,radius,parameter,value,verdict.
std::string report_to_csv(const CheckReport& r, bool with_header);

// Hull-norm deviation on H_ab: max over stored cosets (i,j) of
// | min_k |x^i y^j z^k|_A - ||(i,j)||_B |, stabilized across R-2 and R.
CheckReport check_geo(const GenSet& A, int64_t R, const BallOptions& opt = {});

// Outward monotonicity defect: C* = max over coset pairs k1, k2 on the same
// side of the coset center with k1 nearer of |x^i y^j z^k1| - |x^i y^j z^k2|,
// stabilized across R-4, R-2, R.
CheckReport check_kout(const GenSet& A, int64_t R, const BallOptions& opt = {});

// Per-length maximum certified dead-end depth; passes when a dead end
// (depth >= 2) exists at desk scale.
CheckReport check_depth_growth(const GenSet& A, int64_t R, const BallOptions& opt = {});

// Per-length max depth rows of the scan behind check_depth_growth, for
// report emission: (length, max depth, witness).
struct DepthProfileRow {
  int64_t length = 0;
  int64_t max_depth = 0;
  GroupElement witness;
};
std::vector<DepthProfileRow> depth_profile(const LengthTable& T);

// Max certified retreat depth over a fixed pool (length <= escape_radius-4),
// stabilized as the escape sphere grows from escape_radius-2 to escape_radius.
CheckReport check_retreat_bounded(const GenSet& A, int64_t R, int64_t escape_radius,
                                  const BallOptions& opt = {});

// sqrt(n) law for geodesic projections: diameters of linear images of the
// prefix path of a geodesic for z^n, ratio diam/sqrt(n) within a factor-3
// band per functional. Values of n whose z^n exceeds the radius are skipped.
CheckReport check_dirvar(const GenSet& A, const std::vector<int64_t>& n_list,
                         int64_t R, const BallOptions& opt = {});

// Achievable-exponent density and bracketing: largest gap between
// consecutive achievable k per coset and length bound, and the bracketing of
// the coset center between k_min and k_max past a measured threshold I.
CheckReport check_allkapprox(const GenSet& A, int64_t R, const BallOptions& opt = {});

// All checks with shared defaults; escape_radius <= R. threads > 1 runs the
// independent checks concurrently.
std::vector<CheckReport> run_all_checks(const GenSet& A, int64_t R,
                                        int64_t escape_radius, int threads = 1,
                                        const BallOptions& opt = {});

}  // namespace heis
