// heis-depth: word metrics, dead-end depth, retreat depth and word
// constructions in the discrete Heisenberg group for arbitrary finite
// generating sets. Exact arithmetic throughout; rationals print as "p/q".

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "heis/construct.hpp"
#include "heis/errors.hpp"
#include "heis/genset.hpp"
#include "heis/metric.hpp"
#include "heis/verify.hpp"
#include "heis/word.hpp"

namespace {

using heis::Rational;

struct CommonOpts {
  std::string genset_path;
  int64_t radius = 12;
  std::optional<int64_t> escape;
  std::string format = "json";
  std::string out;
  int threads = 1;
  uint64_t memory_cap = uint64_t{2} << 30;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_radius = true) {
  cmd->add_option("--genset", o.genset_path, "generating-set JSON config")->required();
  if (with_radius) cmd->add_option("--radius", o.radius, "ball radius");
  cmd->add_option("--escape", o.escape, "escape-sphere radius for retreat depth");
  cmd->add_option("--format", o.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out, "output path (default stdout)");
  cmd->add_option("--threads", o.threads, "worker threads for verify all");
  cmd->add_option("--memory-cap", o.memory_cap, "ball memory cap in bytes");
}

heis::GenSet load_genset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw heis::ConfigError("cannot open genset config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return heis::parse_genset(ss.str());
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw heis::Error("cannot open output path: " + o.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

heis::BallOptions ball_options(const CommonOpts& o) {
  heis::BallOptions b;
  b.memory_cap_bytes = o.memory_cap;
  return b;
}

int run_ball(const CommonOpts& o) {
  heis::GenSet A = load_genset(o.genset_path);
  heis::LengthTable T = heis::LengthTable::enumerate_ball(A, o.radius, ball_options(o));
  if (o.format == "csv") {
    std::string s = "n,count\n";
    for (size_t n = 0; n < T.counts().size(); ++n)
      s += std::to_string(n) + "," + std::to_string(T.counts()[n]) + "\n";
    emit(o, s);
  } else {
    nlohmann::ordered_json j;
    j["genset"] = A.name();
    j["radius"] = o.radius;
    j["size"] = T.size();
    j["counts"] = T.counts();
    emit(o, j.dump(2));
  }
  return 0;
}

int run_depth_profile(const CommonOpts& o) {
  heis::GenSet A = load_genset(o.genset_path);
  heis::LengthTable T = heis::LengthTable::enumerate_ball(A, o.radius, ball_options(o));
  auto profile = heis::depth_profile(T);
  if (o.format == "csv") {
    std::string s = "length,max_depth,witness\n";
    for (const auto& row : profile)
      s += std::to_string(row.length) + "," + std::to_string(row.max_depth) + ",\"" +
           heis::to_string(row.witness) + "\"\n";
    emit(o, s);
  } else {
    nlohmann::ordered_json j;
    j["genset"] = A.name();
    j["radius"] = o.radius;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : profile)
      rows.push_back({{"length", row.length},
                      {"max_depth", row.max_depth},
                      {"witness", heis::to_string(row.witness)}});
    j["profile"] = rows;
    emit(o, j.dump(2));
  }
  return 0;
}

int run_retreat(const CommonOpts& o) {
  heis::GenSet A = load_genset(o.genset_path);
  const int64_t escape = o.escape.value_or(o.radius - 2);
  heis::LengthTable T = heis::LengthTable::enumerate_ball(A, o.radius, ball_options(o));

  std::map<int64_t, int64_t> max_by_len;
  int64_t unknown = 0;
  for (const auto& [g, e] : T.entries()) {
    if (e.length > escape - 2) continue;
    heis::RetreatRecord r = heis::retreat_depth(T, g, escape);
    if (!r.retreat_depth) {
      ++unknown;
      continue;
    }
    auto [it, inserted] = max_by_len.try_emplace(e.length, *r.retreat_depth);
    if (!inserted) it->second = std::max(it->second, *r.retreat_depth);
  }
  if (o.format == "csv") {
    std::string s = "length,max_retreat_depth,escape_radius\n";
    for (const auto& [l, d] : max_by_len)
      s += std::to_string(l) + "," + std::to_string(d) + "," + std::to_string(escape) + "\n";
    emit(o, s);
  } else {
    nlohmann::ordered_json j;
    j["genset"] = A.name();
    j["radius"] = o.radius;
    j["escape_radius"] = escape;
    j["unknown_count"] = unknown;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& [l, d] : max_by_len)
      rows.push_back({{"length", l}, {"max_retreat_depth", d}});
    j["profile"] = rows;
    emit(o, j.dump(2));
  }
  return 0;
}

int run_construct(const CommonOpts& o, int64_t n_max, bool with_interpolation) {
  heis::GenSet A = load_genset(o.genset_path);
  if (o.format == "csv") {
    std::string s = "n,k,word\n";
    for (int64_t n = 0; n <= n_max; ++n) {
      heis::FattestWord fw = heis::fattest_word(A, n);
      s += std::to_string(n) + "," + std::to_string(fw.k) + ",\"" +
           heis::word_to_string(fw.word, A) + "\"\n";
    }
    emit(o, s);
    return 0;
  }
  nlohmann::ordered_json j;
  j["genset"] = A.name();
  auto rows = nlohmann::ordered_json::array();
  for (int64_t n = 0; n <= n_max; ++n) {
    heis::FattestWord fw = heis::fattest_word(A, n);
    nlohmann::ordered_json row{{"n", n},
                               {"k", fw.k},
                               {"word", heis::word_to_string(fw.word, A)}};
    if (with_interpolation && n >= 1) {
      auto stages = nlohmann::ordered_json::array();
      for (const auto& st : heis::interpolate(A, n))
        stages.push_back({{"word", heis::word_to_string(st.word, A)},
                          {"k", st.k},
                          {"move", st.move}});
      row["interpolation"] = stages;
    }
    rows.push_back(row);
  }
  j["fattest_words"] = rows;
  emit(o, j.dump(2));
  return 0;
}

int run_isoperimetrix(const CommonOpts& o) {
  heis::GenSet A = load_genset(o.genset_path);
  heis::IsoperimetrixSolution iso = heis::isoperimetrix(A.hull());
  if (o.format == "csv") {
    std::string s = "direction,weight\n";
    for (size_t t = 0; t < iso.directions.size(); ++t)
      s += "\"" + heis::to_string(iso.directions[t]) + "\"," +
           heis::to_string(iso.weights[t]) + "\n";
    s += "M_A," + heis::to_string(iso.m_a) + "\n";
    emit(o, s);
  } else {
    nlohmann::ordered_json j;
    j["genset"] = A.name();
    auto dirs = nlohmann::ordered_json::array();
    for (size_t t = 0; t < iso.directions.size(); ++t)
      dirs.push_back({{"direction", heis::to_string(iso.directions[t])},
                      {"weight", heis::to_string(iso.weights[t])}});
    j["directions"] = dirs;
    j["area_at_perimeter_2"] = heis::to_string(iso.area);
    j["M_A"] = heis::to_string(iso.m_a);
    emit(o, j.dump(2));
  }
  return 0;
}

int run_verify(const CommonOpts& o, const std::string& which) {
  heis::GenSet A = load_genset(o.genset_path);
  const int64_t escape = o.escape.value_or(o.radius - 2);
  heis::BallOptions bopt = ball_options(o);

  std::vector<heis::CheckReport> reports;
  if (which == "all") {
    reports = heis::run_all_checks(A, o.radius, escape, o.threads, bopt);
  } else if (which == "geo") {
    reports.push_back(heis::check_geo(A, o.radius, bopt));
  } else if (which == "kout") {
    reports.push_back(heis::check_kout(A, o.radius, bopt));
  } else if (which == "depth") {
    reports.push_back(heis::check_depth_growth(A, o.radius, bopt));
  } else if (which == "retreat") {
    reports.push_back(heis::check_retreat_bounded(A, o.radius, escape, bopt));
  } else if (which == "dirvar") {
    reports.push_back(heis::check_dirvar(A, {1, 4, 9, 16}, o.radius, bopt));
  } else if (which == "allkapprox") {
    reports.push_back(heis::check_allkapprox(A, o.radius, bopt));
  } else {
    std::cerr << "unknown check '" << which
              << "' (geo|kout|depth|retreat|dirvar|allkapprox|all)\n";
    return 2;
  }

  if (o.format == "csv") {
    std::string s;
    for (size_t t = 0; t < reports.size(); ++t)
      s += heis::report_to_csv(reports[t], t == 0);
    emit(o, s);
  } else {
    std::string s = "[\n";
    for (size_t t = 0; t < reports.size(); ++t) {
      s += heis::report_to_json(reports[t]);
      if (t + 1 < reports.size()) s += ",";
      s += "\n";
    }
    s += "]";
    emit(o, s);
  }

  for (const auto& r : reports) {
    std::cerr << r.check_name << ": " << heis::verdict_name(r.verdict) << "\n";
    if (r.verdict == heis::Verdict::FAIL) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact word-metric toolkit for the discrete Heisenberg group"};
  app.require_subcommand(1);

  CommonOpts o;
  int64_t construct_n = 10;
  bool with_interpolation = false;
  std::string verify_which;

  CLI::App* ball = app.add_subcommand("ball", "enumerate a ball, emit sphere counts");
  add_common(ball, o);
  CLI::App* dp = app.add_subcommand("depth-profile", "per-length max dead-end depth");
  add_common(dp, o);
  CLI::App* retreat = app.add_subcommand("retreat", "per-length max certified retreat depth");
  add_common(retreat, o);
  CLI::App* construct = app.add_subcommand("construct", "fattest central words");
  add_common(construct, o, false);
  construct->add_option("--n", construct_n, "largest half-length n");
  construct->add_flag("--interpolate", with_interpolation,
                      "emit interpolation stages (json only)");
  CLI::App* iso = app.add_subcommand("isoperimetrix", "optimal zonotope weights and M_A");
  add_common(iso, o, false);
  CLI::App* verify = app.add_subcommand("verify", "run empirical checks");
  add_common(verify, o);
  verify->add_option("check", verify_which, "check name or 'all'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ball->parsed()) return run_ball(o);
    if (dp->parsed()) return run_depth_profile(o);
    if (retreat->parsed()) return run_retreat(o);
    if (construct->parsed()) return run_construct(o, construct_n, with_interpolation);
    if (iso->parsed()) return run_isoperimetrix(o);
    if (verify->parsed()) return run_verify(o, verify_which);
  } catch (const heis::ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const heis::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
