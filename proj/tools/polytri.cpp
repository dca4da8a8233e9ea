// polytri: exact triangulation counts of subdivided convex polygons, with
// differential verification against a brute-force enumeration oracle,
// generating-function and asymptotic checks, and plot-data export.

#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <polytri/asymptotics.hpp>
#include <polytri/cache.hpp>
#include <polytri/counting.hpp>
#include <polytri/gf_check.hpp>
#include <polytri/oracle.hpp>
#include <polytri/version.hpp>

using namespace polytri;
using nlohmann::json;

namespace {

enum class Format { text, json_fmt, csv };

struct RunConfig {
  Format format = Format::text;
  std::string cache_path;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json_fmt;
  if (s == "csv") return Format::csv;
  throw CLI::ValidationError("--format must be text, json or csv");
}

void cache_record(const RunConfig& cfg, CountFamily fam, std::vector<long> params,
                  const Count& value) {
  if (cfg.cache_path.empty()) return;
  CacheFile cache(cfg.cache_path);
  cache.load();
  cache.append({fam, std::move(params), value});
}

// One labelled count plus optional labelled sub-counts (the breakdown).
void print_count(const RunConfig& cfg, CountFamily fam, const std::vector<long>& params,
                 const Count& value,
                 const std::vector<std::pair<std::string, Count>>& extra = {}) {
  switch (cfg.format) {
    case Format::text:
      for (const auto& [label, v] : extra) std::cout << label << " = " << to_decimal(v) << "\n";
      if (!extra.empty()) std::cout << "total = ";
      std::cout << to_decimal(value) << "\n";
      break;
    case Format::json_fmt: {
      json j;
      j["family"] = family_name(fam);
      j["params"] = params;
      j["count"] = to_decimal(value);
      for (const auto& [label, v] : extra) j[label] = to_decimal(v);
      std::cout << j.dump() << "\n";
      break;
    }
    case Format::csv: {
      std::cout << "family,params,component,count\n";
      std::ostringstream ps;
      for (size_t i = 0; i < params.size(); ++i) ps << (i ? " " : "") << params[i];
      for (const auto& [label, v] : extra)
        std::cout << family_name(fam) << "," << ps.str() << "," << label << "," << to_decimal(v)
                  << "\n";
      std::cout << family_name(fam) << "," << ps.str() << ",total," << to_decimal(value) << "\n";
      break;
    }
  }
}

// ---- verify ----

struct Comparison {
  std::string name;
  Count got, want;
  bool ok() const { return got == want; }
};

std::vector<Comparison> run_parallel(std::vector<std::function<Comparison()>> jobs,
                                     unsigned threads) {
  std::vector<Comparison> results(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        results[i] = jobs[i]();
      } catch (const std::exception& e) {
        results[i].name = std::string("exception: ") + e.what();
        results[i].got = -1;
        results[i].want = 0;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
  for (unsigned i = 0; i + 1 < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

void verify_balanced(int max_points, std::vector<std::function<Comparison()>>& jobs) {
  for (int k = 3; k <= max_points / 2; ++k)
    for (int r = 2; k * r <= max_points; ++r) {
      jobs.push_back([k, r] {
        Comparison c;
        c.name = "balanced(" + std::to_string(k) + "," + std::to_string(r) + ")";
        c.got = count_legal(StringLayout::balanced({k, r}));
        c.want = balanced_count_sum2({k, r});
        return c;
      });
    }
}

void verify_triangle(int max_sum, std::vector<std::function<Comparison()>>& jobs) {
  for (int a = 0; a <= max_sum; ++a)
    for (int b = 0; a + b <= max_sum; ++b)
      for (int c = 0; a + b + c <= max_sum; ++c) {
        if (a + b + c == 0) continue;
        jobs.push_back([a, b, c] {
          TriangleParams t{a, b, c};
          std::map<TriClass, Count> tally;
          Count total = 0;
          enumerate_legal(StringLayout::triangle(t), [&](const Triangulation& tri) {
            ++tally[classify(tri, t).cls];
            ++total;
          });
          Comparison cmp;
          cmp.name = "triangle(" + std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(c) + ")";
          bool classes_ok = tally[TriClass::T] == triangle_t_count(t) &&
                            tally[TriClass::D_A] == triangle_d_corner_count({a, b, c}) &&
                            tally[TriClass::D_B] == triangle_d_corner_count({b, c, a}) &&
                            tally[TriClass::D_C] == triangle_d_corner_count({c, a, b}) &&
                            total == triangle_binomial_sum(t);
          cmp.got = total;
          cmp.want = classes_ok ? triangle_count(t) : Count(-1);
          return cmp;
        });
      }
}

void verify_partial(int max_points, std::vector<std::function<Comparison()>>& jobs) {
  for (int n = 3; n <= max_points; ++n)
    for (int s = 0; 2 * s <= n; ++s) {
      if (n - s < 2) continue;
      jobs.push_back([n, s] {
        Comparison c;
        c.name = "partial(" + std::to_string(n) + "," + std::to_string(s) + ")";
        Count canonical = count_legal(StringLayout::partial({n, s}, false));
        Count spread = count_legal(StringLayout::partial({n, s}, true));
        c.got = canonical;
        c.want = (canonical == spread) ? partial_count({n, s}) : Count(-1);
        return c;
      });
    }
}

void verify_bijection(int max_sum, std::vector<std::function<Comparison()>>& jobs) {
  for (int a = 0; a <= max_sum; ++a)
    for (int b = 0; a + b <= max_sum; ++b)
      for (int c = 0; a + b + c <= max_sum; ++c) {
        jobs.push_back([a, b, c] {
          TriangleParams t{a, b, c};
          Comparison cmp;
          cmp.name = "bijection(" + std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(c) + ")";
          std::set<FundamentalSet> image;
          bool trips = true;
          enumerate_legal(StringLayout::triangle(t), [&](const Triangulation& tri) {
            FundamentalSet f = fundamental_set_of(tri, t);
            image.insert(f);
            if (!(triangulation_of(f, t) == tri)) trips = false;
          });
          cmp.got = trips ? Count(static_cast<long>(image.size())) : Count(-1);
          cmp.want = triangle_binomial_sum(t);
          return cmp;
        });
      }
}

void verify_general(int max_points, std::vector<std::function<Comparison()>>& jobs) {
  // one representative per sorted side multiset
  std::vector<std::vector<int>> cases;
  for (int k = 3; k <= max_points; ++k) {
    std::vector<int> sides(static_cast<size_t>(k), 0);
    std::function<void(int, int, int)> gen = [&](int idx, int maxv, int total) {
      if (total > max_points) return;
      if (idx == k) {
        cases.push_back(sides);
        return;
      }
      for (int v = 0; v <= maxv && total + v <= max_points; ++v) {
        sides[static_cast<size_t>(idx)] = v;
        gen(idx + 1, v, total + v);
      }
      sides[static_cast<size_t>(idx)] = 0;
    };
    gen(0, max_points, k);
  }
  for (const auto& sides : cases) {
    jobs.push_back([sides] {
      Comparison c;
      std::ostringstream name;
      name << "general(";
      for (size_t i = 0; i < sides.size(); ++i) name << (i ? " " : "") << sides[i];
      name << ")";
      c.name = name.str();
      c.got = count_legal(StringLayout(sides));
      c.want = general_count(sides);
      return c;
    });
  }
}

int report_comparisons(const RunConfig& cfg, const std::vector<Comparison>& results) {
  size_t failed = 0;
  if (cfg.format == Format::csv) std::cout << "name,got,want,ok\n";
  std::vector<json> rows;
  for (const auto& c : results) {
    bool ok = c.ok();
    if (!ok) ++failed;
    switch (cfg.format) {
      case Format::text:
        std::cout << (ok ? "PASS " : "FAIL ") << c.name << ": oracle " << to_decimal(c.got)
                  << " vs formula " << to_decimal(c.want) << "\n";
        break;
      case Format::csv:
        std::cout << c.name << "," << to_decimal(c.got) << "," << to_decimal(c.want) << ","
                  << (ok ? "1" : "0") << "\n";
        break;
      case Format::json_fmt: {
        json j;
        j["name"] = c.name;
        j["got"] = to_decimal(c.got);
        j["want"] = to_decimal(c.want);
        j["ok"] = ok;
        rows.push_back(std::move(j));
        break;
      }
    }
  }
  if (cfg.format == Format::json_fmt) std::cout << json(rows).dump() << "\n";
  if (cfg.format == Format::text) {
    if (failed == 0)
      std::cout << "PASS, " << results.size() << " comparisons\n";
    else
      std::cout << "FAIL, " << failed << " of " << results.size() << " comparisons\n";
  }
  return failed == 0 ? 0 : 1;
}

Count counted_by_method(SubdivisionParams p, const std::string& method) {
  if (p.k == 2 && p.r == 1) return 1;  // digon convention, every route
  if (method == "sum1") return balanced_count_sum1(p);
  if (method == "sum2") return balanced_count_sum2(p);
  if (method == "ie") return balanced_count_ie(p);
  throw CLI::ValidationError("--method must be auto, sum1, sum2 or ie");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact triangulation counting for subdivided convex polygons"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  std::string format_str = "text";
  app.add_option("--format", format_str, "output format: text, json or csv")
      ->capture_default_str();
  app.add_option("--cache", cfg.cache_path, "append-only JSON Lines results cache");
  app.add_option("--threads", cfg.threads, "worker threads for verification sweeps")
      ->check(CLI::PositiveNumber);

  int exit_code = 0;
  auto guard = [&](const std::function<void()>& body) {
    try {
      cfg.format = parse_format(format_str);  // callbacks run once parsing is complete
      body();
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      exit_code = 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      exit_code = 1;
    }
  };

  // ---- count ----
  auto* count_cmd = app.add_subcommand("count", "triangulations of the balanced configuration");
  int ck = 0, cr = 0;
  std::string method = "auto";
  count_cmd->add_option("k", ck, "number of corners")->required();
  count_cmd->add_option("r", cr, "points per string")->required();
  count_cmd->add_option("--method", method, "auto, sum1, sum2 or ie")->capture_default_str();
  count_cmd->callback([&] {
    guard([&] {
      SubdivisionParams p{ck, cr};
      Count value;
      if (method == "auto") {
        value = counted_by_method(p, "sum2");
        Count check = counted_by_method(p, "ie");
        if (value != check)
          throw std::runtime_error("cross-check mismatch: sum2 " + to_decimal(value) + " vs ie " +
                                   to_decimal(check));
      } else {
        value = counted_by_method(p, method);
      }
      cache_record(cfg, CountFamily::balanced, {ck, cr}, value);
      print_count(cfg, CountFamily::balanced, {ck, cr}, value);
    });
  });

  // ---- triangle ----
  auto* tri_cmd = app.add_subcommand("triangle", "triangulations of a subdivided triangle");
  int ta = 0, tb = 0, tc = 0;
  bool breakdown = false;
  tri_cmd->add_option("a", ta, "subdivision points on side BC")->required();
  tri_cmd->add_option("b", tb, "subdivision points on side CA")->required();
  tri_cmd->add_option("c", tc, "subdivision points on side AB")->required();
  tri_cmd->add_flag("--breakdown", breakdown, "also print D_A, D_B, D_C and T counts");
  tri_cmd->callback([&] {
    guard([&] {
      TriangleParams t{ta, tb, tc};
      Count total = triangle_count(t);
      Count cross = triangle_binomial_sum(t);
      if (total != cross)
        throw std::runtime_error("cross-check mismatch: closed form " + to_decimal(total) +
                                 " vs binomial sum " + to_decimal(cross));
      cache_record(cfg, CountFamily::triangle, {ta, tb, tc}, total);
      std::vector<std::pair<std::string, Count>> extra;
      if (breakdown) {
        extra = {{"D_A", triangle_d_corner_count({ta, tb, tc})},
                 {"D_B", triangle_d_corner_count({tb, tc, ta})},
                 {"D_C", triangle_d_corner_count({tc, ta, tb})},
                 {"T", triangle_t_count(t)}};
      }
      print_count(cfg, CountFamily::triangle, {ta, tb, tc}, total, extra);
    });
  });

  // ---- partial ----
  auto* partial_cmd = app.add_subcommand("partial", "polygon with s singly subdivided sides");
  int pn = 0, ps = 0;
  partial_cmd->add_option("N", pn, "total boundary points")->required();
  partial_cmd->add_option("s", ps, "sides subdivided by one point")->required();
  partial_cmd->callback([&] {
    guard([&] {
      Count value = partial_count({pn, ps});
      cache_record(cfg, CountFamily::partial, {pn, ps}, value);
      print_count(cfg, CountFamily::partial, {pn, ps}, value);
    });
  });

  // ---- general ----
  auto* general_cmd = app.add_subcommand("general", "arbitrary per-side subdivision counts");
  std::vector<int> sides;
  general_cmd->add_option("sides", sides, "interior points per side")->required()->expected(-3);
  general_cmd->callback([&] {
    guard([&] {
      Count value = general_count(sides);
      std::vector<long> params(sides.begin(), sides.end());
      cache_record(cfg, CountFamily::general, params, value);
      print_count(cfg, CountFamily::general, params, value);
    });
  });

  // ---- isc ----
  auto* isc_cmd = app.add_subcommand("isc", "indented configuration (strings pulled inwards)");
  int ik = 0, ir = 0;
  isc_cmd->add_option("k", ik, "number of corners")->required();
  isc_cmd->add_option("r", ir, "points per string")->required();
  isc_cmd->callback([&] {
    guard([&] {
      Count value = indented_count({ik, ir});
      cache_record(cfg, CountFamily::isc, {ik, ir}, value);
      print_count(cfg, CountFamily::isc, {ik, ir}, value);
    });
  });

  // ---- table ----
  auto* table_cmd = app.add_subcommand("table", "balanced counts for k = 2..k_max, r = 1..r_max");
  int tk = 7, tr = 6;
  table_cmd->add_option("k_max", tk)->required()->check(CLI::Range(2, 12));
  table_cmd->add_option("r_max", tr)->required()->check(CLI::Range(1, 12));
  table_cmd->callback([&] {
    guard([&] {
      // every printed entry is dual-computed
      std::map<std::pair<int, int>, Count> values;
      for (int k = 2; k <= tk; ++k)
        for (int r = 1; r <= tr; ++r) {
          Count v = balanced_count({k, r});
          if (k * r >= 3 && balanced_count_ie({k, r}) != v)
            throw std::runtime_error("cross-check mismatch in table");
          values[{k, r}] = v;
        }
      if (cfg.format == Format::text) {
        std::vector<size_t> width(static_cast<size_t>(tr) + 1, 1);
        for (auto& [kr, v] : values)
          width[static_cast<size_t>(kr.second)] =
              std::max(width[static_cast<size_t>(kr.second)], to_decimal(v).size());
        std::cout << "k\\r";
        for (int r = 1; r <= tr; ++r)
          std::cout << "  " << std::string(width[static_cast<size_t>(r)] - std::to_string(r).size(), ' ')
                    << r;
        std::cout << "\n";
        for (int k = 2; k <= tk; ++k) {
          std::cout << k << "  ";
          for (int r = 1; r <= tr; ++r) {
            std::string s = to_decimal(values[{k, r}]);
            std::cout << "  " << std::string(width[static_cast<size_t>(r)] - s.size(), ' ') << s;
          }
          std::cout << "\n";
        }
      } else if (cfg.format == Format::csv) {
        std::cout << "k,r,count\n";
        for (const auto& [kr, v] : values)
          std::cout << kr.first << "," << kr.second << "," << to_decimal(v) << "\n";
      } else {
        std::vector<json> rows;
        for (const auto& [kr, v] : values)
          rows.push_back({{"k", kr.first}, {"r", kr.second}, {"count", to_decimal(v)}});
        std::cout << json(rows).dump() << "\n";
      }
    });
  });

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "differential checks against the oracle");
  std::string scope = "all";
  int max_points = 16, max_sum = 8;
  verify_cmd->add_option("--scope", scope, "balanced, triangle, partial, bijection or all")
      ->capture_default_str();
  verify_cmd->add_option("--max-points", max_points, "boundary point budget")
      ->capture_default_str();
  verify_cmd->add_option("--max-sum", max_sum, "triangle subdivision budget")
      ->capture_default_str();
  verify_cmd->callback([&] {
    guard([&] {
      std::vector<std::function<Comparison()>> jobs;
      if (scope == "balanced" || scope == "all") verify_balanced(max_points, jobs);
      if (scope == "triangle" || scope == "all") verify_triangle(max_sum, jobs);
      if (scope == "partial" || scope == "all") verify_partial(max_points, jobs);
      if (scope == "bijection" || scope == "all") verify_bijection(max_sum, jobs);
      if (scope == "all") verify_general(std::min(max_points, 12), jobs);
      if (jobs.empty()) throw std::invalid_argument("unknown scope: " + scope);
      exit_code = report_comparisons(cfg, run_parallel(std::move(jobs), cfg.threads));
    });
  });

  // ---- series ----
  auto* series_cmd = app.add_subcommand("series", "generating function checks");
  std::string family;
  int order = 10, sr = 2, sk = 3;
  double sx = 0.005;
  series_cmd->add_option("family", family, "van-hoeij, g, vertical or horizontal")->required();
  series_cmd->add_option("--order", order, "truncation order");
  series_cmd->add_option("--r", sr, "vertical parameter");
  series_cmd->add_option("--k", sk, "horizontal parameter");
  series_cmd->add_option("--x", sx, "evaluation point");
  series_cmd->callback([&] {
    guard([&] {
      if (family == "van-hoeij") {
        RatSeries s = van_hoeij_series(order + 1);
        if (cfg.format == Format::csv) std::cout << "power,coefficient,reference,match\n";
        std::vector<json> rows;
        for (int m = 2; m <= order + 1; ++m) {
          Count ref = balanced_count({3, m - 1});
          bool match = s.coeff(m) == BigRat(ref);
          if (cfg.format == Format::text)
            std::cout << "x^" << m << ": " << s.coeff(m).get_str() << (match ? "  ok" : "  MISMATCH")
                      << "\n";
          else if (cfg.format == Format::csv)
            std::cout << m << "," << s.coeff(m).get_str() << "," << to_decimal(ref) << ","
                      << (match ? 1 : 0) << "\n";
          else
            rows.push_back({{"power", m},
                            {"coefficient", s.coeff(m).get_str()},
                            {"reference", to_decimal(ref)},
                            {"match", match}});
          if (!match) throw std::runtime_error("series coefficient mismatch");
        }
        if (cfg.format == Format::json_fmt) std::cout << json(rows).dump() << "\n";
      } else if (family == "g") {
        RatSeries s = g_series(order);
        if (cfg.format == Format::csv) std::cout << "power,coefficient\n";
        for (int m = 1; m <= order; ++m) {
          if (cfg.format == Format::csv)
            std::cout << m << "," << s.coeff(m).get_str() << "\n";
          else
            std::cout << "x^" << m << ": " << s.coeff(m).get_str() << "\n";
        }
      } else if (family == "vertical" || family == "horizontal") {
        std::complex<double> x(sx, 0.0);
        std::complex<double> got, ref;
        if (family == "vertical") {
          got = vertical_gf_eval(sr, x);
          ref = eval_rat_window(vertical_window(sr, 30), x);
        } else {
          got = horizontal_gf_eval(sk, x);
          ref = eval_count_window(horizontal_window(sk, 40), x);
        }
        double residual = std::abs(got - ref);
        char buf[200];
        std::snprintf(buf, sizeof buf, "value %.15g  reference %.15g  residual %.3e", got.real(),
                      ref.real(), residual);
        std::cout << buf << "\n";
        if (residual > 1e-9) throw std::runtime_error("series residual exceeds tolerance");
      } else {
        throw std::invalid_argument("unknown series family: " + family);
      }
    });
  });

  // ---- asympt ----
  auto* asympt_cmd = app.add_subcommand("asympt", "asymptotic estimates vs exact counts");
  std::string regime;
  int ak = 3, ar = 2, an = 100;
  double alpha = 0.25;
  bool have_alpha = false;
  asympt_cmd->add_option("regime", regime, "r-inf, k-inf or partial")->required();
  asympt_cmd->add_option("--k", ak, "corners");
  asympt_cmd->add_option("--r", ar, "points per string");
  asympt_cmd->add_option("--N", an, "total points (partial regime)");
  asympt_cmd->add_option("--alpha", alpha, "s/N ratio (partial regime)")
      ->each([&](const std::string&) { have_alpha = true; });
  asympt_cmd->callback([&] {
    guard([&] {
      AsymptoticEstimate est;
      std::optional<Count> exact;
      if (regime == "r-inf") {
        est = asympt_r_to_inf(ak, ar);
        if (static_cast<long>(ak) * ar <= 2000) exact = balanced_count({ak, ar});
      } else if (regime == "k-inf") {
        est = asympt_k_to_inf(ak, ar);
        if (static_cast<long>(ak) * ar <= 2000) exact = balanced_count({ak, ar});
      } else if (regime == "partial") {
        int s = have_alpha ? static_cast<int>(alpha * an + 0.5) : an / 4;
        est = asympt_partial(an, static_cast<double>(s) / an);
        if (an <= 2000) exact = partial_count({an, s});
      } else {
        throw std::invalid_argument("unknown regime: " + regime);
      }
      char buf[96];
      std::snprintf(buf, sizeof buf, "log_estimate %.6f  growth_base %.6f", est.log_value,
                    est.growth_base);
      std::cout << buf << "\n";
      if (exact) {
        double ratio = std::exp(log_ratio(*exact, est));
        std::snprintf(buf, sizeof buf, "%.6f", ratio);
        std::cout << "exact " << to_decimal(*exact) << "  ratio " << buf << "\n";
      }
    });
  });

  // ---- growth ----
  auto* growth_cmd = app.add_subcommand("growth", "per-point growth factor sweep");
  double gmin = 1.0, gmax = 6.0, gstep = 0.01;
  growth_cmd->add_option("--min", gmin)->capture_default_str();
  growth_cmd->add_option("--max", gmax)->capture_default_str();
  growth_cmd->add_option("--step", gstep)->check(CLI::PositiveNumber)->capture_default_str();
  growth_cmd->callback([&] {
    guard([&] {
      std::cout << "r,g\n";
      char buf[64];
      for (double r = gmin; r <= gmax + 1e-12; r += gstep) {
        GrowthPoint p = growth_factor(r);
        std::snprintf(buf, sizeof buf, "%.6f,%.6f", p.r, p.g);
        std::cout << buf << "\n";
      }
      int best_int = 1;
      for (int r = std::max(1, static_cast<int>(gmin)); r <= static_cast<int>(gmax); ++r)
        if (growth_factor(r).g < growth_factor(best_int).g) best_int = r;
      GrowthMinimum m = growth_minimum();
      std::snprintf(buf, sizeof buf, "# integer argmin r=%d g=%.6f", best_int,
                    growth_factor(best_int).g);
      std::cout << buf << "\n";
      std::snprintf(buf, sizeof buf, "# real argmin r=%.6f g=%.6f", m.r, m.g);
      std::cout << buf << "\n";
    });
  });

  for (auto* sc : app.get_subcommands({})) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return exit_code;
}
