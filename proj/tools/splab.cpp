// Command-line front end: loads catalog or file maps, runs inequality
// checks, oracle agreement, coefficient diagnostics, sharpness scans, and
// random map generation. JSON-lines reports on stdout, run manifest on
// stderr. Exit codes: 0 all checks passed, 1 a check failed, 2 bad input.

#include <charconv>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "splab/coefficients.hpp"
#include "splab/gradmod.hpp"
#include "splab/holomap.hpp"
#include "splab/inequalities.hpp"
#include "splab/map_json.hpp"
#include "splab/mapgen.hpp"
#include "splab/rng.hpp"
#include "splab/types.hpp"

namespace {

using nlohmann::ordered_json;
using namespace splab;

std::uint64_t default_seed() {
  const char* env = std::getenv("SPLAB_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t value = 0;
  const char* end = env + std::string_view(env).size();
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParameterError(std::string("SPLAB_SEED is not an unsigned integer: ") + env);
  }
  return value;
}

std::string format_real(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

MapHandle resolve_source(const std::string& source) {
  constexpr std::string_view prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) {
    return catalog(source.substr(prefix.size()));
  }
  return load_map_file(source);
}

ordered_json point_to_json(const PolydiskPoint& z) {
  ordered_json arr = ordered_json::array();
  for (int j = 0; j < z.dim(); ++j) {
    arr.push_back(ordered_json::array({z[j].real(), z[j].imag()}));
  }
  return arr;
}

std::string point_to_csv(const PolydiskPoint& z) {
  std::string out;
  for (int j = 0; j < z.dim(); ++j) {
    if (j > 0) out += ';';
    const double re = z[j].real(), im = z[j].imag();
    out += std::to_string(re);
    out += (im < 0 ? "" : "+");
    out += std::to_string(im);
    out += "i";
  }
  return out;
}

class Emitter {
 public:
  explicit Emitter(bool csv) : csv_(csv) {}

  void emit(const CheckReport& r) {
    if (csv_) {
      if (!header_done_) {
        std::cout << "name,lhs,rhs,slack,branch,point,passed,informational\n";
        header_done_ = true;
      }
      std::cout << r.name << ',' << r.lhs << ',' << r.rhs << ',' << r.slack
                << ',' << r.branch << ',' << point_to_csv(r.point) << ','
                << (r.passed ? "true" : "false") << ','
                << (r.informational ? "true" : "false") << '\n';
    } else {
      ordered_json line;
      line["name"] = r.name;
      line["lhs"] = r.lhs;
      line["rhs"] = r.rhs;
      line["slack"] = r.slack;
      line["branch"] = r.branch;
      line["point"] = point_to_json(r.point);
      line["passed"] = r.passed;
      line["informational"] = r.informational;
      std::cout << line.dump() << '\n';
    }
    if (!r.passed && !r.informational) any_failed_ = true;
  }

  bool any_failed() const { return any_failed_; }

 private:
  bool csv_ = false;
  bool header_done_ = false;
  bool any_failed_ = false;
};

void emit_manifest(const std::string& command, const std::string& source,
                   const std::string& sampler, std::uint64_t seed,
                   double tol) {
  char stamp[32];
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  ordered_json m;
  m["command"] = command;
  m["map_source"] = source;
  m["sampler"] = sampler;
  m["seed"] = seed;
  m["tol"] = tol;
  m["timestamp"] = stamp;
  std::cerr << m.dump() << '\n';
}

struct PointSpec {
  enum class Kind { kOrigin, kGrid, kRandom } kind = Kind::kOrigin;
  int count = 100;
};

PointSpec parse_points_flag(const std::vector<std::string>& words) {
  PointSpec spec;
  if (words.empty()) return spec;
  if (words[0] == "origin") {
    if (words.size() != 1) throw ParameterError("--points origin takes no count");
    spec.kind = PointSpec::Kind::kOrigin;
  } else if (words[0] == "grid") {
    if (words.size() != 1) throw ParameterError("--points grid takes no count");
    spec.kind = PointSpec::Kind::kGrid;
  } else if (words[0] == "random") {
    spec.kind = PointSpec::Kind::kRandom;
    if (words.size() == 2) {
      int k = 0;
      const auto& w = words[1];
      auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), k);
      if (ec != std::errc() || ptr != w.data() + w.size() || k < 1) {
        throw ParameterError("--points random needs a positive count");
      }
      spec.count = k;
    }
  } else {
    throw ParameterError("--points must be origin, grid, or random [K]");
  }
  return spec;
}

std::vector<PolydiskPoint> make_points(const PointSpec& spec, int n,
                                       std::uint64_t seed) {
  switch (spec.kind) {
    case PointSpec::Kind::kOrigin:
      return {PolydiskPoint::origin(n)};
    case PointSpec::Kind::kGrid:
      return grid_points(n);
    case PointSpec::Kind::kRandom: {
      SplitMix64 rng(seed);
      std::vector<PolydiskPoint> pts;
      pts.reserve(static_cast<size_t>(spec.count));
      for (int k = 0; k < spec.count; ++k) {
        pts.push_back(random_interior_point(n, rng));
      }
      return pts;
    }
  }
  return {};
}

std::string sampler_label(const PointSpec& spec) {
  switch (spec.kind) {
    case PointSpec::Kind::kOrigin:
      return "origin";
    case PointSpec::Kind::kGrid:
      return "grid";
    case PointSpec::Kind::kRandom:
      return "random:" + std::to_string(spec.count);
  }
  return "?";
}

CheckReport run_named_check(const std::string& name, const MapHandle& map,
                            const PolydiskPoint& z, double tol) {
  if (name == "classical") return check_classical(map, z, tol);
  if (name == "disk-ball") return check_disk_to_ball(map, z, tol);
  if (name == "scalar-polydisk") return check_scalar_polydisk(map, z, tol);
  if (name == "polydisk-ball") return check_polydisk_ball(map, z, tol);
  if (name == "eq28-everywhere") return check_eq28_everywhere(map, z, tol);
  if (name == "naive-eq3") return naive_eq3_report(map, z, tol);
  if (name == "naive-eq6") return naive_eq6_report(map, z, tol);
  if (name == "naive-eq7") return naive_eq7_report(map, z, tol);
  throw ParameterError("unknown check name: " + name);
}

int run_verify(const std::string& source, const PointSpec& spec,
               std::uint64_t seed, double tol, const std::string& check_name,
               bool csv) {
  const MapHandle map = resolve_source(source);
  emit_manifest("verify", source, sampler_label(spec), seed, tol);
  Emitter out(csv);
  for (const PolydiskPoint& z : make_points(spec, map->n, seed)) {
    if (!check_name.empty()) {
      out.emit(run_named_check(check_name, map, z, tol));
      continue;
    }
    const CheckReport primary = check_auto(map, z, tol);
    out.emit(primary);
    if (map->n == 1 && map->m >= 2) {
      out.emit(naive_eq3_report(map, z, tol));
    } else if (map->m >= 2 && primary.branch == "eq8") {
      out.emit(naive_eq6_report(map, z, tol));
    }
  }
  return out.any_failed() ? 1 : 0;
}

int run_oracle_check(const std::string& source, int count, std::uint64_t seed,
                     bool csv) {
  if (count < 1) throw ParameterError("oracle-check: count must be >= 1");
  const MapHandle map = resolve_source(source);
  emit_manifest("oracle-check", source, "random:" + std::to_string(count),
                seed, tol::kOracle);
  Emitter out(csv);
  SplitMix64 rng(seed);
  const OracleConfig cfg;
  int accepted = 0;
  // Points with tiny nonzero values sit between the two branch formulas,
  // so they are skipped rather than compared.
  for (int attempts = 0; accepted < count && attempts < 50 * count;
       ++attempts) {
    const PolydiskPoint z = random_interior_point(map->n, rng);
    const double fn = evaluate(map, z).norm();
    if (fn > 0.0 && fn < 1e-8) continue;
    ++accepted;

    const GradResult closed = grad_modulus(map, z);
    const double oracle = grad_modulus_oracle(map, z, cfg);
    CheckReport r;
    r.name = "oracle-grad";
    r.lhs = std::abs(closed.value - oracle);
    r.rhs = tol::kOracle;
    r.slack = r.rhs - r.lhs;
    r.passed = r.slack >= 0.0;
    r.branch = closed.branch == GradBranch::kZeroValue ? "zero-value"
                                                       : "nonzero-value";
    r.point = z;
    out.emit(r);

    for (int j = 0; j < map->n; ++j) {
      const GradResult cj = grad_j_modulus(map, z, j);
      const double oj = grad_j_modulus_oracle(map, z, j, cfg);
      CheckReport rj;
      rj.name = "oracle-grad-" + std::to_string(j);
      rj.lhs = std::abs(cj.value - oj);
      rj.rhs = tol::kOracle;
      rj.slack = rj.rhs - rj.lhs;
      rj.passed = rj.slack >= 0.0;
      rj.branch = cj.branch == GradBranch::kZeroValue ? "zero-value"
                                                      : "nonzero-value";
      rj.point = z;
      out.emit(rj);
    }
  }
  if (accepted < count) {
    throw EvaluationError("oracle-check: could not sample enough points away "
                          "from the branch boundary");
  }
  return out.any_failed() ? 1 : 0;
}

int quadrature_points(int n) {
  // Tensor grids above ~2^24 points get the per-axis count halved.
  int N = 64;
  auto total = [&](int cand) {
    double t = 1.0;
    for (int j = 0; j < n; ++j) t *= cand;
    return t;
  };
  while (N > 4 && total(N) > 16777216.0) N /= 2;
  if (N < 64) {
    std::cerr << "note: large domain dimension, quadrature downshifted to N="
              << N << "\n";
  }
  return N;
}

int run_coeff(const std::string& source, std::vector<double> sigmas,
              bool csv) {
  const MapHandle map = resolve_source(source);
  if (sigmas.empty()) sigmas = {0.3, 0.6, 0.9};
  for (double s : sigmas) {
    if (!(s > 0.0 && s < 1.0)) {
      throw ParameterError("coeff: sigma values must lie in (0,1)");
    }
  }
  std::string label = "sigma:";
  for (size_t i = 0; i < sigmas.size(); ++i) {
    if (i > 0) label += ',';
    label += format_real(sigmas[i]);
  }
  emit_manifest("coeff", source, label, 0, tol::kQuadrature);

  Emitter out(csv);
  const int N = quadrature_points(map->n);
  const PolydiskPoint origin = PolydiskPoint::origin(map->n);
  const PolyMap* pm = std::get_if<PolyMap>(&map->kind);

  if (pm != nullptr) {
    const CoeffSummary summary = coeff_sq_sum(*pm);
    CheckReport bound;
    bound.name = "coeff-bound";
    bound.lhs = summary.sq_sum;
    bound.rhs = 1.0;
    bound.slack = bound.rhs - bound.lhs;
    bound.passed = bound.slack >= -kDefaultCheckTol;
    bound.point = origin;
    out.emit(bound);
  }

  std::vector<double> means;
  for (double s : sigmas) {
    const double quad = integral_mean_sq(map, s, N).value;
    means.push_back(quad);
    CheckReport r;
    r.point = origin;
    if (pm != nullptr) {
      const double series = series_mean_sq(*pm, s);
      r.name = "parseval-sigma-" + format_real(s);
      r.lhs = quad;
      r.rhs = series;
      r.slack = r.rhs - r.lhs;
      r.passed = std::abs(r.slack) <= tol::kQuadrature;
    } else {
      r.name = "mean-sigma-" + format_real(s);
      r.lhs = quad;
      r.rhs = 1.0;
      r.slack = r.rhs - r.lhs;
      r.passed = r.slack >= -kDefaultCheckTol;
    }
    out.emit(r);
  }

  if (means.size() >= 2) {
    double worst_drop = 0.0;
    for (size_t k = 1; k < means.size(); ++k) {
      worst_drop = std::max(worst_drop, means[k - 1] - means[k]);
    }
    CheckReport mono;
    mono.name = "mean-monotone";
    mono.lhs = worst_drop;
    mono.rhs = 0.0;
    mono.slack = -worst_drop;
    mono.passed = mono.slack >= -tol::kAlgebraic;
    mono.point = origin;
    out.emit(mono);
  }
  return out.any_failed() ? 1 : 0;
}

int run_scan(const std::string& source, bool grid, int random_count,
             std::uint64_t seed, double tol, bool csv) {
  const MapHandle map = resolve_source(source);
  if (grid && random_count > 0) {
    throw ParameterError("scan: --grid and --random are mutually exclusive");
  }
  SamplerSpec sampler;
  if (random_count > 0) {
    sampler.kind = SamplerKind::kRandom;
    sampler.count = random_count;
    sampler.seed = seed;
  } else {
    sampler.kind = SamplerKind::kGrid;
  }
  emit_manifest("scan", source,
                sampler.kind == SamplerKind::kGrid
                    ? "grid"
                    : "random:" + std::to_string(sampler.count),
                seed, tol);
  const ScanResult result = scan_sharpness(map, sampler, tol);
  Emitter out(csv);
  CheckReport r;
  r.name = "scan-sharpness";
  r.lhs = result.worst_ratio;
  r.rhs = 1.0;
  r.slack = r.rhs - r.lhs;
  r.passed = r.slack >= -tol;
  r.point = result.argmax;
  out.emit(r);
  return out.any_failed() ? 1 : 0;
}

int run_gen(int n, int m, int maxdeg, std::uint64_t seed, double margin,
            const std::string& out_path) {
  GenConfig cfg;
  cfg.n = n;
  cfg.m = m;
  cfg.maxdeg = maxdeg;
  cfg.seed = seed;
  cfg.margin = margin;
  const MapHandle map = make_map(random_polymap(cfg));
  emit_manifest("gen", out_path.empty() ? "(stdout)" : out_path,
                "n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                    ",maxdeg=" + std::to_string(maxdeg) +
                    ",margin=" + std::to_string(margin),
                seed, 0.0);
  if (out_path.empty()) {
    std::cout << map_to_json(map) << "\n";
  } else {
    save_map_file(map, out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schwarz-Pick inequality laboratory for holomorphic maps "
               "from the polydisk into the unit ball"};
  app.require_subcommand(1);

  std::string source;
  std::vector<std::string> points_words;
  std::optional<std::uint64_t> seed_flag;
  double tol = kDefaultCheckTol;
  std::string check_name;
  bool csv = false;

  CLI::App* verify = app.add_subcommand("verify", "Run inequality checks");
  verify->add_option("source", source, "catalog:NAME or a map file path")
      ->required();
  verify->add_option("--points", points_words,
                     "origin | grid | random [K] (default origin)")
      ->expected(1, 2);
  verify->add_option("--seed", seed_flag, "Sampling seed");
  verify->add_option("--tol", tol, "Check tolerance");
  verify
      ->add_option("--check", check_name,
                   "Force one check instead of dimension routing")
      ->check(CLI::IsMember({"classical", "disk-ball", "scalar-polydisk",
                             "polydisk-ball", "eq28-everywhere", "naive-eq3",
                             "naive-eq6", "naive-eq7"}));
  verify->add_flag("--csv", csv, "CSV output instead of JSON lines");

  int count = 100;
  CLI::App* oracle =
      app.add_subcommand("oracle-check", "Closed forms vs difference oracle");
  oracle->add_option("source", source, "catalog:NAME or a map file path")
      ->required();
  oracle->add_option("--count", count, "Points to sample");
  oracle->add_option("--seed", seed_flag, "Sampling seed");
  oracle->add_flag("--csv", csv, "CSV output instead of JSON lines");

  std::vector<double> sigmas;
  CLI::App* coeff =
      app.add_subcommand("coeff", "Coefficient sums and torus means");
  coeff->add_option("source", source, "catalog:NAME or a map file path")
      ->required();
  coeff->add_option("--sigma", sigmas, "Torus radii")->delimiter(',');
  coeff->add_flag("--csv", csv, "CSV output instead of JSON lines");

  bool grid = false;
  int random_count = 0;
  CLI::App* scan = app.add_subcommand("scan", "Worst lhs/rhs ratio sweep");
  scan->add_option("source", source, "catalog:NAME or a map file path")
      ->required();
  scan->add_flag("--grid", grid, "Tensor grid sampling (default)");
  scan->add_option("--random", random_count, "Random sampling with K points");
  scan->add_option("--seed", seed_flag, "Sampling seed");
  scan->add_option("--tol", tol, "Ratio tolerance");
  scan->add_flag("--csv", csv, "CSV output instead of JSON lines");

  CLI::App* cat = app.add_subcommand("catalog", "Built-in map catalog");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "List catalog map names");

  int gen_n = 2, gen_m = 2, gen_maxdeg = 2;
  double gen_margin = 0.05;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Write a random certified map");
  gen->add_option("--n", gen_n, "Domain dimension");
  gen->add_option("--m", gen_m, "Codomain dimension");
  gen->add_option("--maxdeg", gen_maxdeg, "Maximum total degree");
  gen->add_option("--seed", seed_flag, "Draw seed");
  gen->add_option("--margin", gen_margin, "Containment margin in (0,1)");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);

    const std::uint64_t seed = seed_flag ? *seed_flag : default_seed();
    if (*verify) {
      return run_verify(source, parse_points_flag(points_words), seed, tol,
                        check_name, csv);
    }
    if (*oracle) return run_oracle_check(source, count, seed, csv);
    if (*coeff) return run_coeff(source, sigmas, csv);
    if (*scan) return run_scan(source, grid, random_count, seed, tol, csv);
    if (*cat) {
      for (const std::string& name : catalog_names()) {
        std::cout << name << "\n";
      }
      return 0;
    }
    if (*gen) {
      return run_gen(gen_n, gen_m, gen_maxdeg, seed, gen_margin, gen_out);
    }
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const splab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
