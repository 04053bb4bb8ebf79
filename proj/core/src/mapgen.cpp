#include "splab/mapgen.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace splab {

namespace {

// All exponent tuples of length n with total degree <= maxdeg, ascending
// tuple order.
void enumerate_indices(int n, int maxdeg, std::vector<int>& cur,
                       std::vector<MultiIndex>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(MultiIndex(cur));
    return;
  }
  int used = 0;
  for (int e : cur) used += e;
  for (int e = 0; e <= maxdeg - used; ++e) {
    cur.push_back(e);
    enumerate_indices(n, maxdeg, cur, out);
    cur.pop_back();
  }
}

}  // namespace

PolyMap random_polymap(const GenConfig& cfg) {
  if (cfg.n < 1 || cfg.m < 1) {
    throw ParameterError("random_polymap: dimensions must be positive");
  }
  if (cfg.maxdeg < 0) {
    throw ParameterError("random_polymap: maxdeg must be >= 0");
  }
  if (!(cfg.margin > 0.0 && cfg.margin < 1.0)) {
    throw ParameterError("random_polymap: margin must lie in (0,1)");
  }

  // Recursion emits tuples in ascending order, which fixes the draw order.
  std::vector<MultiIndex> indices;
  std::vector<int> cur;
  enumerate_indices(cfg.n, cfg.maxdeg, cur, indices);

  SplitMix64 rng(cfg.seed);
  std::vector<std::pair<MultiIndex, CVector>> terms;
  terms.reserve(indices.size());
  double abs_sum = 0.0;
  for (const MultiIndex& alpha : indices) {
    CVector coeff(cfg.m);
    for (int c = 0; c < cfg.m; ++c) {
      const double re = rng.next_symmetric();
      const double im = rng.next_symmetric();
      coeff[c] = Complex(re, im);
    }
    abs_sum += coeff.norm();
    terms.emplace_back(alpha, std::move(coeff));
  }
  if (abs_sum <= 0.0) {
    throw EvaluationError("random_polymap: degenerate zero draw");
  }
  const double scale = (1.0 - cfg.margin) / abs_sum;
  for (auto& [alpha, coeff] : terms) coeff *= scale;
  return make_polymap(cfg.n, cfg.m, std::move(terms));
}

MapHandle eq28_equality_map(const std::vector<Complex>& p,
                            const std::vector<CVector>& v) {
  const int n = static_cast<int>(p.size());
  if (n < 1) throw ParameterError("eq28_equality_map: empty parameter list");
  if (static_cast<int>(v.size()) != n) {
    throw ParameterError(
        "eq28_equality_map: need one direction per coordinate");
  }
  for (const Complex& pj : p) {
    if (!(std::abs(pj) < 1.0)) {
      throw ParameterError("eq28_equality_map: |p_j| must be < 1");
    }
  }
  const Eigen::Index m = v.front().size();
  double sq = 0.0;
  for (int i = 0; i < n; ++i) {
    if (v[static_cast<size_t>(i)].size() != m) {
      throw ParameterError("eq28_equality_map: direction length mismatch");
    }
    sq += v[static_cast<size_t>(i)].squaredNorm();
    for (int k = i + 1; k < n; ++k) {
      if (std::abs(hermitian_inner(v[static_cast<size_t>(i)],
                                   v[static_cast<size_t>(k)])) > 1e-10) {
        throw ParameterError(
            "eq28_equality_map: directions must be pairwise orthogonal");
      }
    }
  }
  if (std::abs(sq - 1.0) > 1e-10) {
    throw ParameterError(
        "eq28_equality_map: direction square-sums must total 1");
  }

  // base(w) = sum_j v_j w_j, so base composed with the Moebius transport
  // is exactly the target map.
  std::vector<std::pair<MultiIndex, CVector>> terms;
  for (int j = 0; j < n; ++j) {
    terms.emplace_back(MultiIndex::unit(n, j), v[static_cast<size_t>(j)]);
  }
  MapHandle base = make_map(make_polymap(n, static_cast<int>(m), std::move(terms)));
  return compose_moebius(std::move(base), p);
}

std::pair<MapHandle, MapHandle> first_order_twin_pair() {
  return {catalog("remark3-g"), catalog("remark3-gtilde")};
}

ScanResult scan_sharpness(const MapHandle& map, const SamplerSpec& sampler,
                          double tol) {
  if (!map) throw ParameterError("scan_sharpness: null map handle");
  std::vector<PolydiskPoint> points;
  if (sampler.kind == SamplerKind::kGrid) {
    points = grid_points(map->n);
  } else {
    if (sampler.count < 1) {
      throw ParameterError("scan_sharpness: random sampler needs count >= 1");
    }
    SplitMix64 rng(sampler.seed);
    points.reserve(static_cast<size_t>(sampler.count));
    for (int k = 0; k < sampler.count; ++k) {
      points.push_back(random_interior_point(map->n, rng));
    }
  }

  ScanResult result;
  result.samples = static_cast<int>(points.size());
  result.worst_ratio = -std::numeric_limits<double>::infinity();
  for (const PolydiskPoint& z : points) {
    const CheckReport r = (map->m == 1) ? check_scalar_polydisk(map, z, tol)
                                        : check_polydisk_ball(map, z, tol);
    const double ratio = r.lhs / r.rhs;
    if (ratio > result.worst_ratio) {
      result.worst_ratio = ratio;
      result.argmax = z;
    }
  }
  return result;
}

PolydiskPoint random_interior_point(int n, SplitMix64& rng, double margin) {
  if (n < 1) throw ParameterError("random_interior_point: n must be positive");
  if (!(margin > 0.0 && margin < 1.0)) {
    throw ParameterError("random_interior_point: margin must lie in (0,1)");
  }
  CVector z(n);
  for (int j = 0; j < n; ++j) {
    const double r = (1.0 - margin) * std::sqrt(rng.next_unit());
    const double th = 2.0 * std::numbers::pi * rng.next_unit();
    z[j] = Complex(r * std::cos(th), r * std::sin(th));
  }
  return PolydiskPoint(std::move(z));
}

std::vector<PolydiskPoint> grid_points(int n) {
  if (n < 1) throw ParameterError("grid_points: n must be positive");
  std::vector<Complex> ring;
  ring.push_back(0.0);
  for (double r : {0.3, 0.6, 0.9}) {
    for (int k = 0; k < 8; ++k) {
      const double th = 2.0 * std::numbers::pi * k / 8.0;
      ring.push_back(Complex(r * std::cos(th), r * std::sin(th)));
    }
  }
  std::vector<PolydiskPoint> out;
  CVector z(n);
  std::vector<size_t> digit(static_cast<size_t>(n), 0);
  while (true) {
    for (int j = 0; j < n; ++j) z[j] = ring[digit[static_cast<size_t>(j)]];
    out.push_back(PolydiskPoint(z));
    int j = 0;
    while (j < n && ++digit[static_cast<size_t>(j)] == ring.size()) {
      digit[static_cast<size_t>(j)] = 0;
      ++j;
    }
    if (j == n) break;
  }
  return out;
}

}  // namespace splab
