#include "splab/coefficients.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace splab {

namespace {

// Tensor-grid average of |f|^2 with per-point evaluation; used for the
// composed/rational kinds.
double mean_generic(const MapHandle& map, double sigma, int N) {
  const int n = map->n;
  std::vector<Complex> ring(static_cast<size_t>(N));
  for (int k = 0; k < N; ++k) {
    const double th = 2.0 * std::numbers::pi * k / N;
    ring[static_cast<size_t>(k)] =
        Complex(sigma * std::cos(th), sigma * std::sin(th));
  }
  CVector z(n);
  std::vector<int> digit(static_cast<size_t>(n), 0);
  double acc = 0.0;
  std::uint64_t count = 0;
  while (true) {
    for (int j = 0; j < n; ++j) z[j] = ring[static_cast<size_t>(digit[static_cast<size_t>(j)])];
    acc += evaluate_at(map, z).squaredNorm();
    ++count;
    int j = 0;
    while (j < n && ++digit[static_cast<size_t>(j)] == N) {
      digit[static_cast<size_t>(j)] = 0;
      ++j;
    }
    if (j == n) break;
  }
  return acc / static_cast<double>(count);
}

// Polynomial fast path: phase-indexed power tables once, then an
// allocation-free odometer sweep. Same trapezoid sum as mean_generic.
double mean_poly(const PolyMap& pm, double sigma, int N) {
  const int n = pm.n;
  std::vector<int> maxexp(static_cast<size_t>(n), 0);
  for (const auto& [alpha, coeff] : pm.terms) {
    for (int j = 0; j < n; ++j) {
      maxexp[static_cast<size_t>(j)] =
          std::max(maxexp[static_cast<size_t>(j)], alpha[j]);
    }
  }
  // pow[j][k][e] = (sigma e^{2 pi i k / N})^e
  std::vector<std::vector<std::vector<Complex>>> pow(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    auto& pj = pow[static_cast<size_t>(j)];
    pj.resize(static_cast<size_t>(N));
    for (int k = 0; k < N; ++k) {
      const double th = 2.0 * std::numbers::pi * k / N;
      const Complex w(sigma * std::cos(th), sigma * std::sin(th));
      auto& pk = pj[static_cast<size_t>(k)];
      pk.resize(static_cast<size_t>(maxexp[static_cast<size_t>(j)]) + 1);
      pk[0] = 1.0;
      for (size_t e = 1; e < pk.size(); ++e) pk[e] = pk[e - 1] * w;
    }
  }

  CVector value(pm.m);
  std::vector<int> digit(static_cast<size_t>(n), 0);
  double acc = 0.0;
  std::uint64_t count = 0;
  while (true) {
    value.setZero();
    for (const auto& [alpha, coeff] : pm.terms) {
      Complex mono = 1.0;
      for (int j = 0; j < n; ++j) {
        mono *= pow[static_cast<size_t>(j)]
                   [static_cast<size_t>(digit[static_cast<size_t>(j)])]
                   [static_cast<size_t>(alpha[j])];
      }
      value += mono * coeff;
    }
    acc += value.squaredNorm();
    ++count;
    int j = 0;
    while (j < n && ++digit[static_cast<size_t>(j)] == N) {
      digit[static_cast<size_t>(j)] = 0;
      ++j;
    }
    if (j == n) break;
  }
  return acc / static_cast<double>(count);
}

std::string format_sigma(double sigma) {
  std::ostringstream os;
  os << sigma;
  return os.str();
}

}  // namespace

CoeffSummary coeff_sq_sum(const PolyMap& pm) {
  CoeffSummary s;
  for (const auto& [alpha, coeff] : pm.terms) {
    const double part = coeff.squaredNorm();
    s.sq_sum += part;
    s.by_degree[alpha.degree()] += part;
  }
  return s;
}

TorusQuadrature integral_mean_sq(const MapHandle& map, double sigma, int N) {
  if (!map) throw ParameterError("integral_mean_sq: null map handle");
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw ParameterError("integral_mean_sq: sigma must lie in (0,1)");
  }
  if (N < 4) throw ParameterError("integral_mean_sq: N must be >= 4");
  double value;
  if (const PolyMap* pm = std::get_if<PolyMap>(&map->kind)) {
    value = mean_poly(*pm, sigma, N);
  } else {
    value = mean_generic(map, sigma, N);
  }
  return {sigma, N, value};
}

double series_mean_sq(const PolyMap& pm, double sigma) {
  double acc = 0.0;
  for (const auto& [alpha, coeff] : pm.terms) {
    acc += coeff.squaredNorm() * std::pow(sigma, 2.0 * alpha.degree());
  }
  return acc;
}

std::vector<CheckReport> check_coefficient_bound(const PolyMap& pm) {
  std::vector<CheckReport> out;
  const PolydiskPoint origin = PolydiskPoint::origin(pm.n);
  const CoeffSummary summary = coeff_sq_sum(pm);

  CheckReport bound;
  bound.name = "coeff-bound";
  bound.lhs = summary.sq_sum;
  bound.rhs = 1.0;
  bound.slack = bound.rhs - bound.lhs;
  bound.passed = bound.slack >= -kDefaultCheckTol;
  bound.point = origin;
  out.push_back(bound);

  const MapHandle handle = make_map(pm);
  const std::vector<double> sigmas = {0.3, 0.6, 0.9};
  std::vector<double> means;
  for (double sigma : sigmas) {
    const double quad = integral_mean_sq(handle, sigma, 64).value;
    const double series = series_mean_sq(pm, sigma);
    means.push_back(quad);
    CheckReport r;
    r.name = "parseval-sigma-" + format_sigma(sigma);
    r.lhs = std::abs(quad - series);
    r.rhs = tol::kQuadrature;
    r.slack = r.rhs - r.lhs;
    r.passed = r.slack >= 0.0;
    r.point = origin;
    out.push_back(r);
  }

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
  out.push_back(mono);
  return out;
}

}  // namespace splab
