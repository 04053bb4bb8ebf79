#pragma once

#include <map>
#include <vector>

#include "splab/holomap.hpp"
#include "splab/inequalities.hpp"

namespace splab {

/// Mean of |f|^2 over the torus {|z_j| = sigma for all j}, approximated by
/// the equispaced trapezoid rule with N points per coordinate. Exact (to
/// fp) for polynomials once N exceeds twice the max per-coordinate degree.
struct TorusQuadrature {
  double sigma = 0.0;
  int points_per_dim = 0;
  double value = 0.0;
};

struct CoeffSummary {
  double sq_sum = 0.0;                // sum over terms of |a_alpha|^2
  std::map<int, double> by_degree;    // total degree -> partial sum
};

CoeffSummary coeff_sq_sum(const PolyMap& pm);

TorusQuadrature integral_mean_sq(const MapHandle& map, double sigma, int N);

/// sum_alpha |a_alpha|^2 sigma^(2|alpha|): what the torus mean of |f|^2
/// equals for a polynomial map.
double series_mean_sq(const PolyMap& pm, double sigma);

/// Reports, in order: "coeff-bound" (sq_sum vs 1, tol 1e-9);
/// "parseval-sigma-S" for S in {0.3, 0.6, 0.9} (|quadrature - series| vs
/// 1e-8, N = 64); "mean-monotone" (largest decrease between consecutive
/// sigmas vs 0).
std::vector<CheckReport> check_coefficient_bound(const PolyMap& pm);

}  // namespace splab
