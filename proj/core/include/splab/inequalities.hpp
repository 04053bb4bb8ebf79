#pragma once

#include <string>
#include <utility>

#include "splab/gradmod.hpp"
#include "splab/holomap.hpp"
#include "splab/types.hpp"

namespace splab {

/// Default tolerance for closed-form checks; oracle-flavored comparisons
/// use tol::kOracle instead.
inline constexpr double kDefaultCheckTol = 1e-9;

/// Uniform record for one inequality evaluation at one point.
/// Invariants: slack = rhs - lhs as computed; passed iff slack >= -tol.
/// Reports flagged informational exhibit known-false naive bounds and do
/// not count against a run's exit status.
struct CheckReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool passed = false;
  std::string branch;
  PolydiskPoint point;
  bool informational = false;
};

/// |f'(z)| <= (1 - |f(z)|^2) / (1 - |z|^2) for scalar disk maps (n = m = 1).
CheckReport check_classical(const MapHandle& map, const PolydiskPoint& z,
                            double tol = kDefaultCheckTol);

/// Full modulus gradient against (1 - |f(z)|^2) / (1 - |z|^2) for disk
/// domains (n = 1, any m).
CheckReport check_disk_to_ball(const MapHandle& map, const PolydiskPoint& z,
                               double tol = kDefaultCheckTol);

/// sum_j (1 - |z_j|^2) |f'_{z_j}(z)| <= 1 - |f(z)|^2 for scalar-valued
/// polydisk maps (m = 1).
CheckReport check_scalar_polydisk(const MapHandle& map, const PolydiskPoint& z,
                                  double tol = kDefaultCheckTol);

/// Polydisk-to-ball bound for m >= 2, branched on the value of f:
/// branch "eq8"  (f(z) nonzero): sum_j (1-|z_j|^2) grad_j <= 1 - |f(z)|^2;
/// branch "eq28" (f(z) zero):    sum_j (1-|z_j|^2)^2 grad_j^2 <= 1.
/// Refuses m = 1 rather than delegating.
CheckReport check_polydisk_ball(const MapHandle& map, const PolydiskPoint& z,
                                double tol = kDefaultCheckTol);

/// The squared-sum bound of the zero branch, evaluated on every point
/// regardless of the value of f; it holds on both branches.
CheckReport check_eq28_everywhere(const MapHandle& map, const PolydiskPoint& z,
                                  double tol = kDefaultCheckTol);

/// Dimension-routed choice: n=m=1 classical; m=1 scalar-polydisk;
/// n=1, m>=2 disk-to-ball; otherwise polydisk-ball.
CheckReport check_auto(const MapHandle& map, const PolydiskPoint& z,
                       double tol = kDefaultCheckTol);

/// Naive transplants of the scalar bounds; false in general for m >= 2,
/// so the reports are informational.
/// |f'(z)| (column norm) vs (1 - |f(z)|^2) / (1 - |z|^2), n = 1 only.
CheckReport naive_eq3_report(const MapHandle& map, const PolydiskPoint& z,
                             double tol = kDefaultCheckTol);
/// sum_j (1-|z_j|^2) |f'_{z_j}(z)| (column norms) vs 1 - |f(z)|^2.
CheckReport naive_eq6_report(const MapHandle& map, const PolydiskPoint& z,
                             double tol = kDefaultCheckTol);
/// sum_j (1-|z_j|^2) grad_j vs 1 - |f(z)|^2 with grad_j taking its own
/// branch; false when f(z) = 0.
CheckReport naive_eq7_report(const MapHandle& map, const PolydiskPoint& z,
                             double tol = kDefaultCheckTol);

/// Transport consistency: the routed report for f at p must match the
/// report at 0 for the Moebius-composed map (lhs and rhs each within
/// 1e-10). Returns (report for f at p, report for composed map at 0).
/// m = 1 maps route through the scalar-polydisk form on both sides.
std::pair<CheckReport, CheckReport> verify_reduction(
    const MapHandle& map, const PolydiskPoint& p,
    double tol = kDefaultCheckTol);

}  // namespace splab
