#pragma once

#include <vector>

#include "splab/holomap.hpp"
#include "splab/types.hpp"

namespace splab {

/// Below this value norm the modulus gradient switches to the
/// operator-norm branch. Exact-zero detection only; no blending.
inline constexpr double kZeroValueThreshold = 1e-12;

enum class GradBranch { kNonzeroValue, kZeroValue };

struct GradResult {
  double value = 0.0;
  GradBranch branch = GradBranch::kNonzeroValue;
};

/// Largest singular value. Power iteration on A^H A with two deterministic
/// starts (all-ones and the basis vector of the largest column), 200
/// iterations or relative change < 1e-13, floored by the largest
/// column/row norm. Intended for small dense matrices.
double operator_2norm(const CMatrix& a);

/// Modulus-gradient quantities from a precomputed value/Jacobian pair.
/// Full gradient: |(<f'_1,f>,...,<f'_n,f>)| / |f| when |f| is above the
/// zero threshold, else the operator 2-norm of the Jacobian.
GradResult grad_modulus_from(const CVector& value, const CMatrix& jac);

/// Per-coordinate variant (0-based j): |<f'_j,f>| / |f| above the
/// threshold, else the j-th column norm.
GradResult grad_j_modulus_from(const CVector& value, const CMatrix& jac,
                               int j);

GradResult grad_modulus(const MapHandle& map, const PolydiskPoint& z);
GradResult grad_j_modulus(const MapHandle& map, const PolydiskPoint& z,
                          int j);

/// All per-coordinate results from one evaluation of the map.
std::vector<GradResult> grad_all_coordinates(const MapHandle& map,
                                             const PolydiskPoint& z);

/// Sampling plan for the definitional finite-difference oracle.
/// Invariants: t_schedule positive and strictly decreasing,
/// direction_samples >= 8.
struct OracleConfig {
  int direction_samples = 64;
  std::vector<double> t_schedule = {1e-4, 1e-5, 1e-6};
};

/// One-sided quotient (|f|(z + t*beta) - |f|(z)) / t for a unit direction.
/// Throws StepError when the stepped point leaves the open polydisk.
double directional_quotient(const MapHandle& map, const PolydiskPoint& z,
                            const CVector& beta, double t);

/// Definitional oracle for the full gradient: max over sampled unit
/// directions (coordinate phase fans plus the analytic maximizer) of the
/// extrapolated quotient over the t schedule. Requires the point to be
/// interior with margin greater than the largest t.
double grad_modulus_oracle(const MapHandle& map, const PolydiskPoint& z,
                           const OracleConfig& cfg = {});

/// Oracle with the perturbation confined to coordinate j (0-based).
double grad_j_modulus_oracle(const MapHandle& map, const PolydiskPoint& z,
                             int j, const OracleConfig& cfg = {});

}  // namespace splab
