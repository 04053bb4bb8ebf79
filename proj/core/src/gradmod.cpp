#include "splab/gradmod.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace splab {

namespace {

double power_iterate(const CMatrix& b, CVector v) {
  const double vn = v.norm();
  if (vn == 0.0) return 0.0;
  v /= vn;
  double prev = 0.0;
  for (int it = 0; it < 200; ++it) {
    CVector w = b * v;
    const double wn = w.norm();
    if (wn == 0.0) return 0.0;
    v = w / wn;
    const double est = std::real(hermitian_inner(b * v, v));
    if (it > 0 && std::abs(est - prev) <= 1e-13 * std::max(est, 1.0)) {
      prev = est;
      break;
    }
    prev = est;
  }
  return std::sqrt(std::max(prev, 0.0));
}

void require_coordinate(const MapHandle& map, int j) {
  if (j < 0 || j >= map->n) {
    throw ParameterError("coordinate index " + std::to_string(j) +
                         " out of range for domain dimension " +
                         std::to_string(map->n));
  }
}

// Quotient extrapolation: the value at the smallest t whose quotient
// differs from the next-larger t's by < 1e-3; the smallest t wins when no
// pair settles.
double extrapolate(const std::vector<double>& q) {
  for (size_t k = q.size(); k-- > 1;) {
    if (std::abs(q[k] - q[k - 1]) < 1e-3) return q[k];
  }
  return q.back();
}

void validate_oracle(const OracleConfig& cfg) {
  if (cfg.direction_samples < 8) {
    throw ParameterError("oracle: direction_samples must be >= 8");
  }
  if (cfg.t_schedule.empty()) {
    throw ParameterError("oracle: empty t schedule");
  }
  double prev = std::numeric_limits<double>::infinity();
  for (double t : cfg.t_schedule) {
    if (!(t > 0.0) || t >= prev) {
      throw ParameterError(
          "oracle: t schedule must be positive and strictly decreasing");
    }
    prev = t;
  }
}

void require_step_margin(const MapHandle& map, const PolydiskPoint& z,
                         double t_max) {
  if (z.dim() != map->n) {
    throw DimensionError("oracle: point dimension mismatch");
  }
  for (int j = 0; j < z.dim(); ++j) {
    if (std::abs(z[j]) >= 1.0 - t_max) {
      throw StepError(
          "oracle: point too close to the boundary for the step schedule");
    }
  }
}

double extrapolated_quotient(const MapHandle& map, const PolydiskPoint& z,
                             double base_mod, const CVector& beta,
                             const std::vector<double>& ts) {
  std::vector<double> q;
  q.reserve(ts.size());
  for (double t : ts) {
    const CVector stepped = z.coords() + t * beta;
    q.push_back((evaluate_at(map, stepped).norm() - base_mod) / t);
  }
  return extrapolate(q);
}

}  // namespace

double operator_2norm(const CMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  const CMatrix b = a.adjoint() * a;

  double floor = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    floor = std::max(floor, a.col(j).norm());
  }
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    floor = std::max(floor, a.row(i).norm());
  }

  // All-ones can be an exact non-dominant eigenvector, so a second start
  // aligned with the heaviest column backs it up.
  double best = power_iterate(b, CVector::Ones(a.cols()));
  Eigen::Index jmax = 0;
  double cmax = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    if (a.col(j).norm() > cmax) {
      cmax = a.col(j).norm();
      jmax = j;
    }
  }
  CVector e = CVector::Zero(a.cols());
  e[jmax] = 1.0;
  best = std::max(best, power_iterate(b, std::move(e)));
  return std::max(best, floor);
}

GradResult grad_modulus_from(const CVector& value, const CMatrix& jac) {
  const double fn = value.norm();
  if (fn > kZeroValueThreshold) {
    double sq = 0.0;
    for (Eigen::Index j = 0; j < jac.cols(); ++j) {
      sq += std::norm(hermitian_inner(jac.col(j), value));
    }
    return {std::sqrt(sq) / fn, GradBranch::kNonzeroValue};
  }
  return {operator_2norm(jac), GradBranch::kZeroValue};
}

GradResult grad_j_modulus_from(const CVector& value, const CMatrix& jac,
                               int j) {
  if (j < 0 || j >= jac.cols()) {
    throw ParameterError("grad_j_modulus_from: coordinate index out of range");
  }
  const double fn = value.norm();
  if (fn > kZeroValueThreshold) {
    return {std::abs(hermitian_inner(jac.col(j), value)) / fn,
            GradBranch::kNonzeroValue};
  }
  return {jac.col(j).norm(), GradBranch::kZeroValue};
}

GradResult grad_modulus(const MapHandle& map, const PolydiskPoint& z) {
  return grad_modulus_from(evaluate(map, z), jacobian(map, z));
}

GradResult grad_j_modulus(const MapHandle& map, const PolydiskPoint& z,
                          int j) {
  require_coordinate(map, j);
  return grad_j_modulus_from(evaluate(map, z), jacobian(map, z), j);
}

std::vector<GradResult> grad_all_coordinates(const MapHandle& map,
                                             const PolydiskPoint& z) {
  const CVector value = evaluate(map, z);
  const CMatrix jac = jacobian(map, z);
  std::vector<GradResult> out;
  out.reserve(static_cast<size_t>(map->n));
  for (int j = 0; j < map->n; ++j) {
    out.push_back(grad_j_modulus_from(value, jac, j));
  }
  return out;
}

double directional_quotient(const MapHandle& map, const PolydiskPoint& z,
                            const CVector& beta, double t) {
  if (beta.size() != map->n) {
    throw DimensionError("directional_quotient: direction length mismatch");
  }
  if (!(t > 0.0)) {
    throw ParameterError("directional_quotient: t must be positive");
  }
  if (std::abs(beta.norm() - 1.0) > 1e-9) {
    throw ParameterError("directional_quotient: direction must be unit");
  }
  const CVector stepped = z.coords() + t * beta;
  for (Eigen::Index j = 0; j < stepped.size(); ++j) {
    if (!(std::abs(stepped[j]) < 1.0)) {
      throw StepError("directional_quotient: step leaves the polydisk");
    }
  }
  const double base = evaluate(map, z).norm();
  return (evaluate_at(map, stepped).norm() - base) / t;
}

double grad_modulus_oracle(const MapHandle& map, const PolydiskPoint& z,
                           const OracleConfig& cfg) {
  validate_oracle(cfg);
  require_step_margin(map, z, cfg.t_schedule.front());

  const int n = map->n;
  const CVector f0 = evaluate(map, z);
  const double base_mod = f0.norm();

  std::vector<CVector> dirs;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < cfg.direction_samples; ++k) {
      const double th = 2.0 * std::numbers::pi * k / cfg.direction_samples;
      CVector beta = CVector::Zero(n);
      beta[j] = Complex(std::cos(th), std::sin(th));
      dirs.push_back(std::move(beta));
    }
  }
  if (base_mod > kZeroValueThreshold) {
    // Analytic maximizer of the first-order term, so the sampled sup is
    // not a systematic underestimate.
    const CMatrix jac = jacobian(map, z);
    CVector beta(n);
    for (int j = 0; j < n; ++j) {
      beta[j] = std::conj(hermitian_inner(jac.col(j), f0));
    }
    const double bn = beta.norm();
    if (bn > 0.0) dirs.push_back(beta / bn);
  } else {
    // Top right singular vector from an independent decomposition.
    const CMatrix jac = jacobian(map, z);
    Eigen::JacobiSVD<CMatrix> svd(jac, Eigen::ComputeThinV);
    if (svd.matrixV().cols() > 0) dirs.push_back(svd.matrixV().col(0));
  }

  double best = -std::numeric_limits<double>::infinity();
  for (const CVector& beta : dirs) {
    best = std::max(
        best, extrapolated_quotient(map, z, base_mod, beta, cfg.t_schedule));
  }
  return best;
}

double grad_j_modulus_oracle(const MapHandle& map, const PolydiskPoint& z,
                             int j, const OracleConfig& cfg) {
  validate_oracle(cfg);
  require_coordinate(map, j);
  require_step_margin(map, z, cfg.t_schedule.front());

  const int n = map->n;
  const CVector f0 = evaluate(map, z);
  const double base_mod = f0.norm();

  std::vector<Complex> phases;
  for (int k = 0; k < cfg.direction_samples; ++k) {
    const double th = 2.0 * std::numbers::pi * k / cfg.direction_samples;
    phases.emplace_back(std::cos(th), std::sin(th));
  }
  if (base_mod > kZeroValueThreshold) {
    const CMatrix jac = jacobian(map, z);
    const Complex c = hermitian_inner(jac.col(j), f0);
    if (std::abs(c) > 0.0) phases.push_back(std::conj(c) / std::abs(c));
  }

  double best = -std::numeric_limits<double>::infinity();
  for (const Complex& ph : phases) {
    CVector beta = CVector::Zero(n);
    beta[j] = ph;
    best = std::max(
        best, extrapolated_quotient(map, z, base_mod, beta, cfg.t_schedule));
  }
  return best;
}

}  // namespace splab
