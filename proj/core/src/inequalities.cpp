#include "splab/inequalities.hpp"

#include <cmath>

namespace splab {

namespace {

CheckReport make_report(std::string name, double lhs, double rhs, double tol,
                        std::string branch, const PolydiskPoint& z,
                        bool informational = false) {
  CheckReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.passed = r.slack >= -tol;
  r.branch = std::move(branch);
  r.point = z;
  r.informational = informational;
  return r;
}

void require_dims(const MapHandle& map, const PolydiskPoint& z) {
  if (!map) throw ParameterError("null map handle");
  if (z.dim() != map->n) {
    throw DimensionError("check: point dimension " + std::to_string(z.dim()) +
                         ", map domain dimension " + std::to_string(map->n));
  }
}

double weight(const PolydiskPoint& z, int j) {
  return 1.0 - std::norm(z[j]);
}

}  // namespace

CheckReport check_classical(const MapHandle& map, const PolydiskPoint& z,
                            double tol) {
  require_dims(map, z);
  if (map->n != 1 || map->m != 1) {
    throw DimensionError("check_classical: requires n = 1 and m = 1");
  }
  const CVector f0 = evaluate(map, z);
  const CMatrix jac = jacobian(map, z);
  const double lhs = std::abs(jac(0, 0));
  const double rhs = (1.0 - std::norm(f0[0])) / weight(z, 0);
  return make_report("classical", lhs, rhs, tol, "", z);
}

CheckReport check_disk_to_ball(const MapHandle& map, const PolydiskPoint& z,
                               double tol) {
  require_dims(map, z);
  if (map->n != 1) {
    throw DimensionError("check_disk_to_ball: requires a disk domain (n = 1)");
  }
  const CVector f0 = evaluate(map, z);
  const CMatrix jac = jacobian(map, z);
  const GradResult g = grad_modulus_from(f0, jac);
  const double rhs = (1.0 - f0.squaredNorm()) / weight(z, 0);
  const char* branch =
      g.branch == GradBranch::kZeroValue ? "zero-value" : "nonzero-value";
  return make_report("disk-ball", g.value, rhs, tol, branch, z);
}

CheckReport check_scalar_polydisk(const MapHandle& map, const PolydiskPoint& z,
                                  double tol) {
  require_dims(map, z);
  if (map->m != 1) {
    throw DimensionError(
        "check_scalar_polydisk: requires a scalar-valued map (m = 1)");
  }
  const CVector f0 = evaluate(map, z);
  const CMatrix jac = jacobian(map, z);
  double lhs = 0.0;
  for (int j = 0; j < map->n; ++j) {
    lhs += weight(z, j) * std::abs(jac(0, j));
  }
  const double rhs = 1.0 - std::norm(f0[0]);
  return make_report("scalar-polydisk", lhs, rhs, tol, "", z);
}

CheckReport check_polydisk_ball(const MapHandle& map, const PolydiskPoint& z,
                                double tol) {
  require_dims(map, z);
  if (map->m < 2) {
    throw DimensionError(
        "check_polydisk_ball: requires codomain dimension m >= 2");
  }
  const CVector f0 = evaluate(map, z);
  const CMatrix jac = jacobian(map, z);
  if (f0.norm() > kZeroValueThreshold) {
    double lhs = 0.0;
    for (int j = 0; j < map->n; ++j) {
      lhs += weight(z, j) * grad_j_modulus_from(f0, jac, j).value;
    }
    const double rhs = 1.0 - f0.squaredNorm();
    return make_report("polydisk-ball", lhs, rhs, tol, "eq8", z);
  }
  double lhs = 0.0;
  for (int j = 0; j < map->n; ++j) {
    const double w = weight(z, j);
    const double g = grad_j_modulus_from(f0, jac, j).value;
    lhs += w * w * g * g;
  }
  return make_report("polydisk-ball", lhs, 1.0, tol, "eq28", z);
}

CheckReport check_eq28_everywhere(const MapHandle& map, const PolydiskPoint& z,
                                  double tol) {
  require_dims(map, z);
  if (map->m < 2) {
    throw DimensionError(
        "check_eq28_everywhere: requires codomain dimension m >= 2");
  }
  const CVector f0 = evaluate(map, z);
  const CMatrix jac = jacobian(map, z);
  double lhs = 0.0;
  for (int j = 0; j < map->n; ++j) {
    const double w = weight(z, j);
    const double g = grad_j_modulus_from(f0, jac, j).value;
    lhs += w * w * g * g;
  }
  return make_report("eq28-everywhere", lhs, 1.0, tol, "eq28", z);
}

CheckReport check_auto(const MapHandle& map, const PolydiskPoint& z,
                       double tol) {
  require_dims(map, z);
  if (map->n == 1 && map->m == 1) return check_classical(map, z, tol);
  if (map->m == 1) return check_scalar_polydisk(map, z, tol);
  if (map->n == 1) return check_disk_to_ball(map, z, tol);
  return check_polydisk_ball(map, z, tol);
}

CheckReport naive_eq3_report(const MapHandle& map, const PolydiskPoint& z,
                             double tol) {
  require_dims(map, z);
  if (map->n != 1) {
    throw DimensionError("naive_eq3_report: requires a disk domain (n = 1)");
  }
  const CVector f0 = evaluate(map, z);
  const CMatrix jac = jacobian(map, z);
  const double lhs = jac.col(0).norm();
  const double rhs = (1.0 - f0.squaredNorm()) / weight(z, 0);
  return make_report("naive-eq3", lhs, rhs, tol, "", z, true);
}

CheckReport naive_eq6_report(const MapHandle& map, const PolydiskPoint& z,
                             double tol) {
  require_dims(map, z);
  const CVector f0 = evaluate(map, z);
  const CMatrix jac = jacobian(map, z);
  double lhs = 0.0;
  for (int j = 0; j < map->n; ++j) {
    lhs += weight(z, j) * jac.col(j).norm();
  }
  const double rhs = 1.0 - f0.squaredNorm();
  return make_report("naive-eq6", lhs, rhs, tol, "", z, true);
}

CheckReport naive_eq7_report(const MapHandle& map, const PolydiskPoint& z,
                             double tol) {
  require_dims(map, z);
  const CVector f0 = evaluate(map, z);
  const CMatrix jac = jacobian(map, z);
  double lhs = 0.0;
  for (int j = 0; j < map->n; ++j) {
    lhs += weight(z, j) * grad_j_modulus_from(f0, jac, j).value;
  }
  const double rhs = 1.0 - f0.squaredNorm();
  return make_report("naive-eq7", lhs, rhs, tol, "", z, true);
}

std::pair<CheckReport, CheckReport> verify_reduction(const MapHandle& map,
                                                     const PolydiskPoint& p,
                                                     double tol) {
  require_dims(map, p);
  std::vector<Complex> param(static_cast<size_t>(p.dim()));
  for (int j = 0; j < p.dim(); ++j) param[static_cast<size_t>(j)] = p[j];
  const MapHandle composed = compose_moebius(map, param);
  const PolydiskPoint origin = PolydiskPoint::origin(map->n);
  if (map->m == 1) {
    return {check_scalar_polydisk(map, p, tol),
            check_scalar_polydisk(composed, origin, tol)};
  }
  return {check_polydisk_ball(map, p, tol),
          check_polydisk_ball(composed, origin, tol)};
}

}  // namespace splab
