#include "splab/types.hpp"

#include <cmath>

namespace splab {

bool all_finite(const CVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) {
      return false;
    }
  }
  return true;
}

Complex hermitian_inner(const CVector& z, const CVector& w) {
  if (z.size() != w.size()) {
    throw DimensionError("hermitian_inner: length mismatch (" +
                         std::to_string(z.size()) + " vs " +
                         std::to_string(w.size()) + ")");
  }
  // Eigen's dot() conjugates the first argument; the convention here
  // conjugates the second.
  return w.dot(z);
}

double norm(const CVector& z) { return z.norm(); }

bool in_polydisk(const CVector& z, double margin) {
  if (margin < 0.0 || margin >= 1.0) {
    throw ParameterError("in_polydisk: margin must lie in [0,1), got " +
                         std::to_string(margin));
  }
  const double limit = 1.0 - margin;
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    if (std::abs(z[j]) > limit) return false;
  }
  return true;
}

MultiIndex::MultiIndex(std::vector<int> e) : exponents(std::move(e)) {
  for (int v : exponents) {
    if (v < 0) {
      throw ParameterError("MultiIndex: exponents must be nonnegative");
    }
  }
}

MultiIndex MultiIndex::zero(int n) {
  if (n < 1) throw ParameterError("MultiIndex::zero: n must be positive");
  return MultiIndex(std::vector<int>(static_cast<size_t>(n), 0));
}

MultiIndex MultiIndex::unit(int n, int j) {
  if (n < 1) throw ParameterError("MultiIndex::unit: n must be positive");
  if (j < 0 || j >= n) {
    throw ParameterError("MultiIndex::unit: coordinate out of range");
  }
  std::vector<int> e(static_cast<size_t>(n), 0);
  e[static_cast<size_t>(j)] = 1;
  return MultiIndex(std::move(e));
}

int MultiIndex::degree() const {
  int d = 0;
  for (int v : exponents) d += v;
  return d;
}

PolydiskPoint::PolydiskPoint(CVector coords) : coords_(std::move(coords)) {
  for (Eigen::Index j = 0; j < coords_.size(); ++j) {
    if (!(std::abs(coords_[j]) < 1.0)) {
      throw ParameterError("PolydiskPoint: coordinate " + std::to_string(j) +
                           " has modulus >= 1");
    }
  }
}

PolydiskPoint PolydiskPoint::origin(int n) {
  if (n < 1) throw ParameterError("PolydiskPoint::origin: n must be positive");
  return PolydiskPoint(CVector::Zero(n));
}

}  // namespace splab
