#pragma once

#include <Eigen/Core>
#include <complex>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace splab {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Tolerance conventions, used consistently across the library and tests:
// algebraic identities 1e-12, torus quadrature 1e-8, finite-difference
// oracles 1e-3.
namespace tol {
inline constexpr double kAlgebraic = 1e-12;
inline constexpr double kQuadrature = 1e-8;
inline constexpr double kOracle = 1e-3;
}  // namespace tol

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class StepError : public Error {
 public:
  using Error::Error;
};

bool all_finite(const CVector& v);

/// Hermitian inner product <z,w> = z_1 conj(w_1) + ... + z_k conj(w_k),
/// conjugate-linear in the second slot.
Complex hermitian_inner(const CVector& z, const CVector& w);

/// Euclidean norm |z| = <z,z>^{1/2}.
double norm(const CVector& z);

/// true iff max_j |z_j| <= 1 - margin. margin must lie in [0,1).
bool in_polydisk(const CVector& z, double margin = 0.0);

/// Exponent tuple alpha = (alpha_1,...,alpha_n) indexing the monomial
/// z^alpha = z_1^{alpha_1} ... z_n^{alpha_n}. Entries are nonnegative.
struct MultiIndex {
  std::vector<int> exponents;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e);

  static MultiIndex zero(int n);
  static MultiIndex unit(int n, int j);

  int size() const { return static_cast<int>(exponents.size()); }
  int degree() const;
  int operator[](int j) const { return exponents[static_cast<size_t>(j)]; }

  auto operator<=>(const MultiIndex&) const = default;
};

/// Point of the open polydisk D^n; every coordinate satisfies |z_j| < 1
/// strictly, enforced at construction.
class PolydiskPoint {
 public:
  PolydiskPoint() : coords_(0) {}
  explicit PolydiskPoint(CVector coords);

  static PolydiskPoint origin(int n);

  int dim() const { return static_cast<int>(coords_.size()); }
  const CVector& coords() const { return coords_; }
  Complex operator[](int j) const { return coords_[j]; }

 private:
  CVector coords_;
};

}  // namespace splab
