#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "splab/types.hpp"

namespace splab {

struct MapNode;

/// Shared immutable handle; safe to copy across threads.
using MapHandle = std::shared_ptr<const MapNode>;

/// f(z) = sum_alpha a_alpha z^alpha with finitely many terms.
/// Invariants: every key has length n, every value length m, keys sorted
/// and unique.
struct PolyMap {
  int n = 0;
  int m = 0;
  std::vector<std::pair<MultiIndex, CVector>> terms;
};

/// Validates dimensions, sorts terms by exponent tuple, rejects duplicates.
PolyMap make_polymap(int n, int m,
                     std::vector<std::pair<MultiIndex, CVector>> terms);

/// numerator/denominator quotient; the denominator is scalar-valued and
/// must stay away from zero on the closed polydisk of radius
/// kDenCheckRadius (validated at construction).
struct RationalMap {
  PolyMap numerator;
  PolyMap denominator;
};

/// g(w) = base(phi(w)) with phi_j(w_j) = (p_j - w_j)/(1 - conj(p_j) w_j).
struct MoebiusComposed {
  MapHandle base;
  std::vector<Complex> p;
};

/// h(z) = <base(z), u> with |u| = 1; scalar-valued.
struct ScalarProjection {
  MapHandle base;
  CVector u;
};

struct MapNode {
  int n = 0;
  int m = 0;
  std::variant<PolyMap, RationalMap, MoebiusComposed, ScalarProjection> kind;
};

/// Denominator safety floor and the radius of the construction-time check.
inline constexpr double kDenFloor = 1e-6;
inline constexpr double kDenCheckRadius = 0.999;

inline Complex moebius_scalar(Complex p, Complex w) {
  return (p - w) / (1.0 - std::conj(p) * w);
}

/// d/dw of moebius_scalar(p, .) at w.
inline Complex moebius_deriv(Complex p, Complex w) {
  const Complex d = 1.0 - std::conj(p) * w;
  return (std::norm(p) - 1.0) / (d * d);
}

MapHandle make_map(PolyMap pm);
MapHandle make_map(RationalMap rm);

CVector evaluate(const MapHandle& map, const PolydiskPoint& z);
CMatrix jacobian(const MapHandle& map, const PolydiskPoint& z);

/// Unchecked interiority (dimensions still verified); used by quadrature
/// loops where every grid point is interior by construction.
CVector evaluate_at(const MapHandle& map, const CVector& z);
CMatrix jacobian_at(const MapHandle& map, const CVector& z);

/// Coordinatewise phi applied to w. Requires |p_j| < 1 for all j.
PolydiskPoint moebius_point(const std::vector<Complex>& p,
                            const PolydiskPoint& w);

MapHandle compose_moebius(MapHandle map, std::vector<Complex> p);

MapHandle project_scalar(MapHandle map, const CVector& u);

/// Built-in named maps: "pavlovic", "polydisk-counterexample",
/// "equality-28", "equality-8", "remark3-g", "remark3-gtilde".
MapHandle catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace splab
