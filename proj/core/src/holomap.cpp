#include "splab/holomap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "splab/rng.hpp"

namespace splab {

namespace {

// Per-coordinate power tables z_j^0 .. z_j^{maxexp_j}.
std::vector<std::vector<Complex>> power_tables(const PolyMap& pm,
                                               const CVector& z) {
  std::vector<int> maxexp(static_cast<size_t>(pm.n), 0);
  for (const auto& [alpha, coeff] : pm.terms) {
    for (int j = 0; j < pm.n; ++j) {
      maxexp[static_cast<size_t>(j)] =
          std::max(maxexp[static_cast<size_t>(j)], alpha[j]);
    }
  }
  std::vector<std::vector<Complex>> pow(static_cast<size_t>(pm.n));
  for (int j = 0; j < pm.n; ++j) {
    auto& pj = pow[static_cast<size_t>(j)];
    pj.resize(static_cast<size_t>(maxexp[static_cast<size_t>(j)]) + 1);
    pj[0] = 1.0;
    for (size_t k = 1; k < pj.size(); ++k) pj[k] = pj[k - 1] * z[j];
  }
  return pow;
}

CVector eval_poly(const PolyMap& pm, const CVector& z) {
  const auto pow = power_tables(pm, z);
  CVector out = CVector::Zero(pm.m);
  for (const auto& [alpha, coeff] : pm.terms) {
    Complex mono = 1.0;
    for (int j = 0; j < pm.n; ++j) {
      mono *= pow[static_cast<size_t>(j)][static_cast<size_t>(alpha[j])];
    }
    out += mono * coeff;
  }
  return out;
}

CMatrix jac_poly(const PolyMap& pm, const CVector& z) {
  const auto pow = power_tables(pm, z);
  CMatrix out = CMatrix::Zero(pm.m, pm.n);
  for (const auto& [alpha, coeff] : pm.terms) {
    for (int j = 0; j < pm.n; ++j) {
      if (alpha[j] == 0) continue;
      Complex mono = static_cast<double>(alpha[j]);
      for (int k = 0; k < pm.n; ++k) {
        const int e = (k == j) ? alpha[k] - 1 : alpha[k];
        mono *= pow[static_cast<size_t>(k)][static_cast<size_t>(e)];
      }
      out.col(j) += mono * coeff;
    }
  }
  return out;
}

Complex eval_denominator(const PolyMap& den, const CVector& z) {
  const CVector d = eval_poly(den, z);
  if (std::abs(d[0]) < kDenFloor) {
    throw EvaluationError("rational map: denominator modulus " +
                          std::to_string(std::abs(d[0])) +
                          " below safety floor");
  }
  return d[0];
}

void require_dim(const MapHandle& map, const CVector& z) {
  if (!map) throw ParameterError("null map handle");
  if (z.size() != map->n) {
    throw DimensionError("map expects " + std::to_string(map->n) +
                         " coordinates, got " + std::to_string(z.size()));
  }
}

CVector moebius_image(const std::vector<Complex>& p, const CVector& w) {
  CVector out(w.size());
  for (Eigen::Index j = 0; j < w.size(); ++j) {
    out[j] = moebius_scalar(p[static_cast<size_t>(j)], w[j]);
  }
  return out;
}

// Loud-failure heuristic, not a proof: sample the closed polydisk of
// radius kDenCheckRadius and require |den| >= kDenFloor everywhere.
void check_denominator_clear(const PolyMap& den) {
  std::vector<Complex> ring;
  ring.push_back(0.0);
  for (double r : {0.5, kDenCheckRadius}) {
    for (int k = 0; k < 8; ++k) {
      const double th = 2.0 * std::numbers::pi * k / 8.0;
      ring.push_back(Complex(r * std::cos(th), r * std::sin(th)));
    }
  }
  const int n = den.n;
  double full_grid_size = 1.0;
  for (int j = 0; j < n; ++j) full_grid_size *= static_cast<double>(ring.size());

  auto probe = [&](const CVector& z) {
    const CVector d = eval_poly(den, z);
    if (std::abs(d[0]) < kDenFloor) {
      throw ParameterError(
          "rational map: denominator modulus below 1e-6 inside the closed "
          "polydisk of radius 0.999");
    }
  };

  CVector z(n);
  if (full_grid_size <= 1e5) {
    std::vector<size_t> digit(static_cast<size_t>(n), 0);
    while (true) {
      for (int j = 0; j < n; ++j) z[j] = ring[digit[static_cast<size_t>(j)]];
      probe(z);
      int j = 0;
      while (j < n && ++digit[static_cast<size_t>(j)] == ring.size()) {
        digit[static_cast<size_t>(j)] = 0;
        ++j;
      }
      if (j == n) break;
    }
  } else {
    SplitMix64 rng(0x5EEDDECEull);
    for (int s = 0; s < 100000; ++s) {
      for (int j = 0; j < n; ++j) {
        const double r = kDenCheckRadius * rng.next_unit();
        const double th = 2.0 * std::numbers::pi * rng.next_unit();
        z[j] = Complex(r * std::cos(th), r * std::sin(th));
      }
      probe(z);
    }
  }
}

struct Evaluator {
  const CVector& z;

  CVector operator()(const PolyMap& pm) const { return eval_poly(pm, z); }

  CVector operator()(const RationalMap& rm) const {
    const Complex d = eval_denominator(rm.denominator, z);
    return eval_poly(rm.numerator, z) / d;
  }

  CVector operator()(const MoebiusComposed& mc) const {
    return evaluate_at(mc.base, moebius_image(mc.p, z));
  }

  CVector operator()(const ScalarProjection& sp) const {
    CVector out(1);
    out[0] = hermitian_inner(evaluate_at(sp.base, z), sp.u);
    return out;
  }
};

struct Differentiator {
  const CVector& z;

  CMatrix operator()(const PolyMap& pm) const { return jac_poly(pm, z); }

  CMatrix operator()(const RationalMap& rm) const {
    const Complex d = eval_denominator(rm.denominator, z);
    const CVector num = eval_poly(rm.numerator, z);
    const CMatrix jn = jac_poly(rm.numerator, z);
    const CMatrix jd = jac_poly(rm.denominator, z);
    CMatrix out(rm.numerator.m, rm.numerator.n);
    for (int j = 0; j < rm.numerator.n; ++j) {
      out.col(j) = jn.col(j) / d - num * (jd(0, j) / (d * d));
    }
    return out;
  }

  CMatrix operator()(const MoebiusComposed& mc) const {
    const CVector img = moebius_image(mc.p, z);
    CMatrix out = jacobian_at(mc.base, img);
    for (Eigen::Index j = 0; j < z.size(); ++j) {
      out.col(j) *= moebius_deriv(mc.p[static_cast<size_t>(j)], z[j]);
    }
    return out;
  }

  CMatrix operator()(const ScalarProjection& sp) const {
    const CMatrix jb = jacobian_at(sp.base, z);
    CMatrix out(1, jb.cols());
    for (Eigen::Index j = 0; j < jb.cols(); ++j) {
      out(0, j) = hermitian_inner(jb.col(j), sp.u);
    }
    return out;
  }
};

}  // namespace

PolyMap make_polymap(int n, int m,
                     std::vector<std::pair<MultiIndex, CVector>> terms) {
  if (n < 1 || m < 1) {
    throw ParameterError("make_polymap: dimensions must be positive");
  }
  for (const auto& [alpha, coeff] : terms) {
    if (alpha.size() != n) {
      throw ParameterError("make_polymap: exponent tuple of length " +
                           std::to_string(alpha.size()) + ", expected " +
                           std::to_string(n));
    }
    if (coeff.size() != m) {
      throw ParameterError("make_polymap: coefficient vector of length " +
                           std::to_string(coeff.size()) + ", expected " +
                           std::to_string(m));
    }
    if (!all_finite(coeff)) {
      throw ParameterError("make_polymap: non-finite coefficient");
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].first == terms[i - 1].first) {
      throw ParameterError("make_polymap: duplicate exponent tuple");
    }
  }
  return PolyMap{n, m, std::move(terms)};
}

MapHandle make_map(PolyMap pm) {
  PolyMap valid = make_polymap(pm.n, pm.m, std::move(pm.terms));
  const int n = valid.n, m = valid.m;
  return std::make_shared<const MapNode>(MapNode{n, m, std::move(valid)});
}

MapHandle make_map(RationalMap rm) {
  PolyMap num = make_polymap(rm.numerator.n, rm.numerator.m,
                             std::move(rm.numerator.terms));
  PolyMap den = make_polymap(rm.denominator.n, rm.denominator.m,
                             std::move(rm.denominator.terms));
  if (den.m != 1) {
    throw ParameterError("rational map: denominator must be scalar-valued");
  }
  if (den.n != num.n) {
    throw ParameterError("rational map: numerator and denominator disagree "
                         "on domain dimension");
  }
  check_denominator_clear(den);
  const int n = num.n, m = num.m;
  return std::make_shared<const MapNode>(
      MapNode{n, m, RationalMap{std::move(num), std::move(den)}});
}

CVector evaluate_at(const MapHandle& map, const CVector& z) {
  require_dim(map, z);
  return std::visit(Evaluator{z}, map->kind);
}

CMatrix jacobian_at(const MapHandle& map, const CVector& z) {
  require_dim(map, z);
  return std::visit(Differentiator{z}, map->kind);
}

CVector evaluate(const MapHandle& map, const PolydiskPoint& z) {
  return evaluate_at(map, z.coords());
}

CMatrix jacobian(const MapHandle& map, const PolydiskPoint& z) {
  return jacobian_at(map, z.coords());
}

PolydiskPoint moebius_point(const std::vector<Complex>& p,
                            const PolydiskPoint& w) {
  if (static_cast<int>(p.size()) != w.dim()) {
    throw DimensionError("moebius_point: parameter/point length mismatch");
  }
  for (const Complex& pj : p) {
    if (!(std::abs(pj) < 1.0)) {
      throw ParameterError("moebius_point: |p_j| must be < 1");
    }
  }
  return PolydiskPoint(moebius_image(p, w.coords()));
}

MapHandle compose_moebius(MapHandle map, std::vector<Complex> p) {
  if (!map) throw ParameterError("compose_moebius: null map handle");
  if (static_cast<int>(p.size()) != map->n) {
    throw DimensionError("compose_moebius: expected " +
                         std::to_string(map->n) + " parameters, got " +
                         std::to_string(p.size()));
  }
  for (const Complex& pj : p) {
    if (!(std::abs(pj) < 1.0)) {
      throw ParameterError("compose_moebius: |p_j| must be < 1");
    }
  }
  const int n = map->n, m = map->m;
  return std::make_shared<const MapNode>(
      MapNode{n, m, MoebiusComposed{std::move(map), std::move(p)}});
}

MapHandle project_scalar(MapHandle map, const CVector& u) {
  if (!map) throw ParameterError("project_scalar: null map handle");
  if (u.size() != map->m) {
    throw DimensionError("project_scalar: direction length " +
                         std::to_string(u.size()) + ", codomain dimension " +
                         std::to_string(map->m));
  }
  if (std::abs(u.norm() - 1.0) > 1e-12) {
    throw ParameterError("project_scalar: direction must have unit norm");
  }
  const int n = map->n;
  return std::make_shared<const MapNode>(
      MapNode{n, 1, ScalarProjection{std::move(map), u}});
}

MapHandle catalog(const std::string& name) {
  const double s2 = 1.0 / std::numbers::sqrt2;
  const double s3 = 1.0 / std::sqrt(3.0);
  auto vec = [](std::initializer_list<Complex> vals) {
    CVector v(static_cast<Eigen::Index>(vals.size()));
    Eigen::Index i = 0;
    for (Complex c : vals) v[i++] = c;
    return v;
  };

  if (name == "pavlovic") {
    return make_map(make_polymap(
        1, 2,
        {{MultiIndex({1}), vec({s2, 0.0})}, {MultiIndex({0}), vec({0.0, s2})}}));
  }
  if (name == "polydisk-counterexample") {
    return make_map(make_polymap(2, 2,
                                 {{MultiIndex({1, 0}), vec({s3, 0.0})},
                                  {MultiIndex({0, 1}), vec({0.0, s3})},
                                  {MultiIndex({0, 0}), vec({0.0, 0.1 * s3})}}));
  }
  if (name == "equality-28") {
    return make_map(make_polymap(2, 2,
                                 {{MultiIndex({1, 0}), vec({s2, 0.0})},
                                  {MultiIndex({0, 1}), vec({0.0, s2})}}));
  }
  if (name == "equality-8") {
    return compose_moebius(catalog("equality-28"), {0.5, 0.5});
  }
  if (name == "remark3-g") {
    return make_map(make_polymap(2, 1,
                                 {{MultiIndex({1, 0}), vec({0.5})},
                                  {MultiIndex({0, 1}), vec({0.5})}}));
  }
  if (name == "remark3-gtilde") {
    PolyMap num = make_polymap(2, 1,
                               {{MultiIndex({1, 0}), vec({0.5})},
                                {MultiIndex({0, 1}), vec({0.5})},
                                {MultiIndex({1, 1}), vec({-1.0})}});
    PolyMap den = make_polymap(2, 1,
                               {{MultiIndex({0, 0}), vec({1.0})},
                                {MultiIndex({1, 0}), vec({-0.5})},
                                {MultiIndex({0, 1}), vec({-0.5})}});
    return make_map(RationalMap{std::move(num), std::move(den)});
  }
  throw LookupError("catalog: unknown map \"" + name +
                    "\"; known names: equality-28, equality-8, pavlovic, "
                    "polydisk-counterexample, remark3-g, remark3-gtilde");
}

std::vector<std::string> catalog_names() {
  return {"equality-28",  "equality-8", "pavlovic",
          "polydisk-counterexample", "remark3-g",  "remark3-gtilde"};
}

}  // namespace splab
