#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "splab/holomap.hpp"
#include "splab/mapgen.hpp"
#include "splab/rng.hpp"
#include "test_util.hpp"

using namespace splab;
using splab::testing::cvec;
using splab::testing::fd_jacobian;
using splab::testing::scalar_poly;
using splab::testing::vector_poly;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

PolydiskPoint pt(std::initializer_list<Complex> vals) {
  return PolydiskPoint(cvec(vals));
}
}  // namespace

TEST_CASE("catalog evaluation matches hand values") {
  const MapHandle eq28 = catalog("equality-28");
  const CVector at_half = evaluate(eq28, pt({0.5, 0.5}));
  CHECK(std::abs(at_half[0] - 0.3535534) <= 1e-7);
  CHECK(std::abs(at_half[1] - 0.3535534) <= 1e-7);
  CHECK(evaluate(eq28, PolydiskPoint::origin(2)).norm() == 0.0);

  const CVector pav = evaluate(catalog("pavlovic"), PolydiskPoint::origin(1));
  CHECK(std::abs(pav[0]) <= 1e-15);
  CHECK(std::abs(pav[1] - 0.7071068) <= 1e-7);

  const CVector e8 = evaluate(catalog("equality-8"), PolydiskPoint::origin(2));
  CHECK(std::abs(e8[0] - 1.0 / (2.0 * std::sqrt(2.0))) <= 1e-15);
  CHECK(std::abs(e8[1] - 1.0 / (2.0 * std::sqrt(2.0))) <= 1e-15);
  CHECK(std::abs(e8.squaredNorm() - 0.25) <= 1e-15);
}

TEST_CASE("catalog jacobians at the origin") {
  const CMatrix j28 = jacobian(catalog("equality-28"), PolydiskPoint::origin(2));
  CHECK(std::abs(j28(0, 0) - kInvSqrt2) <= 1e-15);
  CHECK(std::abs(j28(1, 1) - kInvSqrt2) <= 1e-15);
  CHECK(std::abs(j28(0, 1)) <= 1e-15);
  CHECK(std::abs(j28(1, 0)) <= 1e-15);

  const CMatrix jp = jacobian(catalog("pavlovic"), PolydiskPoint::origin(1));
  CHECK(std::abs(jp(0, 0) - kInvSqrt2) <= 1e-15);
  CHECK(std::abs(jp(1, 0)) <= 1e-15);

  for (const char* name : {"remark3-g", "remark3-gtilde"}) {
    const CMatrix jg = jacobian(catalog(name), PolydiskPoint::origin(2));
    CHECK(std::abs(jg(0, 0) - 0.5) <= 1e-12);
    CHECK(std::abs(jg(0, 1) - 0.5) <= 1e-12);
  }
}

TEST_CASE("unknown catalog name raises a lookup error") {
  CHECK_THROWS_AS(catalog("no-such-map"), LookupError);
  CHECK(catalog_names().size() == 6);
}

TEST_CASE("moebius point transport") {
  const PolydiskPoint w = pt({{0.3, 0.2}, {-0.1, 0.4}});

  SUBCASE("zero parameter negates") {
    const PolydiskPoint img = moebius_point({0.0, 0.0}, w);
    CHECK(std::abs(img[0] + w[0]) <= 1e-15);
    CHECK(std::abs(img[1] + w[1]) <= 1e-15);
  }
  SUBCASE("origin maps to the parameter") {
    const PolydiskPoint img =
        moebius_point({{0.5, 0.1}, {0.0, -0.6}}, PolydiskPoint::origin(2));
    CHECK(std::abs(img[0] - Complex(0.5, 0.1)) <= 1e-15);
    CHECK(std::abs(img[1] - Complex(0.0, -0.6)) <= 1e-15);
  }
  SUBCASE("parameter equal to the point vanishes") {
    const PolydiskPoint img = moebius_point({w[0], w[1]}, w);
    CHECK(std::abs(img[0]) <= 1e-15);
    CHECK(std::abs(img[1]) <= 1e-15);
  }
  SUBCASE("parameter on the circle is rejected") {
    CHECK_THROWS_AS(moebius_point({Complex(1.0, 0.0), 0.0}, w),
                    ParameterError);
  }
}

TEST_CASE("scalar moebius composition derivative at zero") {
  const MapHandle ident = scalar_poly(1, {{{1}, 1.0}});
  const MapHandle g = compose_moebius(ident, {0.5});
  const CMatrix jg = jacobian(g, PolydiskPoint::origin(1));
  CHECK(std::abs(jg(0, 0) - Complex(-0.75, 0.0)) <= 1e-15);
}

TEST_CASE("moebius composition transports values and derivatives") {
  const MapHandle f = catalog("polydisk-counterexample");
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const PolydiskPoint p = random_interior_point(2, rng, 0.1);
    const std::vector<Complex> param = {p[0], p[1]};
    const MapHandle g = compose_moebius(f, param);

    // value at 0 equals the base value at p
    const CVector g0 = evaluate(g, PolydiskPoint::origin(2));
    const CVector fp = evaluate(f, p);
    CHECK((g0 - fp).norm() <= 1e-14);

    // column j of the composed Jacobian at 0 carries the factor
    // (-1 + |p_j|^2)
    const CMatrix jg = jacobian(g, PolydiskPoint::origin(2));
    const CMatrix jf = jacobian(f, p);
    for (int j = 0; j < 2; ++j) {
      const Complex factor(-1.0 + std::norm(param[static_cast<size_t>(j)]),
                           0.0);
      CHECK((jg.col(j) - factor * jf.col(j)).norm() <= 1e-10);
    }

    // composing twice with the same parameter restores the map
    const MapHandle gg = compose_moebius(g, param);
    const PolydiskPoint z = random_interior_point(2, rng, 0.1);
    CHECK((evaluate(gg, z) - evaluate(f, z)).norm() <= 1e-10);
  }
}

TEST_CASE("scalar projection") {
  const MapHandle pav = catalog("pavlovic");

  SUBCASE("projection onto the direction of the value at 0") {
    const MapHandle h = project_scalar(pav, cvec({0.0, 1.0}));
    const CVector h0 = evaluate(h, PolydiskPoint::origin(1));
    CHECK(std::abs(h0[0] - kInvSqrt2) <= 1e-15);
  }
  SUBCASE("coordinate projection picks out a component") {
    const MapHandle h = project_scalar(catalog("equality-28"), cvec({1.0, 0.0}));
    const CVector hv = evaluate(h, pt({{0.4, 0.1}, {0.2, -0.3}}));
    CHECK(std::abs(hv[0] - Complex(0.4, 0.1) * kInvSqrt2) <= 1e-15);
  }
  SUBCASE("projected derivative of the moebius-composed catalog map") {
    const MapHandle e8 = catalog("equality-8");
    const CVector f0 = evaluate(e8, PolydiskPoint::origin(2));
    const MapHandle h = project_scalar(e8, f0 / f0.norm());
    const CMatrix jh = jacobian(h, PolydiskPoint::origin(2));
    CHECK(std::abs(std::abs(jh(0, 0)) - 0.375) <= 1e-12);
  }
  SUBCASE("non-unit directions are rejected") {
    CHECK_THROWS_AS(project_scalar(pav, cvec({0.0, 0.5})), ParameterError);
    CHECK_THROWS_AS(project_scalar(pav, cvec({1.0})), DimensionError);
  }
}

TEST_CASE("rational maps guard their denominator") {
  SUBCASE("zero inside the check radius fails construction") {
    PolyMap num = make_polymap(1, 1, {{MultiIndex({0}), cvec({1.0})}});
    PolyMap den = make_polymap(
        1, 1, {{MultiIndex({0}), cvec({0.5})}, {MultiIndex({1}), cvec({-1.0})}});
    CHECK_THROWS_AS(make_map(RationalMap{num, den}), ParameterError);
  }
  SUBCASE("zero outside the check radius fails only at evaluation") {
    PolyMap num = make_polymap(1, 1, {{MultiIndex({0}), cvec({1.0})}});
    PolyMap den = make_polymap(
        1, 1,
        {{MultiIndex({0}), cvec({1.0})}, {MultiIndex({1}), cvec({-1.0005})}});
    MapHandle r;
    CHECK_NOTHROW(r = make_map(RationalMap{num, den}));
    CHECK_NOTHROW(evaluate(r, pt({0.5})));
    CHECK_THROWS_AS(evaluate(r, pt({0.9995})), EvaluationError);
  }
  SUBCASE("vector denominators are rejected") {
    PolyMap num = make_polymap(1, 1, {{MultiIndex({0}), cvec({1.0})}});
    PolyMap den = make_polymap(1, 2, {{MultiIndex({0}), cvec({1.0, 1.0})}});
    CHECK_THROWS_AS(make_map(RationalMap{num, den}), ParameterError);
  }
}

TEST_CASE("polynomial construction validates terms") {
  CHECK_THROWS_AS(
      make_polymap(2, 1,
                   {{MultiIndex({1, 0}), cvec({1.0})},
                    {MultiIndex({1, 0}), cvec({2.0})}}),
      ParameterError);
  CHECK_THROWS_AS(make_polymap(2, 1, {{MultiIndex({1}), cvec({1.0})}}),
                  ParameterError);
  CHECK_THROWS_AS(make_polymap(2, 2, {{MultiIndex({1, 0}), cvec({1.0})}}),
                  ParameterError);
  CHECK_THROWS_AS(make_polymap(0, 1, {}), ParameterError);
}

TEST_CASE("evaluation rejects mismatched points") {
  CHECK_THROWS_AS(evaluate(catalog("equality-28"), PolydiskPoint::origin(3)),
                  DimensionError);
  CHECK_THROWS_AS(jacobian(catalog("pavlovic"), PolydiskPoint::origin(2)),
                  DimensionError);
}

TEST_CASE("catalog maps land inside the ball") {
  SplitMix64 rng(555);
  for (const std::string& name : catalog_names()) {
    const MapHandle f = catalog(name);
    for (int k = 0; k < 1000; ++k) {
      const PolydiskPoint z = random_interior_point(f->n, rng);
      CHECK(evaluate(f, z).norm() <= 1.0 - 1e-12);
    }
  }
}

TEST_CASE("analytic jacobians match central differences for every kind") {
  std::vector<MapHandle> maps = {
      catalog("equality-28"),                                   // polynomial
      catalog("remark3-gtilde"),                                // rational
      catalog("equality-8"),                                    // moebius
      project_scalar(catalog("pavlovic"), cvec({0.0, 1.0})),    // projection
      vector_poly(3, 2,
                  {{{2, 0, 1}, {Complex(0.2, 0.1), 0.3}},
                   {{0, 1, 0}, {0.1, Complex(-0.2, 0.25)}},
                   {{1, 1, 1}, {0.15, 0.05}}}),
  };
  SplitMix64 rng(777);
  for (const MapHandle& f : maps) {
    for (int k = 0; k < 10; ++k) {
      const PolydiskPoint z = random_interior_point(f->n, rng, 0.1);
      const CMatrix analytic = jacobian(f, z);
      const CMatrix numeric = fd_jacobian(f, z);
      CHECK((analytic - numeric).norm() <= 1e-6);
    }
  }
}
