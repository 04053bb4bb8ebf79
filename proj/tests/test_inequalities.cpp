#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "splab/inequalities.hpp"
#include "splab/mapgen.hpp"
#include "splab/rng.hpp"
#include "test_util.hpp"

using namespace splab;
using splab::testing::cvec;
using splab::testing::scalar_poly;
using splab::testing::vector_poly;

TEST_CASE("classical bound on disk self-maps") {
  SUBCASE("constant map at an off-center point") {
    const MapHandle f = scalar_poly(1, {{{0}, 0.5}});
    const CheckReport r = check_classical(f, PolydiskPoint(cvec({0.3})));
    CHECK(r.name == "classical");
    CHECK(r.lhs == 0.0);
    CHECK(std::abs(r.rhs - 0.75 / 0.91) <= 1e-15);
    CHECK(r.passed);
    CHECK_FALSE(r.informational);
  }
  SUBCASE("square map at one half") {
    const MapHandle f = scalar_poly(1, {{{2}, 1.0}});
    const CheckReport r = check_classical(f, PolydiskPoint(cvec({0.5})));
    CHECK(std::abs(r.lhs - 1.0) <= 1e-15);
    CHECK(std::abs(r.rhs - 1.25) <= 1e-15);
    CHECK(std::abs(r.slack - 0.25) <= 1e-15);
    CHECK(r.passed);
  }
  SUBCASE("identity attains equality everywhere") {
    const MapHandle f = scalar_poly(1, {{{1}, 1.0}});
    SplitMix64 rng(2);
    for (int k = 0; k < 25; ++k) {
      const PolydiskPoint z = random_interior_point(1, rng, 0.02);
      const CheckReport r = check_classical(f, z);
      CHECK(std::abs(r.slack) <= 1e-14);
      CHECK(r.passed);
    }
  }
  SUBCASE("only scalar disk maps are accepted") {
    CHECK_THROWS_AS(
        check_classical(catalog("pavlovic"), PolydiskPoint::origin(1)),
        DimensionError);
    CHECK_THROWS_AS(check_classical(scalar_poly(2, {{{1, 0}, 0.5}}),
                                    PolydiskPoint::origin(2)),
                    DimensionError);
  }
}

TEST_CASE("disk-to-ball bound") {
  SUBCASE("embedded scalar identity keeps zero slack via the zero branch") {
    const MapHandle f = vector_poly(1, 2, {{{1}, {1.0, 0.0}}});
    const CheckReport r = check_disk_to_ball(f, PolydiskPoint::origin(1));
    CHECK(r.branch == "zero-value");
    CHECK(std::abs(r.lhs - 1.0) <= 1e-14);
    CHECK(std::abs(r.rhs - 1.0) <= 1e-14);
    CHECK(r.passed);
  }
  SUBCASE("constant vector map") {
    const MapHandle f = vector_poly(1, 2, {{{0}, {0.5, 0.5}}});
    const CheckReport r = check_disk_to_ball(f, PolydiskPoint::origin(1));
    CHECK(r.lhs == 0.0);
    CHECK(std::abs(r.rhs - 0.5) <= 1e-15);
    CHECK(r.passed);
  }
  SUBCASE("the curve map stays strictly inside its budget at 0") {
    const CheckReport r =
        check_disk_to_ball(catalog("pavlovic"), PolydiskPoint::origin(1));
    CHECK(std::abs(r.lhs) <= 1e-12);
    CHECK(std::abs(r.rhs - 0.5) <= 1e-12);
    CHECK(r.passed);
  }
  SUBCASE("polydisk domains are refused") {
    CHECK_THROWS_AS(
        check_disk_to_ball(catalog("equality-28"), PolydiskPoint::origin(2)),
        DimensionError);
  }
}

TEST_CASE("scalar polydisk bound") {
  SUBCASE("product map at a half-zero point") {
    const MapHandle f = scalar_poly(2, {{{1, 1}, 1.0}});
    const CheckReport r =
        check_scalar_polydisk(f, PolydiskPoint(cvec({0.5, 0.0})));
    // derivative in z2 is z1 = 0.5 with unit weight; z1-derivative vanishes
    CHECK(std::abs(r.lhs - 0.5) <= 1e-15);
    CHECK(std::abs(r.rhs - 1.0) <= 1e-15);
    CHECK(r.passed);
  }
  SUBCASE("single-variable dependence reduces to the classical bound") {
    const MapHandle f2 = scalar_poly(2, {{{2, 0}, 1.0}});
    const MapHandle f1 = scalar_poly(1, {{{2}, 1.0}});
    SplitMix64 rng(3);
    for (int k = 0; k < 20; ++k) {
      const PolydiskPoint z = random_interior_point(2, rng, 0.02);
      const CheckReport r2 = check_scalar_polydisk(f2, z);
      const CheckReport r1 = check_classical(f1, PolydiskPoint(cvec({z[0]})));
      // the polydisk form scales both sides by (1 - |z_1|^2)
      const double w = 1.0 - std::norm(z[0]);
      CHECK(std::abs(r2.lhs - w * r1.lhs) <= 1e-13);
      CHECK(std::abs(r2.rhs - w * r1.rhs) <= 1e-13);
      CHECK(r2.passed);
    }
  }
  SUBCASE("vector targets are refused") {
    CHECK_THROWS_AS(
        check_scalar_polydisk(catalog("pavlovic"), PolydiskPoint::origin(1)),
        DimensionError);
  }
}

TEST_CASE("polydisk-to-ball bound branches on the value") {
  SUBCASE("zero of the map takes the squared branch") {
    const CheckReport r =
        check_polydisk_ball(catalog("equality-28"), PolydiskPoint::origin(2));
    CHECK(r.branch == "eq28");
    CHECK(std::abs(r.lhs - 1.0) <= 1e-12);
    CHECK(r.rhs == 1.0);
    CHECK(r.passed);
  }
  SUBCASE("nonzero value takes the weighted-sum branch") {
    const CheckReport r =
        check_polydisk_ball(catalog("equality-8"), PolydiskPoint::origin(2));
    CHECK(r.branch == "eq8");
    CHECK(std::abs(r.lhs - 0.75) <= 1e-12);
    CHECK(std::abs(r.rhs - 0.75) <= 1e-12);
    CHECK(std::abs(r.slack) <= 1e-12);
    CHECK(r.passed);
  }
  SUBCASE("scalar targets are refused rather than rerouted") {
    CHECK_THROWS_AS(check_polydisk_ball(scalar_poly(2, {{{1, 1}, 1.0}}),
                                        PolydiskPoint::origin(2)),
                    DimensionError);
  }
}

TEST_CASE("squared-sum form holds on both branches") {
  SUBCASE("at a zero it matches the zero branch") {
    const CheckReport r =
        check_eq28_everywhere(catalog("equality-28"), PolydiskPoint::origin(2));
    CHECK(r.branch == "eq28");
    CHECK(std::abs(r.lhs - 1.0) <= 1e-12);
    CHECK(r.passed);
  }
  SUBCASE("at a nonzero value it is strictly slack for the equality map") {
    const CheckReport r =
        check_eq28_everywhere(catalog("equality-8"), PolydiskPoint::origin(2));
    // grad_j = 3/8 with unit weights, so the squared sum is 2 * (3/8)^2
    CHECK(std::abs(r.lhs - 0.28125) <= 1e-12);
    CHECK(r.rhs == 1.0);
    CHECK(r.passed);
  }
  SUBCASE("random maps never violate it anywhere") {
    SplitMix64 rng(99);
    GenConfig cfg;
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      cfg.seed = seed;
      cfg.n = 2 + static_cast<int>(seed % 2);
      cfg.m = 2;
      cfg.maxdeg = 1 + static_cast<int>(seed % 3);
      const MapHandle f = make_map(random_polymap(cfg));
      for (int k = 0; k < 50; ++k) {
        const PolydiskPoint z = random_interior_point(f->n, rng, 0.02);
        CHECK(check_eq28_everywhere(f, z).passed);
      }
    }
  }
}

TEST_CASE("automatic routing picks the dimensional form") {
  CHECK(check_auto(scalar_poly(1, {{{1}, 0.9}}), PolydiskPoint::origin(1))
            .name == "classical");
  CHECK(check_auto(scalar_poly(2, {{{1, 1}, 1.0}}), PolydiskPoint::origin(2))
            .name == "scalar-polydisk");
  CHECK(check_auto(catalog("pavlovic"), PolydiskPoint::origin(1)).name ==
        "disk-ball");
  CHECK(check_auto(catalog("equality-28"), PolydiskPoint::origin(2)).name ==
        "polydisk-ball");
}

TEST_CASE("naive transplants of the scalar bounds fail where expected") {
  SUBCASE("derivative norm of the curve map overshoots at 0") {
    const CheckReport r =
        naive_eq3_report(catalog("pavlovic"), PolydiskPoint::origin(1));
    CHECK(r.informational);
    CHECK_FALSE(r.passed);
    CHECK(std::abs(r.lhs - 1.0 / std::sqrt(2.0)) <= 1e-12);
    CHECK(std::abs(r.rhs - 0.5) <= 1e-12);
    CHECK(r.slack < -0.1);  // genuine violation, not a tolerance artifact
  }
  SUBCASE("weighted column sums of the two-variable map overshoot") {
    const CheckReport r = naive_eq6_report(catalog("polydisk-counterexample"),
                                           PolydiskPoint::origin(2));
    CHECK(r.informational);
    CHECK_FALSE(r.passed);
    CHECK(std::abs(r.lhs - 1.1547005383792517) <= 1e-10);
    CHECK(std::abs(r.rhs - 0.9966666666666667) <= 1e-10);
    CHECK(r.slack < -0.1);
  }
  SUBCASE("branch-blind weighted gradient sum fails at a zero") {
    const CheckReport r =
        naive_eq7_report(catalog("equality-28"), PolydiskPoint::origin(2));
    CHECK(r.informational);
    CHECK_FALSE(r.passed);
    CHECK(std::abs(r.lhs - std::sqrt(2.0)) <= 1e-12);
    CHECK(std::abs(r.rhs - 1.0) <= 1e-12);
    CHECK(r.slack < -0.1);
  }
  SUBCASE("naive forms are still true for scalar targets") {
    const MapHandle f = scalar_poly(2, {{{1, 1}, 1.0}});
    SplitMix64 rng(17);
    for (int k = 0; k < 10; ++k) {
      const PolydiskPoint z = random_interior_point(2, rng, 0.02);
      CHECK(naive_eq6_report(f, z).passed);
      CHECK(naive_eq7_report(f, z).passed);
    }
  }
}

TEST_CASE("moebius transport preserves the routed report") {
  SUBCASE("the composed catalog map lands on the zero branch") {
    const auto [at_p, at_zero] = verify_reduction(
        catalog("equality-28"), PolydiskPoint(cvec({0.5, 0.5})));
    CHECK(at_p.branch == at_zero.branch);
    CHECK(std::abs(at_p.lhs - at_zero.lhs) <= 1e-10);
    CHECK(std::abs(at_p.rhs - at_zero.rhs) <= 1e-10);
  }
  SUBCASE("composing at the zero hits the eq28 branch exactly") {
    const auto [at_p, at_zero] = verify_reduction(
        catalog("equality-8"), PolydiskPoint(cvec({0.5, 0.5})));
    CHECK(at_p.branch == "eq28");
    CHECK(std::abs(at_p.lhs - 1.0) <= 1e-9);
    CHECK(std::abs(at_p.lhs - at_zero.lhs) <= 1e-10);
  }
  SUBCASE("random base points on every catalog map") {
    SplitMix64 rng(271828);
    for (const std::string& name : catalog_names()) {
      const MapHandle f = catalog(name);
      for (int k = 0; k < 10; ++k) {
        const PolydiskPoint p = random_interior_point(f->n, rng, 0.1);
        const auto [at_p, at_zero] = verify_reduction(f, p);
        CHECK(std::abs(at_p.lhs - at_zero.lhs) <= 1e-10);
        CHECK(std::abs(at_p.rhs - at_zero.rhs) <= 1e-10);
        CHECK(at_p.branch == at_zero.branch);
      }
    }
  }
  SUBCASE("scalar maps transport through the polydisk form") {
    const MapHandle f = scalar_poly(2, {{{1, 1}, 0.9}});
    SplitMix64 rng(31);
    for (int k = 0; k < 10; ++k) {
      const PolydiskPoint p = random_interior_point(2, rng, 0.1);
      const auto [at_p, at_zero] = verify_reduction(f, p);
      CHECK(at_p.name == "scalar-polydisk");
      CHECK(at_zero.name == "scalar-polydisk");
      CHECK(std::abs(at_p.lhs - at_zero.lhs) <= 1e-10);
      CHECK(std::abs(at_p.rhs - at_zero.rhs) <= 1e-10);
    }
  }
}

TEST_CASE("random in-ball maps satisfy every applicable bound") {
  SplitMix64 rng(5150);
  GenConfig cfg;

  SUBCASE("vector targets") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
      cfg.seed = seed;
      cfg.n = 1 + static_cast<int>(seed % 3);
      cfg.m = 2 + static_cast<int>(seed % 2);
      cfg.maxdeg = 1 + static_cast<int>(seed % 3);
      const MapHandle f = make_map(random_polymap(cfg));
      for (int k = 0; k < 100; ++k) {
        const PolydiskPoint z = random_interior_point(f->n, rng, 0.02);
        const CheckReport r = check_auto(f, z);
        CHECK(r.passed);
        CHECK(r.slack >= -kDefaultCheckTol);
      }
    }
  }
  SUBCASE("scalar targets") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      cfg.seed = seed;
      cfg.n = 1 + static_cast<int>(seed % 3);
      cfg.m = 1;
      cfg.maxdeg = 1 + static_cast<int>(seed % 3);
      const MapHandle f = make_map(random_polymap(cfg));
      for (int k = 0; k < 100; ++k) {
        const PolydiskPoint z = random_interior_point(f->n, rng, 0.02);
        CHECK(check_auto(f, z).passed);
      }
    }
  }
}
