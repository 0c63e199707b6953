#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "polder/core.hpp"

using namespace polder;

TEST_CASE("Vec3 arithmetic") {
    const Vec3 a{1.0, -2.0, 3.0};
    const Vec3 b{0.5, 4.0, -1.0};
    CHECK((a + b).y == doctest::Approx(2.0));
    CHECK((a - b).x == doctest::Approx(0.5));
    CHECK((2.0 * a).z == doctest::Approx(6.0));
    CHECK(a.dot(b) == doctest::Approx(0.5 - 8.0 - 3.0));
    CHECK(Vec3{3.0, 4.0, 0.0}.norm() == doctest::Approx(5.0));
    CHECK(a[0] == 1.0);
    CHECK(a[1] == -2.0);
    CHECK(a[2] == 3.0);
    CHECK((-a).x == -1.0);
}

TEST_CASE("unit conversions: atomic anchors") {
    const UnitSystem nat = natural_units();
    const UnitSystem au = atomic_units();

    // Lengths share the Bohr base; 1 Hartree = alpha_fs in inverse Bohr.
    CHECK(convert_units(1.0, QuantityKind::Length, au, nat) ==
          doctest::Approx(1.0));
    CHECK(convert_units(1.0, QuantityKind::Energy, au, nat) ==
          doctest::Approx(kFineStructure).epsilon(1e-14));
    CHECK(convert_units(1.0, QuantityKind::Temperature, au, nat) ==
          doctest::Approx(kFineStructure).epsilon(1e-14));
    CHECK(convert_units(1.0, QuantityKind::Acceleration, au, nat) ==
          doctest::Approx(kFineStructure * kFineStructure).epsilon(1e-14));
    CHECK(convert_units(1.0, QuantityKind::PolarizabilityVolume, au, nat) ==
          doctest::Approx(1.0));

    // Round trip is the identity.
    const double x = 3.7;
    CHECK(convert_units(convert_units(x, QuantityKind::Energy, nat, au),
                        QuantityKind::Energy, au, nat) ==
          doctest::Approx(x).epsilon(1e-14));
}

TEST_CASE("unit conversions: SI is display-only") {
    const UnitSystem nat = natural_units();
    const UnitSystem si = si_units();

    // One natural energy (inverse Bohr) in Joules is hbar c / a0.
    const double joules_per_natural =
        kHbarJouleSeconds * kSpeedOfLight / kBohrMeters;
    CHECK(convert_units(1.0, QuantityKind::Energy, nat, si) ==
          doctest::Approx(joules_per_natural).epsilon(1e-12));
    CHECK(convert_units(1.0, QuantityKind::Length, nat, si) ==
          doctest::Approx(kBohrMeters).epsilon(1e-12));

    // One natural temperature in Kelvin is hbar c / (a0 k_B).
    CHECK(convert_units(1.0, QuantityKind::Temperature, nat, si) ==
          doctest::Approx(joules_per_natural / kBoltzmannJoulePerK)
              .epsilon(1e-12));

    // Converting *from* SI is rejected.
    CHECK_THROWS_AS(convert_units(1.0, QuantityKind::Energy, si, nat),
                    DomainError);
}

TEST_CASE("triangle geometry: side labels and vectors") {
    // A at the right angle: gamma = |AB| = 3, alpha = |BC| = 4, beta = 5.
    const TriangleGeometry g = make_triangle(Vec3{0.0, 0.0, 0.0},
                                             Vec3{3.0, 0.0, 0.0},
                                             Vec3{3.0, 4.0, 0.0});
    CHECK(g.gamma == doctest::Approx(3.0));
    CHECK(g.alpha == doctest::Approx(4.0));
    CHECK(g.beta == doctest::Approx(5.0));
    CHECK(g.alpha_vec.x == doctest::Approx(0.0));
    CHECK(g.alpha_vec.y == doctest::Approx(4.0));
    CHECK(g.beta_vec.x == doctest::Approx(3.0));
    CHECK(g.beta_vec.y == doctest::Approx(4.0));
    CHECK(g.gamma_vec.x == doctest::Approx(3.0));

    CHECK_THROWS_AS(make_triangle(Vec3{0.0, 0.0, 0.0}, Vec3{0.0, 0.0, 0.0},
                                  Vec3{1.0, 0.0, 0.0}),
                    DomainError);
}

TEST_CASE("image geometry: vertical and lateral pairs") {
    // Stacked pair: both angles to the normal vanish.
    const ImageGeometry v =
        image_geometry(Vec3{0.0, 0.0, 1.0}, Vec3{0.0, 0.0, 2.0});
    CHECK(v.r == doctest::Approx(1.0));
    CHECK(v.r_bar == doctest::Approx(3.0));
    CHECK(v.sin2_theta == doctest::Approx(0.0));
    CHECK(v.sin2_theta_bar == doctest::Approx(0.0));

    // Equal heights: the direct vector lies in the plane, sin^2 = 1.
    const ImageGeometry l =
        image_geometry(Vec3{0.0, 0.0, 1.0}, Vec3{4.0, 0.0, 1.0});
    CHECK(l.r == doctest::Approx(4.0));
    CHECK(l.r_bar == doctest::Approx(std::sqrt(20.0)));
    CHECK(l.sin2_theta == doctest::Approx(1.0));
    CHECK(l.sin2_theta_bar == doctest::Approx(0.8));

    // Atoms must sit strictly above the plate.
    CHECK_THROWS_AS(image_geometry(Vec3{0.0, 0.0, -1.0}, Vec3{0.0, 0.0, 2.0}),
                    DomainError);
    CHECK_THROWS_AS(image_geometry(Vec3{0.0, 0.0, 1.0}, Vec3{0.0, 0.0, 0.0}),
                    DomainError);
}

TEST_CASE("regime names") {
    CHECK(std::string(regime_name(Regime::Near)) == "near");
    CHECK(std::string(regime_name(Regime::Intermediate)) == "intermediate");
    CHECK(std::string(regime_name(Regime::Far)) == "far");
    CHECK(std::string(regime_name(Regime::Thermal)) == "thermal");
    CHECK(std::string(regime_name(Regime::AcceleratedThermal)) ==
          "accelerated-thermal");
    CHECK(std::string(regime_name(Regime::AcceleratedBeyond)) ==
          "accelerated-beyond");
}

TEST_CASE("error hierarchy roots at polder::Error") {
    CHECK_THROWS_AS(throw DomainError("x"), Error);
    CHECK_THROWS_AS(throw ConvergenceError("x", 1.0, 0.1), Error);
    CHECK_THROWS_AS(throw DifferentiationError("x"), Error);
    CHECK_THROWS_AS(throw ConsistencyError("x"), Error);
    CHECK_THROWS_AS(throw PoleError("x"), Error);

    try {
        throw ConvergenceError("budget", 2.5, 0.25);
    } catch (const ConvergenceError& e) {
        CHECK(e.best_estimate == 2.5);
        CHECK(e.error_estimate == 0.25);
    }
}
