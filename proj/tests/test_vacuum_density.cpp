#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "polder/core.hpp"
#include "polder/polarizability.hpp"
#include "polder/two_body.hpp"
#include "polder/vacuum_density.hpp"

using namespace polder;

namespace {

doctest::Approx rel(double want, double tol) {
    return doctest::Approx(want).epsilon(tol).scale(0.0);
}

PolarizabilityModel unit_atom() {
    return PolarizabilityModel::from_transitions({{1.0, 1.5}});
}

}  // namespace

TEST_CASE("plate densities") {
    for (double z : {0.5, 1.0, 2.0}) {
        const double magnitude = 3.0 / (32.0 * kPi * kPi * std::pow(z, 4));
        CHECK(plate_density(z, FieldKind::Electric) == rel(magnitude, 1e-15));
        CHECK(plate_density(z, FieldKind::Magnetic) == rel(-magnitude, 1e-15));
    }
    // Exact inverse-fourth-power scaling.
    CHECK(plate_density(2.0, FieldKind::Electric) ==
          rel(plate_density(1.0, FieldKind::Electric) / 16.0, 1e-15));

    CHECK_THROWS_AS(plate_density(0.0, FieldKind::Electric), DomainError);
    CHECK_THROWS_AS(plate_density(-1.0, FieldKind::Magnetic), DomainError);
}

TEST_CASE("atom densities: far-zone closed forms") {
    const double lambda = 2.0 * kPi;
    const double r = 1e3 * lambda;
    const double r7 = std::pow(r, 7);

    const double de = density_around_atom(unit_atom(), r, FieldKind::Electric);
    const double dm = density_around_atom(unit_atom(), r, FieldKind::Magnetic);
    CHECK(de == rel(23.0 / (16.0 * kPi * kPi * r7), 1e-3));
    CHECK(dm == rel(-7.0 / (16.0 * kPi * kPi * r7), 1e-3));

    // Electric-to-magnetic magnitude ratio tends to 23/7.
    CHECK(de / (-dm) == rel(23.0 / 7.0, 1e-3));

    CHECK_THROWS_AS(density_around_atom(unit_atom(), 0.0, FieldKind::Electric),
                    DomainError);
}

TEST_CASE("atom densities: near-zone laws and signs") {
    const double lambda = 2.0 * kPi;
    const double r = 1e-4 * lambda;

    // Electric: (3/(8 pi r^6)) Int alpha du -> alpha-weighted static limit;
    // for the unit atom Int du/(1+u^2) = pi/2 gives 3/(8 pi r^6).
    const double de = density_around_atom(unit_atom(), r, FieldKind::Electric);
    CHECK(de == rel(3.0 / (8.0 * kPi * std::pow(r, 6)), 5e-3));

    // Magnetic: with the exponential cutoff every polynomial term lands at
    // order r^-5 (gamma integrals 1/4 + 1/2 + 1/2), so the leading law is
    // -(2/pi)(5/4) / r^5 for <B^2>, i.e. -5/(16 pi^2 r^5) as a density.
    const double dm = density_around_atom(unit_atom(), r, FieldKind::Magnetic);
    CHECK(dm == rel(-5.0 / (16.0 * kPi * kPi * std::pow(r, 5)), 1e-2));

    // Log-slopes: -6 electric, -5 magnetic.
    const double de2 =
        density_around_atom(unit_atom(), 2.0 * r, FieldKind::Electric);
    const double dm2 =
        density_around_atom(unit_atom(), 2.0 * r, FieldKind::Magnetic);
    CHECK(std::log2(de2 / de) == rel(-6.0, 5e-3));
    CHECK(std::log2(dm2 / dm) == rel(-5.0, 5e-3));

    // Electric positive, magnetic negative at every distance.
    for (int n = 0; n <= 12; ++n) {
        const double radius = 1e-3 * lambda * std::pow(10.0, n / 2.0);
        CHECK(density_around_atom(unit_atom(), radius, FieldKind::Electric) >
              0.0);
        CHECK(density_around_atom(unit_atom(), radius, FieldKind::Magnetic) <
              0.0);
    }
}

TEST_CASE("density-route interaction energies") {
    SUBCASE("far zone reproduces both dispersion forms") {
        const double r = 1e3 * 2.0 * kPi;
        const EnergyResult ee =
            density_route_energy(unit_atom(), 0.8, FieldKind::Electric, r);
        CHECK(ee.value == rel(cp_far(1.0, 0.8, r), 1e-3));
        CHECK(ee.regime == Regime::Far);
        CHECK(ee.notes.empty());

        const EnergyResult em =
            density_route_energy(unit_atom(), 0.8, FieldKind::Magnetic, r);
        CHECK(em.value == rel(cp_far_electric_magnetic(1.0, 0.8, r), 1e-3));
        CHECK(em.value > 0.0);
    }

    SUBCASE("static source: the route is the closed form at any distance") {
        // With constant alpha the u-integral is a pure gamma-function sum:
        // 23/4 electric, 7/4 magnetic, making the identities exact.
        const PolarizabilityModel source = PolarizabilityModel::from_static(2.0);
        for (double r : {0.3, 1.0, 40.0}) {
            const EnergyResult ee =
                density_route_energy(source, 0.7, FieldKind::Electric, r);
            CHECK(ee.value == rel(cp_far(2.0, 0.7, r), 1e-9));
            CHECK(ee.regime == Regime::Far);
            CHECK(ee.notes.empty());

            const EnergyResult em =
                density_route_energy(source, 0.7, FieldKind::Magnetic, r);
            CHECK(em.value == rel(cp_far_electric_magnetic(2.0, 0.7, r), 1e-9));
        }
    }

    SUBCASE("below the far zone the result carries a validity warning") {
        const double lambda = 2.0 * kPi;
        const EnergyResult mid =
            density_route_energy(unit_atom(), 1.0, FieldKind::Electric, lambda);
        CHECK(mid.regime == Regime::Intermediate);
        CHECK(mid.notes.find("warning") != std::string::npos);

        const EnergyResult close = density_route_energy(
            unit_atom(), 1.0, FieldKind::Electric, 1e-3 * lambda);
        CHECK(close.regime == Regime::Near);
        CHECK(close.notes.find("far zone") != std::string::npos);
    }

    CHECK_THROWS_AS(
        density_route_energy(unit_atom(), 1.0, FieldKind::Electric, -1.0),
        DomainError);
}

TEST_CASE("density profiles") {
    const std::vector<double> radii{0.5, 1.0, 2.0};

    const DensityProfile rotated = density_profile(unit_atom(), radii);
    CHECK(rotated.representation ==
          DensityRepresentation::RotatedSingleIntegral);
    REQUIRE(rotated.radii == radii);
    REQUIRE(rotated.electric.size() == radii.size());
    REQUIRE(rotated.magnetic.size() == radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        CHECK(rotated.electric[i] ==
              density_around_atom(unit_atom(), radii[i], FieldKind::Electric));
        CHECK(rotated.magnetic[i] ==
              density_around_atom(unit_atom(), radii[i], FieldKind::Magnetic));
    }

    const DensityProfile far =
        density_profile(unit_atom(), radii, DensityRepresentation::FarClosedForm);
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double r7 = std::pow(radii[i], 7);
        CHECK(far.electric[i] == rel(23.0 / (16.0 * kPi * kPi * r7), 1e-15));
        CHECK(far.magnetic[i] == rel(-7.0 / (16.0 * kPi * kPi * r7), 1e-15));
    }

    CHECK(std::string(density_representation_name(
              DensityRepresentation::RotatedSingleIntegral)) ==
          "rotated-single-integral");
    CHECK(std::string(density_representation_name(
              DensityRepresentation::FarClosedForm)) == "far-closed-form");

    CHECK_THROWS_AS(density_profile(unit_atom(), {1.0, -2.0}), DomainError);
    CHECK_THROWS_AS(density_profile(unit_atom(), {1.0, -2.0},
                                    DensityRepresentation::FarClosedForm),
                    DomainError);
}
