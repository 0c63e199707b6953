/**
 * core.cpp - Unit conversions and geometric preprocessing.
 */

#include "polder/core.hpp"

namespace polder {

// ============================================================================
// Unit systems
// ============================================================================

double UnitSystem::factor(QuantityKind kind) const {
    switch (kind) {
        case QuantityKind::Length: return length;
        case QuantityKind::Energy: return energy;
        case QuantityKind::Temperature: return temperature;
        case QuantityKind::Acceleration: return acceleration;
        case QuantityKind::PolarizabilityVolume: return polarizability;
    }
    throw DomainError("convert_units: unknown quantity kind");
}

UnitSystem natural_units() {
    return UnitSystem{UnitSystemId::Natural, 1.0, 1.0, 1.0, 1.0, 1.0};
}

UnitSystem atomic_units() {
    // Lengths are Bohr in both systems. One Hartree equals alpha inverse-Bohr
    // (E = hbar c k), so energies and temperatures scale by the fine-structure
    // constant; the atomic acceleration unit a0 (E_h/hbar)^2 becomes alpha^2
    // inverse-Bohr once divided by c^2.
    const double a = kFineStructure;
    return UnitSystem{UnitSystemId::Atomic, 1.0, a, a, a * a, 1.0};
}

UnitSystem si_units() {
    // Factors convert one SI unit into natural units; used only when
    // formatting output (meter -> Bohr, Joule -> Bohr^-1, Kelvin -> Bohr^-1,
    // m/s^2 -> Bohr^-1, m^3 -> Bohr^3).
    const double hbar_c = kHbarJouleSeconds * kSpeedOfLight;  // [J m]
    return UnitSystem{UnitSystemId::SiOutputOnly,
                      1.0 / kBohrMeters,
                      kBohrMeters / hbar_c,
                      kBoltzmannJoulePerK * kBohrMeters / hbar_c,
                      kBohrMeters / (kSpeedOfLight * kSpeedOfLight),
                      1.0 / (kBohrMeters * kBohrMeters * kBohrMeters)};
}

double convert_units(double value, QuantityKind kind, const UnitSystem& from,
                     const UnitSystem& to) {
    if (from.id == UnitSystemId::SiOutputOnly) {
        throw DomainError(
            "convert_units: SI is an output-only unit system and cannot be a "
            "conversion source");
    }
    if (from.id == to.id) return value;  // exact identity, no rounding
    return value * (from.factor(kind) / to.factor(kind));
}

// ============================================================================
// Geometry
// ============================================================================

TriangleGeometry make_triangle(const Vec3& pos_a, const Vec3& pos_b,
                               const Vec3& pos_c) {
    TriangleGeometry g;
    g.pos_a = pos_a;
    g.pos_b = pos_b;
    g.pos_c = pos_c;
    g.alpha_vec = pos_c - pos_b;
    g.beta_vec = pos_c - pos_a;
    g.gamma_vec = pos_b - pos_a;
    g.alpha = g.alpha_vec.norm();
    g.beta = g.beta_vec.norm();
    g.gamma = g.gamma_vec.norm();
    if (g.alpha < kDegenerateLength || g.beta < kDegenerateLength ||
        g.gamma < kDegenerateLength) {
        throw DomainError(
            "make_triangle: coincident atoms (degenerate geometry)");
    }
    return g;
}

ImageGeometry image_geometry(const Vec3& pos_a, const Vec3& pos_b) {
    if (pos_a.z <= 0.0 || pos_b.z <= 0.0) {
        throw DomainError(
            "image_geometry: atom at or below the conducting plate (z <= 0)");
    }
    const Vec3 direct = pos_b - pos_a;
    const Vec3 mirror_a{pos_a.x, pos_a.y, -pos_a.z};  // sigma = diag(1,1,-1)
    const Vec3 image = pos_b - mirror_a;

    ImageGeometry g;
    g.r = direct.norm();
    g.r_bar = image.norm();
    if (g.r < kDegenerateLength) {
        throw DomainError("image_geometry: coincident atoms");
    }
    const double cz = (pos_b.z - pos_a.z) / g.r;
    const double cz_bar = (pos_b.z + pos_a.z) / g.r_bar;
    // Clamp against rounding; both values live in [0, 1] by construction.
    g.sin2_theta = std::fmax(0.0, std::fmin(1.0, 1.0 - cz * cz));
    g.sin2_theta_bar = std::fmax(0.0, std::fmin(1.0, 1.0 - cz_bar * cz_bar));
    return g;
}

// ============================================================================
// Results
// ============================================================================

const char* regime_name(Regime regime) {
    switch (regime) {
        case Regime::Near: return "near";
        case Regime::Intermediate: return "intermediate";
        case Regime::Far: return "far";
        case Regime::Thermal: return "thermal";
        case Regime::AcceleratedThermal: return "accelerated-thermal";
        case Regime::AcceleratedBeyond: return "accelerated-beyond";
    }
    return "unknown";
}

}  // namespace polder
