/**
 * noninertial.cpp - Accelerated-atom kinematics and interactions.
 */

#include "polder/noninertial.hpp"

#include <cmath>

namespace polder {

AcceleratedPair make_accelerated_pair(double a, double z) {
    if (!(a > 0.0))
        throw DomainError(
            "accelerated pair: proper acceleration must be positive");
    if (!(z > 0.0))
        throw DomainError("accelerated pair: separation must be positive");
    AcceleratedPair pair;
    pair.a = a;
    pair.z = z;
    pair.z_a = 1.0 / a;
    pair.t_u = a / (2.0 * kPi);
    return pair;
}

SpacetimeEvent rindler_event(double a, double tau, double z0) {
    if (!(a > 0.0))
        throw DomainError("rindler_event: acceleration must be positive");
    SpacetimeEvent event;
    event.t = std::sinh(a * tau) / a;
    event.x = std::cosh(a * tau) / a;
    event.y = 0.0;
    event.z = z0;
    return event;
}

double unruh_temperature(double a) {
    if (!(a >= 0.0))
        throw DomainError(
            "unruh_temperature: acceleration must be nonnegative");
    return a / (2.0 * kPi);
}

double accelerated_phase(double a, double omega0, double z) {
    if (!(a > 0.0) || !(z > 0.0))
        throw DomainError(
            "accelerated_phase: acceleration and separation must be positive");
    return (2.0 * omega0 / a) * std::log(a * z);
}

// ============================================================================
// Scalar-field interaction
// ============================================================================

ScalarCpReport scalar_cp_accelerated(const ScalarAtomPair& pair,
                                     const AcceleratedPair& acc) {
    if (!(pair.omega0 > 0.0))
        throw DomainError(
            "scalar_cp_accelerated: transition frequency must be positive");
    if (!(acc.a > 0.0) || !(acc.z > 0.0))
        throw DomainError(
            "scalar_cp_accelerated: invalid accelerated geometry");

    ScalarCpReport report;
    report.unruh_temp = unruh_temperature(acc.a);

    if (acc.z >= 10.0 * acc.z_a) {
        report.regime = Regime::AcceleratedBeyond;
        const double pi4 = kPi * kPi * kPi * kPi;
        report.value = -std::pow(pair.lambda, 4) /
                       (512.0 * pi4 * pair.omega0 * pair.omega0 * acc.a *
                        std::pow(acc.z, 4));
        report.notes =
            "beyond-z_a regime: faster z^-4 falloff with no inertial "
            "counterpart";
    } else if (acc.z < 0.1 * acc.z_a) {
        report.regime = Regime::AcceleratedThermal;
        // Thermal-equivalent regime: the pair responds as if at rest in a
        // bath at the Unruh temperature. Only the scaling structure is
        // asserted; no closed-form coefficients exist for this case.
        report.scaling_laws = {
            "near zone: z^-2",
            "far zone: z^-3",
            "thermal corrections: T^2",
            "very long distance: T/z^2",
        };
        report.notes =
            "thermal-equivalent regime: behaves as a static pair in a bath "
            "at the Unruh temperature; scaling laws only";
    } else {
        report.regime = Regime::Intermediate;
        report.notes =
            "between 0.1 z_a and 10 z_a no asymptotic form applies; no value "
            "asserted";
    }
    return report;
}

// ============================================================================
// Electromagnetic resonance interaction
// ============================================================================

EnergyResult resonance_accelerated(const BellPairSpec& spec,
                                   const AcceleratedPair& acc) {
    validate_bell_pair(spec);
    if (!(acc.a > 0.0) || !(acc.z > 0.0))
        throw DomainError("resonance_accelerated: invalid accelerated pair");

    const double r = spec.r_vec.norm();
    // The asymptotic form is derived for separation along z-hat, orthogonal
    // to the acceleration direction x-hat.
    if (std::abs(spec.r_vec.x) > 1e-9 * r || std::abs(spec.r_vec.y) > 1e-9 * r)
        throw DomainError(
            "resonance_accelerated: separation must point along z-hat "
            "(orthogonal to the acceleration)");
    if (std::abs(r - acc.z) > 1e-9 * acc.z)
        throw DomainError(
            "resonance_accelerated: pair separation and accelerated geometry "
            "disagree");
    if (acc.z < 10.0 * acc.z_a)
        throw DomainError(
            "resonance_accelerated: outside validity (requires z >= 10 z_a)");

    const double z = acc.z;
    const double a = acc.a;
    const double omega0 = spec.atom_a.k0;
    const double phi = accelerated_phase(a, omega0, z);
    const double sin_phi = std::sin(phi);
    const double cos_phi = std::cos(phi);

    // Bracket multiplying (d - qq - 2nn), and the pure qq piece.
    const double transverse = 2.0 * omega0 * z * sin_phi -
                              (2.0 * omega0 * omega0 * z * z / (z * a)) *
                                  cos_phi;
    const double axial = (8.0 / (a * z)) * cos_phi;

    const double mu_a[3] = {spec.atom_a.dipole.x, spec.atom_a.dipole.y,
                            spec.atom_a.dipole.z};
    const double mu_b[3] = {spec.atom_b.dipole.x, spec.atom_b.dipole.y,
                            spec.atom_b.dipole.z};
    // q = x-hat, n = z-hat: both tensors are diagonal in this frame with
    // (d - qq - 2nn) = diag(0, 1, -1) and qq = diag(1, 0, 0).
    const double diag_transverse[3] = {0.0, 1.0, -1.0};
    const double diag_axial[3] = {1.0, 0.0, 0.0};
    double sum = 0.0;
    for (int l = 0; l < 3; ++l)
        sum += mu_a[l] * mu_b[l] *
               (diag_transverse[l] * transverse + diag_axial[l] * axial);

    const double sign = (spec.parity == Parity::Symmetric) ? 1.0 : -1.0;

    EnergyResult result;
    result.value = sign * sum / (z * z * z);
    result.regime = Regime::AcceleratedBeyond;
    result.notes =
        "comoving frame; asymptotic z >> z_a form; spontaneous decay "
        "neglected";
    return result;
}

}  // namespace polder
