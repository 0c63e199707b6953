/**
 * resonance.cpp - Inertial resonance interaction of an entangled atom pair.
 */

#include "polder/resonance.hpp"

#include <cmath>

namespace polder {

void validate_bell_pair(const BellPairSpec& spec) {
    const double k_a = spec.atom_a.k0;
    const double k_b = spec.atom_b.k0;
    if (!(k_a > 0.0) || !(k_b > 0.0))
        throw DomainError(
            "bell pair: transition wavenumbers must be positive");
    if (std::abs(k_a - k_b) > 1e-12 * k_a)
        throw DomainError(
            "bell pair: the two atoms must be identical (equal transition "
            "wavenumbers within 1e-12 relative)");
    if (!(spec.r_vec.norm() > kDegenerateLength))
        throw DomainError("bell pair: separation must be nonzero");
}

EnergyResult resonance_energy(const BellPairSpec& spec) {
    validate_bell_pair(spec);
    const double r = spec.r_vec.norm();
    const Vec3 rh = spec.r_vec * (1.0 / r);
    const double k0 = spec.atom_a.k0;
    const double x = k0 * r;
    const double cx = std::cos(x);
    const double sx = std::sin(x);
    const double rhat[3] = {rh.x, rh.y, rh.z};
    const double mu_a[3] = {spec.atom_a.dipole.x, spec.atom_a.dipole.y,
                            spec.atom_a.dipole.z};
    const double mu_b[3] = {spec.atom_b.dipole.x, spec.atom_b.dipole.y,
                            spec.atom_b.dipole.z};

    double sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double d = (i == j) ? 1.0 : 0.0;
            const double near_tensor = d - 3.0 * rhat[i] * rhat[j];
            const double wave_tensor = d - rhat[i] * rhat[j];
            sum += mu_a[i] * mu_b[j] *
                   (near_tensor * (cx + x * sx) - wave_tensor * x * x * cx);
        }
    }
    const double sign = (spec.parity == Parity::Symmetric) ? 1.0 : -1.0;

    EnergyResult result;
    result.value = sign * sum / (r * r * r);
    result.regime =
        (x < 1e-2) ? Regime::Near : ((x > 1e2) ? Regime::Far
                                               : Regime::Intermediate);
    result.notes = "spontaneous decay neglected";
    return result;
}

}  // namespace polder
