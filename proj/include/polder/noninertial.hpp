#pragma once
/**
 * noninertial.hpp - Uniformly accelerated atoms: Rindler trajectories, the
 * Unruh temperature, the scalar-field accelerated interaction regimes, and
 * the electromagnetic resonance interaction of two coaccelerated entangled
 * atoms. All results live in the comoving frame, natural units (c = 1).
 */

#include <optional>
#include <string>
#include <vector>

#include "polder/core.hpp"
#include "polder/resonance.hpp"

namespace polder {

// ============================================================================
// Geometry and kinematics
// ============================================================================

// Two atoms with common proper acceleration a along x, separated by z along
// the orthogonal direction. The acceleration sets a length scale z_a = 1/a
// and the Unruh temperature T_U = a / 2 pi.
struct AcceleratedPair {
    double a = 0.0;    // proper acceleration (inverse length)
    double z = 0.0;    // separation orthogonal to the acceleration
    double z_a = 0.0;  // derived: 1/a
    double t_u = 0.0;  // derived: a / (2 pi)
};

AcceleratedPair make_accelerated_pair(double a, double z);

// Two-level atom coupled to a massless scalar field.
struct ScalarAtomPair {
    double omega0 = 0.0;  // transition frequency (inverse length)
    double lambda = 0.0;  // scalar coupling constant
};

struct SpacetimeEvent {
    double t = 0.0, x = 0.0, y = 0.0, z = 0.0;
};

// Hyperbolic Rindler trajectory: t = sinh(a tau)/a, x = cosh(a tau)/a,
// y = 0, z = z0; satisfies x^2 - t^2 = 1/a^2 for every proper time.
SpacetimeEvent rindler_event(double a, double tau, double z0 = 0.0);

// T_U = a / 2 pi in natural units (a >= 0).
double unruh_temperature(double a);

// Oscillation phase of the accelerated resonance interaction:
// Phi = (2 omega0 / a) ln(a z).
double accelerated_phase(double a, double omega0, double z);

// ============================================================================
// Scalar-field accelerated interaction
// ============================================================================

// The scalar interaction has sharply different characters on the two sides
// of z_a. Beyond (z > 10 z_a) a closed form exists; well inside (z < 0.1
// z_a) the pair behaves as if at rest in a thermal bath at T_U and only
// scaling laws are reported; between the two cuts no value is asserted.
struct ScalarCpReport {
    Regime regime = Regime::Intermediate;
    std::optional<double> value;  // only in the beyond regime
    double unruh_temp = 0.0;      // always reported
    std::vector<std::string> scaling_laws;  // thermal-equivalent metadata
    std::string notes;
};

// Beyond-regime value: -lambda^4 / (512 pi^4 omega0^2 a z^4).
ScalarCpReport scalar_cp_accelerated(const ScalarAtomPair& pair,
                                     const AcceleratedPair& acc);

// ============================================================================
// Electromagnetic resonance interaction, coaccelerated pair
// ============================================================================

// Asymptotic resonance energy for z >> z_a (enforced as z >= 10 z_a), with
// separation n = z-hat orthogonal to the acceleration q = x-hat:
//
//   E = +/- mu_Al mu_Bm (1/z^3) {
//         (d_lm - q_l q_m - 2 n_l n_m)
//             [ 2 omega0 z sin(Phi) - (2 omega0^2 z^2/(z a)) cos(Phi) ]
//         + q_l q_m (8/(a z)) cos(Phi) },   Phi = (2 omega0/a) ln(a z)
//
// The pair's separation vector must point along z-hat and agree with acc.z.
EnergyResult resonance_accelerated(const BellPairSpec& spec,
                                   const AcceleratedPair& acc);

}  // namespace polder
