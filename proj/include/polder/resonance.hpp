#pragma once
/**
 * resonance.hpp - Resonance interaction of two identical two-level atoms
 * sharing a single excitation in a symmetric or antisymmetric Bell-type
 * state, at rest (inertial case).
 */

#include "polder/core.hpp"
#include "polder/polarizability.hpp"

namespace polder {

enum class Parity {
    Symmetric,      // |phi+>: overall + sign
    Antisymmetric,  // |phi->: overall - sign
};

struct BellPairSpec {
    TwoLevelAtom atom_a;
    TwoLevelAtom atom_b;
    Parity parity = Parity::Symmetric;
    Vec3 r_vec;  // separation vector from B to A
};

// Throws DomainError unless the two atoms share the same transition
// wavenumber (within 1e-12 relative) and the separation is nonzero.
void validate_bell_pair(const BellPairSpec& spec);

// Resonance interaction energy at rest:
//
//   E = +/- mu_Ai mu_Bj [ (d_ij - 3 rh_i rh_j)(cos k0 r + k0 r sin k0 r)
//                        - (d_ij - rh_i rh_j) k0^2 r^2 cos k0 r ] / r^3
//
// The sign follows the parity of the shared state. Spontaneous decay is
// neglected; a validity note rides on the result.
EnergyResult resonance_energy(const BellPairSpec& spec);

}  // namespace polder
