#pragma once
/**
 * three_body.hpp - Non-additive three-atom dispersion energy: the full
 * sixth-order integral, its static far-zone form, the equilateral closed
 * form, and the one-excited-atom variant with its resonant/dispersive
 * breakdown.
 *
 * The geometric engine is the fully contracted operator chain of
 * field_kernels (apply_f_chain); this module supplies the scalar functions
 * the chain differentiates.
 */

#include "polder/core.hpp"
#include "polder/field_kernels.hpp"
#include "polder/polarizability.hpp"
#include "polder/quadrature.hpp"

namespace polder {

// ============================================================================
// Triple description
// ============================================================================

struct TripleSpec {
    PolarizabilityModel model_a;
    PolarizabilityModel model_b;
    PolarizabilityModel model_c;
    TriangleGeometry geometry;
};

// ============================================================================
// Ground-state dispersion
// ============================================================================

// Full three-body energy at any geometry:
//
//   E = -(1/pi) * FChain[ (1/abc) Int du alpha_A alpha_B alpha_C(iu)
//                                        e^{-u(a+b+c)} ]
//
// with the chain's differential operators acting on the formally independent
// vectors and the result evaluated at the physical triangle. The u-integral
// is memoized per a+b+c value (1e-12 relative resolution) across the
// O(10^3) differentiation samples.
//
// Because the inner integral is evaluated in double precision and the
// sixth-order chain amplifies its rounding as h^-6, the finest relative
// differentiation step is clamped to >= 0.05 here (and in the dispersive
// part of three_body_excited); diff.base_step below that is raised. The
// resulting accuracy is ~1e-5 relative on smooth geometries.
EnergyResult three_body_full(const TripleSpec& spec,
                             const QuadratureSpec& quad = {},
                             const DiffSpec& diff = {});

// Static far-zone form: -(1/pi) alpha_A alpha_B alpha_C
//                        * FChain[1/(abc(a+b+c))].
EnergyResult three_body_far(double alpha_a, double alpha_b, double alpha_c,
                            const TriangleGeometry& geometry,
                            const DiffSpec& diff = {});

// Closed form for the equilateral triangle of side r:
// +(2^4 * 79 / 3^5) (1/pi) alpha_A alpha_B alpha_C / r^10.
double three_body_equilateral_far(double alpha_a, double alpha_b,
                                  double alpha_c, double r);

// ============================================================================
// One excited atom
// ============================================================================

// Breakdown of the three-body energy when atom A sits in the excited state
// of a two-level system (spontaneous decay neglected; a validity note is
// attached to the result):
//
//   resonant   = -(|mu_A|^2 / 3) alpha_B(k0) alpha_C(k0)
//                * FChain[(1/abc)(cos(k0(b-c+a)) + cos(k0(b-c-a)))]
//   dispersive = the ground-state integral with alpha_A(iu) replaced by the
//                excited-state two-level polarizability (negative-valued)
//
// Evaluating alpha_B or alpha_C on top of a resonance pole at k0 raises
// PoleError.
struct ExcitedThreeBodyResult {
    double resonant = 0.0;
    double dispersive = 0.0;
    EnergyResult total;  // value = resonant + dispersive
};

ExcitedThreeBodyResult three_body_excited(const TwoLevelAtom& atom_a,
                                          const PolarizabilityModel& model_b,
                                          const PolarizabilityModel& model_c,
                                          const TriangleGeometry& geometry,
                                          const QuadratureSpec& quad = {},
                                          const DiffSpec& diff = {});

}  // namespace polder
