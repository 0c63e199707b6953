#pragma once
/**
 * two_body.hpp - Two-atom dispersion interaction: the all-distance integral,
 * its London (near-zone) and Casimir-Polder (far-zone) limits, the
 * electric-magnetic far-zone cross term, an independent correlation-route
 * pipeline used as a cross-check, and distance-regime classification
 * including the thermal length.
 *
 * All energies are in natural units (hbar = c = 1): E has dimension of
 * inverse length, polarizabilities are volumes, temperatures are inverse
 * lengths.
 */

#include <optional>
#include <string>

#include "polder/core.hpp"
#include "polder/polarizability.hpp"
#include "polder/quadrature.hpp"

namespace polder {

// ============================================================================
// Pair description
// ============================================================================

struct PairSpec {
    PolarizabilityModel model_a;
    PolarizabilityModel model_b;
    FieldKind kind_a = FieldKind::Electric;
    FieldKind kind_b = FieldKind::Electric;
    double r = 0.0;  // interatomic separation, > 0
};

// ============================================================================
// Regime classification
// ============================================================================

struct RegimeReport {
    Regime regime = Regime::Intermediate;
    double lambda_min = 0.0;   // shortest transition wavelength of the pair
    double rho_thermal = 0.0;  // thermal length 1/(2 pi T); 0 without T
    bool thermal = false;      // separation beyond the thermal length
    std::string scaling_law;   // asymptotic distance law for the regime
};

// Distance-zone classification: near for r < 1e-2 lambda_min, far for
// r > 1e2 lambda_min, intermediate between. With a temperature the thermal
// length rho = 1/(2 pi T) is computed and r > 10 rho flags the very-long-
// distance regime with its linear-in-T r^-6 law.
RegimeReport classify_regime(const PolarizabilityModel& model_a,
                             const PolarizabilityModel& model_b, double r,
                             std::optional<double> temperature = std::nullopt);

// ============================================================================
// Dispersion energies
// ============================================================================

// Full two-atom dispersion energy, valid at any separation:
//
//   E(r) = -(1/pi) Integral du alpha_A(iu) alpha_B(iu) u^6 e^{-2ur}
//              * (1/u^2r^2 + 2/u^3r^3 + 5/u^4r^4 + 6/u^5r^5 + 3/u^6r^6)
//
// Requires transition-based models for both (electric) atoms.
EnergyResult cp_full(const PairSpec& pair, const QuadratureSpec& quad = {});

// Near-zone London limit: -(2/3) sum_{ps} mu2_Ap mu2_Bs / (k_p + k_s) / r^6.
double london_near(const PolarizabilityModel& model_a,
                   const PolarizabilityModel& model_b, double r);

// Far-zone Casimir-Polder limit for two electric atoms:
// -23 alpha_A alpha_B / (4 pi r^7).
double cp_far(double alpha_a, double alpha_b, double r);

// Far-zone cross term for one electric and one magnetic atom:
// +7 alpha_E alpha_M / (4 pi r^7), repulsive.
double cp_far_electric_magnetic(double alpha_e, double alpha_m, double r);

// Independent pipeline: the same energy assembled from the imaginary-axis
// field kernel W_ij contracted with itself (the correlation / induced-dipole
// route), rather than from the analytic radial bracket. Returns the energy
// plus its relative deviation from cp_full; a deviation above 1e-6 throws
// ConsistencyError.
struct CorrelationCheck {
    EnergyResult energy;
    double deviation = 0.0;  // |corr - full| / |full|
};

CorrelationCheck cp_via_correlation(const PairSpec& pair,
                                    const QuadratureSpec& quad = {});

}  // namespace polder
