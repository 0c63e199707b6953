#pragma once
/**
 * vacuum_density.hpp - Renormalized vacuum field energy densities around a
 * ground-state atom and near a perfectly conducting plate, and the
 * density-route interaction energies they imply for a far polarizable probe.
 *
 * Densities are energy per volume in natural units; the field-squared
 * expectations relate to densities by <X^2> = 8 pi * density.
 */

#include <string>
#include <vector>

#include "polder/core.hpp"
#include "polder/polarizability.hpp"
#include "polder/quadrature.hpp"

namespace polder {

// ============================================================================
// Radial profiles
// ============================================================================

enum class DensityRepresentation {
    RotatedSingleIntegral,  // imaginary-axis single integral (any r)
    FarClosedForm,          // static far-zone r^-7 closed form
};

const char* density_representation_name(DensityRepresentation rep);

struct DensityProfile {
    std::vector<double> radii;
    std::vector<double> electric;
    std::vector<double> magnetic;
    DensityRepresentation representation =
        DensityRepresentation::RotatedSingleIntegral;
};

// ============================================================================
// Operations
// ============================================================================

// Renormalized vacuum energy density at distance r from a ground-state
// electric-dipole atom, from the imaginary-axis representation:
//
//   <E^2>(r) = +(2/pi) Int du alpha(iu) u^6 e^{-2ur}
//                 (1/u^2r^2 + 2/u^3r^3 + 5/u^4r^4 + 6/u^5r^5 + 3/u^6r^6)
//   <B^2>(r) = -(2/pi) Int du alpha(iu) u^6 e^{-2ur}
//                 (1/u^2r^2 + 2/u^3r^3 + 1/u^4r^4)
//
// and density = <X^2> / 8 pi. The electric density is positive and the
// magnetic one negative at every distance.
double density_around_atom(const PolarizabilityModel& model, double r,
                           FieldKind field, const QuadratureSpec& quad = {});

// Interaction energy of a far polarizable probe with the source atom's
// vacuum density: -(probe_alpha/2) <E^2> (electric probe) or
// -(probe_alpha/2) <B^2> (magnetic probe). Rigorously a far-zone route: for
// r below 1e2 lambda_min of the source a warning is attached in notes.
EnergyResult density_route_energy(const PolarizabilityModel& source_model,
                                  double probe_alpha, FieldKind probe_kind,
                                  double r, const QuadratureSpec& quad = {});

// Renormalized densities at distance z from a perfectly conducting plate:
// electric +3/(32 pi^2 z^4), magnetic -3/(32 pi^2 z^4). The surface value
// diverges; z must be positive.
double plate_density(double z, FieldKind field);

// Radial profile over the given radii, both field kinds at once. The
// far-closed-form representation uses the static polarizability and the
// r^-7 law; the rotated representation integrates at every radius.
DensityProfile density_profile(const PolarizabilityModel& model,
                               const std::vector<double>& radii,
                               DensityRepresentation representation =
                                   DensityRepresentation::RotatedSingleIntegral,
                               const QuadratureSpec& quad = {});

}  // namespace polder
