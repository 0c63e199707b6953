#pragma once
/**
 * boundary.hpp - Interactions in the presence of a perfectly conducting
 * plane at z = 0: the atom-wall energy and force, and the two-atom
 * dispersion energy modified by the plate (direct + image + cross terms).
 *
 * All closed forms here are far-zone (static-polarizability) expressions; a
 * validity note rides on every result.
 */

#include <string>

#include "polder/core.hpp"
#include "polder/polarizability.hpp"
#include "polder/quadrature.hpp"

namespace polder {

// ============================================================================
// Scene description
// ============================================================================

// Two atoms above the perfectly reflecting plate at z = 0.
struct PlateScene {
    double alpha_a = 0.0;  // static polarizability volumes
    double alpha_b = 0.0;
    Vec3 pos_a;  // z > 0
    Vec3 pos_b;  // z > 0
};

// ============================================================================
// Atom-wall interaction
// ============================================================================

struct AtomWallResult {
    double energy = 0.0;  // -3 alpha / (8 pi z^4)
    double force = 0.0;   // -3 alpha / (2 pi z^5), negative = toward plate
    std::string notes;    // far-zone validity reminder
};

AtomWallResult atom_wall(double alpha, double z);

// ============================================================================
// Two atoms near the plate
// ============================================================================

// Far-zone pair energy above the plate: direct two-atom term at separation
// r, the same closed form at the image distance r_bar, and a positive cross
// term mixing the two paths:
//
//   direct = -23 aA aB / (4 pi r^7)
//   image  = -23 aA aB / (4 pi rb^7)
//   cross  = +(8/pi) aA aB / (r^3 rb^3 (r+rb)^5)
//            * [ r^4 s2 + 5 r^3 rb s2 + r^2 rb^2 (6 + s2 + s2b)
//                + 5 r rb^3 s2b + rb^4 s2b ]
//
// with s2 = sin^2(theta), s2b = sin^2(theta_bar) the direct/image angles to
// the plate normal.
struct PlatePairResult {
    ImageGeometry geometry;
    double direct = 0.0;
    double image = 0.0;
    double cross = 0.0;
    EnergyResult total;  // value = direct + image + cross
};

PlatePairResult pair_near_plate(double alpha_a, double alpha_b,
                                const Vec3& pos_a, const Vec3& pos_b);

inline PlatePairResult pair_near_plate(const PlateScene& scene) {
    return pair_near_plate(scene.alpha_a, scene.alpha_b, scene.pos_a,
                           scene.pos_b);
}

// Consistency check, not a production path: the same plate-modified pair
// energy assembled from the imaginary-axis kernel of the direct path minus
// the reflected image path, contracted with itself and integrated. With
// static (constant) polarizability models this reproduces pair_near_plate to
// machine precision; with transition-based models it agrees in the far zone.
double pair_near_plate_via_correlation(const PolarizabilityModel& model_a,
                                       const PolarizabilityModel& model_b,
                                       const Vec3& pos_a, const Vec3& pos_b,
                                       const QuadratureSpec& quad = {});

}  // namespace polder
