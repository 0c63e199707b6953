#pragma once
/**
 * core.hpp - Units, physical constants, geometric preprocessing, and the
 *            shared result/error types used by every other module.
 *
 * Internal unit system is natural: hbar = c = k_B = 1 with the Bohr radius as
 * the base length. Energies, wavenumbers and temperatures all carry inverse
 * lengths; polarizabilities are volumes. Atomic units (Hartree/Bohr) convert
 * exactly through the fine-structure constant; SI is supported for display
 * output only, never as an internal representation.
 */

#include <cmath>
#include <stdexcept>
#include <string>

namespace polder {

// ============================================================================
// Constants
// ============================================================================

inline constexpr double kPi = 3.14159265358979323846;

inline constexpr const char* kVersion = "1.0.0";

// CODATA 2018 anchors used by the unit conversions.
inline constexpr double kFineStructure = 1.0 / 137.035999084;  // alpha
inline constexpr double kBohrMeters = 5.29177210903e-11;       // a0 [m]
inline constexpr double kHbarJouleSeconds = 1.054571817e-34;   // hbar [J s]
inline constexpr double kBoltzmannJoulePerK = 1.380649e-23;    // k_B [J/K]
inline constexpr double kSpeedOfLight = 2.99792458e8;          // c [m/s]

// Distances below this (in natural length units) are treated as coincident.
inline constexpr double kDegenerateLength = 1e-12;

// ============================================================================
// Errors
// ============================================================================
// Every failure surfaces as an exception rooted at polder::Error. The CLI
// maps DomainError (bad input/config) to exit code 2 and the numerical
// failure types to exit code 3.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid or out-of-domain input (degenerate geometry, z <= 0, bad kind...).
struct DomainError : Error {
    using Error::Error;
};

// Quadrature failed to reach the requested tolerance within its subdivision
// budget; carries the best estimate so callers may still use it knowingly.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& msg, double best, double err)
        : Error(msg), best_estimate(best), error_estimate(err) {}
    double best_estimate;
    double error_estimate;
};

// The Richardson sequence of a nested finite-difference chain failed to
// converge (successive-level differences not shrinking).
struct DifferentiationError : Error {
    using Error::Error;
};

// Two independent computation routes that must agree disagreed beyond the
// permitted tolerance.
struct ConsistencyError : Error {
    using Error::Error;
};

// Dynamic polarizability requested at (or too close to) a transition pole.
struct PoleError : Error {
    using Error::Error;
};

// ============================================================================
// Small vector type
// ============================================================================

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// ============================================================================
// Unit systems
// ============================================================================

enum class UnitSystemId { Natural, Atomic, SiOutputOnly };

enum class QuantityKind {
    Length,
    Energy,
    Temperature,
    Acceleration,
    PolarizabilityVolume,
};

// A unit system is described by the factors converting each quantity kind
// into the internal natural system. SI is accepted as a conversion *target*
// (display) only; converting from SI is rejected.
struct UnitSystem {
    UnitSystemId id = UnitSystemId::Natural;
    double length = 1.0;          // unit of length, in Bohr
    double energy = 1.0;          // unit of energy, in Bohr^-1
    double temperature = 1.0;     // unit of temperature, in Bohr^-1
    double acceleration = 1.0;    // unit of acceleration, in Bohr^-1
    double polarizability = 1.0;  // unit of polarizability, in Bohr^3

    double factor(QuantityKind kind) const;
};

UnitSystem natural_units();
UnitSystem atomic_units();
UnitSystem si_units();  // output formatting only

double convert_units(double value, QuantityKind kind, const UnitSystem& from,
                     const UnitSystem& to);

// ============================================================================
// Geometry
// ============================================================================

// Three atoms A, B, C with the conventional side labels: side alpha joins
// B and C (opposite A), beta joins A and C (opposite B), gamma joins A and B
// (opposite C). Side vectors are kept alongside the lengths because the
// three-body operator chain differentiates with respect to them.
struct TriangleGeometry {
    Vec3 pos_a, pos_b, pos_c;
    Vec3 alpha_vec, beta_vec, gamma_vec;  // C - B, C - A, B - A
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

TriangleGeometry make_triangle(const Vec3& pos_a, const Vec3& pos_b,
                               const Vec3& pos_c);

// Mirror description of an atom pair in front of a perfectly conducting
// plane at z = 0: direct separation r, separation r_bar between one atom and
// the image of the other, and the squared sines of the angles both vectors
// make with the plate normal. Only sin^2 values are stored - that is all the
// closed-form plate energy consumes, and it avoids angle-branch ambiguity.
struct ImageGeometry {
    double r = 0.0, r_bar = 0.0;
    double sin2_theta = 0.0, sin2_theta_bar = 0.0;
};

ImageGeometry image_geometry(const Vec3& pos_a, const Vec3& pos_b);

// ============================================================================
// Results
// ============================================================================

enum class Regime {
    Near,
    Intermediate,
    Far,
    Thermal,
    AcceleratedThermal,
    AcceleratedBeyond,
};

const char* regime_name(Regime regime);

struct EnergyResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    Regime regime = Regime::Intermediate;
    std::string notes;
};

}  // namespace polder
