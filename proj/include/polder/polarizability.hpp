#pragma once
/**
 * polarizability.hpp - Atomic dynamic polarizability models.
 *
 * Isotropic discrete-transition model (natural units, E = hbar c k):
 *
 *   alpha(k)  = (2/3) sum_m k_m |mu_m|^2 / (k_m^2 - k^2)   real wavenumber
 *   alpha(iu) = (2/3) sum_m k_m |mu_m|^2 / (k_m^2 + u^2)   imaginary axis
 *
 * Transition wavenumbers k_m are inverse lengths, squared dipole matrix
 * elements |mu_m|^2 carry energy x volume, so alpha is a volume. All
 * dispersion pipelines consume alpha on the imaginary axis; the real-axis
 * form exists for diagnostics and excludes its poles instead of taking
 * principal values. No linewidth/damping is modeled.
 */

#include <optional>
#include <string>
#include <vector>

#include "polder/core.hpp"

namespace polder {

struct Transition {
    double k = 0.0;    // transition wavenumber E_mg / (hbar c), > 0
    double mu2 = 0.0;  // squared dipole matrix element |mu^mg|^2, >= 0
};

enum class FieldKind { Electric, Magnetic };

class PolarizabilityModel {
  public:
    // Discrete-transition model; throws DomainError on k <= 0 or mu2 < 0.
    static PolarizabilityModel from_transitions(
        std::vector<Transition> transitions);

    // Fixed static polarizability, returned at every wavenumber.
    static PolarizabilityModel from_static(double alpha_static);

    // alpha(iu) for u >= 0: positive, monotonically decreasing, -> 0.
    double alpha_imag(double u) const;

    // alpha(k) on the real axis (diagnostics only). Throws PoleError within
    // the pole-exclusion width 1e-6 k_m of any transition.
    double alpha_real(double k) const;

    double alpha_static() const;

    bool has_transitions() const { return !transitions_.empty(); }
    const std::vector<Transition>& transitions() const { return transitions_; }
    std::optional<double> static_override() const { return static_override_; }

    // Largest transition wavenumber (0 for static-only models); sets the
    // near/far regime length scale lambda_min = 2 pi / k_max.
    double max_transition_wavenumber() const;

  private:
    std::vector<Transition> transitions_;
    std::optional<double> static_override_;
};

// Two-level atom with a real dipole matrix element vector; used by the
// resonance interactions and the excited-state three-body term.
struct TwoLevelAtom {
    double k0 = 0.0;  // transition wavenumber omega0 / c, > 0
    Vec3 dipole;      // real dipole matrix element
    Vec3 position;
};

// Excited-state dynamic polarizability of the isotropically averaged
// two-level atom on the imaginary axis:
//
//   alpha_es(iu) = -(2/3) k0 |mu|^2 / (k0^2 + u^2)
//
// i.e. the ground-state single-transition form with the sign of the
// transition energy flipped. The conventional isotropic 1/3 is applied here;
// the directional (tensor) variant appears only inside the three-body
// machinery where the index structure is needed.
double alpha_excited_two_level(const TwoLevelAtom& atom, double u);

// ============================================================================
// JSON atom descriptions (CLI interface)
// ============================================================================
// Schema: {"name": string,
//          "transitions": [{"k": number, "mu2": number}, ...],
//          "static": optional number,
//          "kind": "electric" | "magnetic"}
// Exactly one of "transitions" (non-empty) or "static" must be given.

struct AtomDescription {
    std::string name;
    PolarizabilityModel model;
    FieldKind kind = FieldKind::Electric;
};

// Parses the schema above; throws DomainError with a schema-path diagnostic
// on malformed input.
AtomDescription atom_from_json_text(const std::string& json_text);

// Canonical re-serialization (sorted keys, full precision); used for config
// hashing so that semantically identical descriptions hash identically.
std::string atom_to_json_text(const AtomDescription& atom);

const char* field_kind_name(FieldKind kind);

}  // namespace polder
