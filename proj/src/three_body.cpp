/**
 * three_body.cpp - Non-additive three-body dispersion energies.
 */

#include "polder/three_body.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <unordered_map>

namespace polder {

namespace {

void check_geometry(const TriangleGeometry& g, const char* op) {
    if (g.alpha_vec.norm() < kDegenerateLength ||
        g.beta_vec.norm() < kDegenerateLength ||
        g.gamma_vec.norm() < kDegenerateLength)
        throw DomainError(std::string(op) + ": degenerate triangle geometry");
}

// Triangle-wide regime tag: near only if even the longest side is deep in
// the nonretarded zone, far only if even the shortest side is deep in the
// retarded zone.
Regime triangle_regime(double k_max, const TriangleGeometry& g) {
    if (!(k_max > 0.0)) return Regime::Near;
    const double lambda_min = 2.0 * kPi / k_max;
    const double side_max =
        std::max({g.alpha, g.beta, g.gamma});
    const double side_min =
        std::min({g.alpha, g.beta, g.gamma});
    if (side_max < 1e-2 * lambda_min) return Regime::Near;
    if (side_min > 1e2 * lambda_min) return Regime::Far;
    return Regime::Intermediate;
}

// The sixth-order chain amplifies integrand noise by roughly (1/h)^6, so the
// inner u-integrals run at a much tighter relative tolerance than the
// caller's default. A stagnating refinement at that level still carries a
// usable best estimate, which we accept rather than abort the whole chain.
QuadratureSpec tightened(const QuadratureSpec& quad) {
    QuadratureSpec tight = quad;
    tight.rel_tol = std::min(quad.rel_tol, 3e-14);
    tight.max_subdivisions = std::max(quad.max_subdivisions, 400);
    return tight;
}

double lenient_exp_weighted(const std::function<double(double)>& g, double s,
                            const QuadratureSpec& quad) {
    try {
        return integrate_exp_weighted(g, s, quad).value;
    } catch (const ConvergenceError& stalled) {
        return stalled.best_estimate;
    }
}

// Chains whose scalar function is built from the double-precision inner
// integral cannot run at the analytic-chain step: the ~1e-14 relative noise
// of each integral value, amplified by the h^-6 cancellation of the chain,
// swamps the Richardson sequence below a relative step of about 0.05. Clamp
// the finest step upward there; truncation at {0.05, 4 levels} stays near
// 1e-5 relative, far inside every consumer tolerance of these energies.
DiffSpec integral_backed(DiffSpec diff) {
    diff.base_step = std::max(diff.base_step, 0.05);
    return diff;
}

}  // namespace

// ============================================================================
// Ground state
// ============================================================================

EnergyResult three_body_full(const TripleSpec& spec, const QuadratureSpec& quad,
                             const DiffSpec& diff) {
    check_geometry(spec.geometry, "three_body_full");
    if (!spec.model_a.has_transitions() || !spec.model_b.has_transitions() ||
        !spec.model_c.has_transitions())
        throw DomainError(
            "three_body_full: transition-based models are required for all "
            "three atoms");

    const QuadratureSpec tight = tightened(quad);
    const double s_ref =
        spec.geometry.alpha + spec.geometry.beta + spec.geometry.gamma;

    // I(s) = Int du alpha_A alpha_B alpha_C(iu) e^{-us}, memoized on s at
    // 1e-12 relative resolution: the chain's ~10^3 samples hit repeated
    // perimeter values (shared center point across levels, symmetric
    // offsets), and the integral is by far the dominant cost.
    auto cache = std::make_shared<std::unordered_map<long long, double>>();
    auto triple_alpha = [&](double u) {
        return spec.model_a.alpha_imag(u) * spec.model_b.alpha_imag(u) *
               spec.model_c.alpha_imag(u);
    };
    auto integral_i = [cache, triple_alpha, tight, s_ref](double s) {
        const long long key = llround((s / s_ref) * 1e12);
        auto found = cache->find(key);
        if (found != cache->end()) return found->second;
        const double value = lenient_exp_weighted(triple_alpha, s, tight);
        (*cache)[key] = value;
        return value;
    };

    auto f = [integral_i](const Vec3L& a, const Vec3L& b,
                          const Vec3L& c) -> long double {
        const long double na = a.norm();
        const long double nb = b.norm();
        const long double nc = c.norm();
        const long double s = na + nb + nc;
        return static_cast<long double>(integral_i(static_cast<double>(s))) /
               (na * nb * nc);
    };

    const ChainResult chain =
        apply_f_chain(f, spec.geometry, integral_backed(diff));

    EnergyResult result;
    result.value = -chain.value / kPi;
    result.abs_error_estimate = chain.abs_error / kPi;
    const double k_max = std::max({spec.model_a.max_transition_wavenumber(),
                                   spec.model_b.max_transition_wavenumber(),
                                   spec.model_c.max_transition_wavenumber()});
    result.regime = triangle_regime(k_max, spec.geometry);
    return result;
}

EnergyResult three_body_far(double alpha_a, double alpha_b, double alpha_c,
                            const TriangleGeometry& geometry,
                            const DiffSpec& diff) {
    check_geometry(geometry, "three_body_far");

    auto f = [](const Vec3L& a, const Vec3L& b, const Vec3L& c) -> long double {
        const long double na = a.norm();
        const long double nb = b.norm();
        const long double nc = c.norm();
        return 1.0L / (na * nb * nc * (na + nb + nc));
    };
    const ChainResult chain = apply_f_chain(f, geometry, diff);

    EnergyResult result;
    const double product = alpha_a * alpha_b * alpha_c;
    result.value = -product * chain.value / kPi;
    result.abs_error_estimate = std::abs(product) * chain.abs_error / kPi;
    result.regime = Regime::Far;
    result.notes = "static far-zone form";
    return result;
}

double three_body_equilateral_far(double alpha_a, double alpha_b,
                                  double alpha_c, double r) {
    if (!(r > 0.0))
        throw DomainError(
            "three_body_equilateral_far: side length must be positive");
    const double coefficient = 16.0 * 79.0 / 243.0;  // 2^4 * 79 / 3^5
    return coefficient * alpha_a * alpha_b * alpha_c /
           (kPi * std::pow(r, 10));
}

// ============================================================================
// One excited atom
// ============================================================================

ExcitedThreeBodyResult three_body_excited(const TwoLevelAtom& atom_a,
                                          const PolarizabilityModel& model_b,
                                          const PolarizabilityModel& model_c,
                                          const TriangleGeometry& geometry,
                                          const QuadratureSpec& quad,
                                          const DiffSpec& diff) {
    check_geometry(geometry, "three_body_excited");
    if (!(atom_a.k0 > 0.0))
        throw DomainError(
            "three_body_excited: excited atom needs a positive transition "
            "wavenumber");
    if (!model_b.has_transitions() || !model_c.has_transitions())
        throw DomainError(
            "three_body_excited: transition-based models are required for "
            "atoms B and C");

    const double mu2 = atom_a.dipole.dot(atom_a.dipole);
    const double k0 = atom_a.k0;
    const double perimeter = geometry.alpha + geometry.beta + geometry.gamma;

    // The resonant chain differentiates cos(k0 * (combinations of side
    // lengths)); the finite-difference steps must resolve that oscillation,
    // so cap the relative step well inside a wavelength across the triangle.
    DiffSpec capped = diff;
    capped.base_step =
        std::min(diff.base_step, 0.4 / (1.0 + k0 * perimeter));
    if (capped.base_step <= 1e-6)
        throw DomainError(
            "three_body_excited: geometry spans too many resonance "
            "wavelengths for the differentiation engine");

    // Resonant photon-exchange term.
    const double alpha_b_k0 = model_b.alpha_real(k0);
    const double alpha_c_k0 = model_c.alpha_real(k0);
    auto f_res = [k0](const Vec3L& a, const Vec3L& b,
                      const Vec3L& c) -> long double {
        const long double na = a.norm();
        const long double nb = b.norm();
        const long double nc = c.norm();
        const long double k = static_cast<long double>(k0);
        return (cosl(k * (nb - nc + na)) + cosl(k * (nb - nc - na))) /
               (na * nb * nc);
    };
    const ChainResult res_chain = apply_f_chain(f_res, geometry, capped);
    const double resonant =
        -(mu2 / 3.0) * alpha_b_k0 * alpha_c_k0 * res_chain.value;
    const double resonant_err =
        std::abs(mu2 / 3.0 * alpha_b_k0 * alpha_c_k0) * res_chain.abs_error;

    // Dispersive term: ground-state structure with the (negative-valued)
    // excited-state polarizability of A inside the integral.
    const QuadratureSpec tight = tightened(quad);
    auto cache = std::make_shared<std::unordered_map<long long, double>>();
    auto triple_alpha = [&](double u) {
        return alpha_excited_two_level(atom_a, u) * model_b.alpha_imag(u) *
               model_c.alpha_imag(u);
    };
    auto integral_i = [cache, triple_alpha, tight, perimeter](double s) {
        const long long key = llround((s / perimeter) * 1e12);
        auto found = cache->find(key);
        if (found != cache->end()) return found->second;
        const double value = lenient_exp_weighted(triple_alpha, s, tight);
        (*cache)[key] = value;
        return value;
    };
    auto f_disp = [integral_i](const Vec3L& a, const Vec3L& b,
                               const Vec3L& c) -> long double {
        const long double na = a.norm();
        const long double nb = b.norm();
        const long double nc = c.norm();
        const long double s = na + nb + nc;
        return static_cast<long double>(integral_i(static_cast<double>(s))) /
               (na * nb * nc);
    };
    // No oscillation cap here: the dispersive integrand decays monotonically
    // on the imaginary axis, but it is integral-backed like the ground-state
    // chain and needs the same step floor.
    const ChainResult disp_chain =
        apply_f_chain(f_disp, geometry, integral_backed(diff));
    const double dispersive = -disp_chain.value / kPi;

    ExcitedThreeBodyResult result;
    result.resonant = resonant;
    result.dispersive = dispersive;
    result.total.value = resonant + dispersive;
    result.total.abs_error_estimate =
        resonant_err + disp_chain.abs_error / kPi;
    const double k_max = std::max({k0, model_b.max_transition_wavenumber(),
                                   model_c.max_transition_wavenumber()});
    result.total.regime = triangle_regime(k_max, geometry);
    result.total.notes = "spontaneous decay of the excited atom neglected";
    return result;
}

}  // namespace polder
