#pragma once
/**
 * quadrature.hpp - Adaptive integration over the semi-infinite axis.
 *
 * Every dispersion quantity in this library reduces to an integral over the
 * imaginary-frequency axis u in [0, inf). Integrands decay exponentially
 * (e^{-2ur}) or as inverse powers (dynamic polarizabilities fall off as
 * u^-2), so the machinery maps u = t/(1-t) onto [0,1) and adaptively bisects
 * with an embedded Gauss-Kronrod 7/15 pair. The rule is open (no endpoint
 * evaluations), which also tolerates mild u^-p endpoint behavior with p < 1.
 */

#include <functional>

#include "polder/core.hpp"

namespace polder {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-30;  // absolute floor, natural units
    int max_subdivisions = 2000;
};

// Throws DomainError unless rel_tol lies in (0, 1e-2] and max_subdivisions
// is at least 10. Every integration entry point validates implicitly; front
// ends that amortize one spec over many evaluations can validate eagerly.
void validate(const QuadratureSpec& spec);

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

// Integral of f over [0, infinity). Throws DomainError if the integrand
// produces a non-finite value, ConvergenceError (carrying the best estimate)
// if the subdivision budget is exhausted before the tolerance is met.
IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       const QuadratureSpec& spec = {});

// Integral of g(u) e^{-s u} over [0, infinity) for s > 0. Equivalent to
// integrate_semi_infinite on the full integrand but with nodes placed on the
// characteristic scale 1/s (internal substitution u = v/s), which keeps
// far-zone integrands well resolved without a tail-cutoff parameter.
IntegralResult integrate_exp_weighted(const std::function<double(double)>& g,
                                      double s, const QuadratureSpec& spec = {});

}  // namespace polder
