/**
 * quadrature.cpp - Gauss-Kronrod 7/15 adaptive panel integration.
 */

#include "polder/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace polder {

namespace {

// ============================================================================
// Gauss-Kronrod 7/15 rule on [-1, 1]
// ============================================================================
// Abscissae are symmetric about zero; odd indices (plus the center) form the
// embedded 7-point Gauss rule used for the per-panel error estimate.

constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000,
};

constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
};

constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
};

struct Panel {
    double a = 0.0, b = 0.0;
    double value = 0.0;
    double error = 0.0;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const std::function<double(double)>& h, double a, double b,
                     long& evaluations) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    auto sample = [&](double t) {
        const double v = h(t);
        ++evaluations;
        if (!std::isfinite(v)) {
            throw DomainError(
                "integrate: integrand returned a non-finite value");
        }
        return v;
    };

    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 7; ++i) {
        const double fsum =
            sample(center - half * kXgk[i]) + sample(center + half * kXgk[i]);
        kronrod += kWgk[i] * fsum;
        if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
    }
    const double fc = sample(center);
    kronrod += kWgk[7] * fc;
    gauss += kWg[3] * fc;

    Panel p;
    p.a = a;
    p.b = b;
    p.value = kronrod * half;
    p.error = std::abs(kronrod - gauss) * half;
    return p;
}

// Adaptive bisection of h over [a0, b0] driven by a max-error heap. Stops
// when the summed error estimate meets the tolerance, when further splitting
// stagnates at the rounding floor, or when the subdivision budget runs out
// (the latter raises ConvergenceError carrying the best estimate).
IntegralResult adapt(const std::function<double(double)>& h, double a0,
                     double b0, const QuadratureSpec& spec) {
    validate(spec);

    IntegralResult result;
    std::priority_queue<Panel> heap;

    double total_value = 0.0;
    double total_error = 0.0;
    const int initial = 4;
    for (int i = 0; i < initial; ++i) {
        const double a = a0 + (b0 - a0) * i / initial;
        const double b = a0 + (b0 - a0) * (i + 1) / initial;
        Panel p = evaluate_panel(h, a, b, result.evaluations);
        total_value += p.value;
        total_error += p.error;
        heap.push(p);
    }

    auto tolerance = [&] {
        return std::max(spec.rel_tol * std::abs(total_value), spec.abs_tol);
    };

    // Stagnation guard: if the global error estimate stops improving the
    // panels have hit the rounding floor and more splits cannot help.
    double stagnation_reference = total_error;
    int splits_since_reference = 0;
    bool stagnated = false;

    int splits = 0;
    while (total_error > tolerance() && splits < spec.max_subdivisions) {
        Panel worst = heap.top();
        if (worst.b - worst.a < 1e-15) {
            stagnated = true;  // cannot subdivide further in double precision
            break;
        }
        heap.pop();
        total_value -= worst.value;
        total_error -= worst.error;

        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = evaluate_panel(h, worst.a, mid, result.evaluations);
        Panel right = evaluate_panel(h, mid, worst.b, result.evaluations);
        total_value += left.value + right.value;
        total_error += left.error + right.error;
        heap.push(left);
        heap.push(right);
        ++splits;

        if (++splits_since_reference >= 64) {
            if (total_error > 0.99 * stagnation_reference) {
                stagnated = true;
                break;
            }
            stagnation_reference = total_error;
            splits_since_reference = 0;
        }
    }

    result.value = total_value;
    result.error_estimate = total_error;
    if (total_error > tolerance()) {
        throw ConvergenceError(
            stagnated ? "integrate: error estimate stagnated at the rounding "
                        "floor before reaching tolerance"
                      : "integrate: subdivision budget exhausted before "
                        "reaching tolerance",
            total_value, total_error);
    }
    return result;
}

}  // namespace

void validate(const QuadratureSpec& spec) {
    if (spec.rel_tol <= 0.0 || spec.rel_tol > 1e-2) {
        throw DomainError("QuadratureSpec: rel_tol must lie in (0, 1e-2]");
    }
    if (spec.max_subdivisions < 10) {
        throw DomainError("QuadratureSpec: max_subdivisions must be >= 10");
    }
}

IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       const QuadratureSpec& spec) {
    // Map u = t/(1-t): du = dt/(1-t)^2, t in [0,1). The Kronrod nodes are
    // interior, so t = 1 is never evaluated.
    auto h = [&f](double t) {
        const double w = 1.0 - t;
        return f(t / w) / (w * w);
    };
    return adapt(h, 0.0, 1.0, spec);
}

IntegralResult integrate_exp_weighted(const std::function<double(double)>& g,
                                      double s, const QuadratureSpec& spec) {
    if (!(s > 0.0)) {
        throw DomainError("integrate_exp_weighted: decay scale s must be > 0");
    }
    // Substitute u = v/s so the exponential weight always decays on an O(1)
    // scale of the mapped variable.
    auto weighted = [&g, s](double v) { return g(v / s) * std::exp(-v) / s; };
    return integrate_semi_infinite(weighted, spec);
}

}  // namespace polder
