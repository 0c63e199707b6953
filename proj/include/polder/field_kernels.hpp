#pragma once
/**
 * field_kernels.hpp - Analytic tensor kernels of the oscillating-dipole
 * field, the vacuum correlation tensor, the plate polarization sum, and the
 * nested-differentiation applicator for the three-body operator chain.
 *
 * Core closed form (kr dimensionless, rh = unit separation vector):
 *
 *   G_ij(k, r) = [ (d_ij - rh_i rh_j) / (kr)
 *                + (d_ij - 3 rh_i rh_j) (i/(kr)^2 - 1/(kr)^3) ] e^{ikr}
 *
 * The potential tensor for oscillating dipoles is V_ij = -Re G_ij. On the
 * imaginary axis the combination W_ij(u, r) = i G_ij(iu, r) is real and
 * symmetric:
 *
 *   W_ij(u, r) = e^{-ur} [ (d_ij - rh_i rh_j)/(ur)
 *                        + (d_ij - 3 rh_i rh_j) (1/(ur)^2 + 1/(ur)^3) ]
 *
 * and is what the correlation-route energy pipelines integrate against.
 */

#include <complex>
#include <functional>

#include "polder/core.hpp"

namespace polder {

// ============================================================================
// Tensors
// ============================================================================

struct Tensor3 {
    double m[3][3] = {};

    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }

    double trace() const { return m[0][0] + m[1][1] + m[2][2]; }

    // Sum of squared entries (Frobenius norm squared).
    double frobenius2() const {
        double s = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s += m[i][j] * m[i][j];
        return s;
    }

    Tensor3 operator-(const Tensor3& o) const {
        Tensor3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
        return r;
    }
};

struct CTensor3 {
    std::complex<double> m[3][3] = {};

    std::complex<double>& operator()(int i, int j) { return m[i][j]; }
    std::complex<double> operator()(int i, int j) const { return m[i][j]; }
};

Tensor3 real_part(const CTensor3& t);
Tensor3 imag_part(const CTensor3& t);

// ============================================================================
// Dipole-field kernels
// ============================================================================

// Full complex kernel G_ij(k, r); throws DomainError at r = 0 or k <= 0.
CTensor3 g_tensor(double k, const Vec3& r_vec);

Tensor3 g_tensor_real(double k, const Vec3& r_vec);
Tensor3 g_tensor_imag(double k, const Vec3& r_vec);

// Potential tensor for oscillating dipoles: V_ij(k, r) = -Re G_ij(k, r).
Tensor3 v_tensor(double k, const Vec3& r_vec);

// Imaginary-axis kernel W_ij(u, r) = i G_ij(iu, r); real and symmetric.
Tensor3 w_tensor(double u, const Vec3& r_vec);

// u^3 e^{+u|r|} W_ij(u, r): the polynomial part of u^3 W. Bounded as u -> 0,
// so products of kernels against u^6 prefactors can be assembled without
// catastrophic cancellation; callers reinstate the exponential decay through
// the integration weight.
Tensor3 w_tensor_scaled_poly(double u, const Vec3& r_vec);

// ============================================================================
// Vacuum correlations and the plate polarization sum
// ============================================================================

// Renormalized equal-time spatial correlation of the electric field in the
// photon vacuum between two distinct points separated by r_vec:
//
//   <E_i(x) E_j(x + r)> = -(4 hbar c / pi) (d_ij - 2 rh_i rh_j) / r^4
//
// (natural units: hbar c = 1). The coincident-point limit diverges and is
// out of domain.
Tensor3 vacuum_e_correlation(const Vec3& r_vec);

// Polarization sum for two points in front of a perfectly conducting plate
// at z = 0 (sigma = diag(1,1,-1) is the reflection matrix):
//
//   sum_pol f_i f_j = (d_ij - kh_i kh_j) e^{i k.(r_A - r_B)}
//                   - sigma_il (d_lj - kh_l kh_j) e^{i k.(r_A - sigma r_B)}
//
// Both z-coordinates must be positive.
CTensor3 plate_polarization_sum(const Vec3& k_vec, const Vec3& pos_a,
                                const Vec3& pos_b);

// ============================================================================
// Operator-chain applicator
// ============================================================================

// Numerical control for the nested central differences. base_step is the
// *finest* relative step; richardson_levels extrapolation levels extend
// upward from it by successive factors of 2 (steps s, 2s, 4s, ...). The
// defaults balance truncation against the extended-precision rounding floor
// of the sixth-order chain (noise grows as 1/h^6): finest step 0.02 with
// four levels reaches ~1e-8 relative on smooth chain inputs.
struct DiffSpec {
    double base_step = 0.02;
    int richardson_levels = 4;
};

// Throws DomainError unless base_step lies strictly inside (1e-6, 1e-1) and
// richardson_levels is at least 1. apply_f_chain validates implicitly; front
// ends that amortize one spec over many evaluations can validate eagerly.
void validate(const DiffSpec& spec);

// Long-double vector argument used by the chain applicator: sixth-order
// derivatives amplify rounding noise by ~1/h^6, so both the function
// evaluations and the accumulation run in extended precision.
struct Vec3L {
    long double x = 0.0L, y = 0.0L, z = 0.0L;
    long double norm() const { return sqrtl(x * x + y * y + z * z); }
};

// Scalar field of three formally independent vector arguments.
using TripleVectorFn =
    std::function<long double(const Vec3L&, const Vec3L&, const Vec3L&)>;

struct ChainResult {
    double value = 0.0;
    double abs_error = 0.0;
};

// Fully contracted operator chain
//
//   sum_{ijl} F^a_ij F^b_jl F^c_li f(a, b, c),
//   F^x_mn = -d_mn Lap_x + d/dx_m d/dx_n,
//
// where each operator differentiates its own vector argument and the result
// is evaluated at (a, b, c) = (alpha_vec, beta_vec, gamma_vec) of the given
// geometry. Second derivatives use nested central differences with relative
// steps base_step * |side| per variable, combined by Richardson
// extrapolation across richardson_levels step doublings. Throws
// DifferentiationError when successive-level differences fail to shrink
// (ratio above 0.9 while still significant).
ChainResult apply_f_chain(const TripleVectorFn& f,
                          const TriangleGeometry& geometry,
                          const DiffSpec& spec = {});

}  // namespace polder
