/**
 * field_kernels.cpp - Closed-form dipole-field tensors and the nested
 * central-difference engine behind the three-body operator chain.
 */

#include "polder/field_kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <vector>

namespace polder {

namespace {

// Shared guard for every kernel: a coincident pair has no finite kernel.
double checked_norm(const Vec3& r_vec, const char* what) {
    const double r = r_vec.norm();
    if (!(r > kDegenerateLength))
        throw DomainError(std::string(what) +
                          ": separation vector is zero (or degenerate)");
    return r;
}

// Real and imaginary parts of G_ij(k, r), computed once so that the complex
// kernel, the part selectors, and v_tensor all share bitwise-identical
// arithmetic. With x = kr, A = d - rh rh, B = d - 3 rh rh:
//
//   Re G = A cos(x)/x + B [ -sin(x)/x^2 - cos(x)/x^3 ]
//   Im G = A sin(x)/x + B [  cos(x)/x^2 - sin(x)/x^3 ]
void g_tensor_parts(double k, const Vec3& r_vec, Tensor3& re, Tensor3& im) {
    if (!(k > 0.0)) throw DomainError("g_tensor: wavenumber must be positive");
    const double r = checked_norm(r_vec, "g_tensor");
    const Vec3 rh = r_vec * (1.0 / r);
    const double x = k * r;
    const double cx = std::cos(x);
    const double sx = std::sin(x);
    const double ca = cx / x;
    const double sa = sx / x;
    const double cb = -sx / (x * x) - cx / (x * x * x);
    const double db = cx / (x * x) - sx / (x * x * x);
    const double rhat[3] = {rh.x, rh.y, rh.z};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double d = (i == j) ? 1.0 : 0.0;
            const double a_ij = d - rhat[i] * rhat[j];
            const double b_ij = d - 3.0 * rhat[i] * rhat[j];
            re(i, j) = a_ij * ca + b_ij * cb;
            im(i, j) = a_ij * sa + b_ij * db;
        }
    }
}

}  // namespace

Tensor3 real_part(const CTensor3& t) {
    Tensor3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = t(i, j).real();
    return r;
}

Tensor3 imag_part(const CTensor3& t) {
    Tensor3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = t(i, j).imag();
    return r;
}

CTensor3 g_tensor(double k, const Vec3& r_vec) {
    Tensor3 re, im;
    g_tensor_parts(k, r_vec, re, im);
    CTensor3 g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            g(i, j) = std::complex<double>(re(i, j), im(i, j));
    return g;
}

Tensor3 g_tensor_real(double k, const Vec3& r_vec) {
    Tensor3 re, im;
    g_tensor_parts(k, r_vec, re, im);
    return re;
}

Tensor3 g_tensor_imag(double k, const Vec3& r_vec) {
    Tensor3 re, im;
    g_tensor_parts(k, r_vec, re, im);
    return im;
}

Tensor3 v_tensor(double k, const Vec3& r_vec) {
    Tensor3 re, im;
    g_tensor_parts(k, r_vec, re, im);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) re(i, j) = -re(i, j);
    return re;
}

Tensor3 w_tensor(double u, const Vec3& r_vec) {
    if (!(u > 0.0))
        throw DomainError("w_tensor: imaginary wavenumber must be positive");
    const double r = checked_norm(r_vec, "w_tensor");
    const Vec3 rh = r_vec * (1.0 / r);
    const double y = u * r;
    const double e = std::exp(-y);
    const double fa = e / y;
    const double fb = e * (1.0 / (y * y) + 1.0 / (y * y * y));
    const double rhat[3] = {rh.x, rh.y, rh.z};
    Tensor3 w;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double d = (i == j) ? 1.0 : 0.0;
            w(i, j) = (d - rhat[i] * rhat[j]) * fa +
                      (d - 3.0 * rhat[i] * rhat[j]) * fb;
        }
    }
    return w;
}

Tensor3 w_tensor_scaled_poly(double u, const Vec3& r_vec) {
    if (!(u >= 0.0))
        throw DomainError(
            "w_tensor_scaled_poly: imaginary wavenumber must be nonnegative");
    const double r = checked_norm(r_vec, "w_tensor_scaled_poly");
    const Vec3 rh = r_vec * (1.0 / r);
    // u^3 e^{+ur} W = (d - rh rh) u^2/r + (d - 3 rh rh)(u/r^2 + 1/r^3):
    // a polynomial in u, finite at u = 0, with no large/small-y blowup.
    const double fa = u * u / r;
    const double fb = u / (r * r) + 1.0 / (r * r * r);
    const double rhat[3] = {rh.x, rh.y, rh.z};
    Tensor3 w;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double d = (i == j) ? 1.0 : 0.0;
            w(i, j) = (d - rhat[i] * rhat[j]) * fa +
                      (d - 3.0 * rhat[i] * rhat[j]) * fb;
        }
    }
    return w;
}

Tensor3 vacuum_e_correlation(const Vec3& r_vec) {
    const double r = checked_norm(r_vec, "vacuum_e_correlation");
    const Vec3 rh = r_vec * (1.0 / r);
    const double pref = -4.0 / (kPi * r * r * r * r);
    const double rhat[3] = {rh.x, rh.y, rh.z};
    Tensor3 c;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double d = (i == j) ? 1.0 : 0.0;
            c(i, j) = pref * (d - 2.0 * rhat[i] * rhat[j]);
        }
    }
    return c;
}

CTensor3 plate_polarization_sum(const Vec3& k_vec, const Vec3& pos_a,
                                const Vec3& pos_b) {
    if (!(pos_a.z > 0.0) || !(pos_b.z > 0.0))
        throw DomainError(
            "plate_polarization_sum: both points must lie above the plate "
            "(z > 0)");
    const double k = k_vec.norm();
    if (!(k > kDegenerateLength))
        throw DomainError("plate_polarization_sum: wavevector is zero");
    const Vec3 kh = k_vec * (1.0 / k);
    const double khat[3] = {kh.x, kh.y, kh.z};

    // Direct phase k.(r_A - r_B) and image phase k.(r_A - sigma r_B) with
    // sigma = diag(1,1,-1) reflecting B through the plate.
    const Vec3 mirror_b{pos_b.x, pos_b.y, -pos_b.z};
    const double phase_direct = k_vec.dot(pos_a - pos_b);
    const double phase_image = k_vec.dot(pos_a - mirror_b);
    const std::complex<double> e_direct =
        std::exp(std::complex<double>(0.0, phase_direct));
    const std::complex<double> e_image =
        std::exp(std::complex<double>(0.0, phase_image));

    CTensor3 sum;
    for (int i = 0; i < 3; ++i) {
        const double sigma_i = (i == 2) ? -1.0 : 1.0;
        for (int j = 0; j < 3; ++j) {
            const double d = (i == j) ? 1.0 : 0.0;
            const double trans = d - khat[i] * khat[j];
            // sigma_il (d_lj - kh_l kh_j) collapses to a row sign because
            // sigma is diagonal.
            sum(i, j) = trans * e_direct - sigma_i * trans * e_image;
        }
    }
    return sum;
}

// ============================================================================
// Operator-chain applicator
// ============================================================================

namespace {

// One fully expanded term of the contracted chain: the mixed sixth-order
// derivative d2/da_pa da_qa * d2/db_pb db_qb * d2/dc_pc dc_qc with an
// integer coefficient.
struct ChainTerm {
    int pa, qa, pb, qb, pc, qc;
    long double coeff;
};

// Expand sum_{ijl} F^a_ij F^b_jl F^c_li with
// F_mn = -d_mn Lap + d_m d_n, i.e. F_mm = -sum_{p != m} d2_pp and
// F_mn = d2_mn for m != n; merge commuting-partial duplicates.
std::vector<ChainTerm> build_chain_terms() {
    struct Piece {
        int p, q, sign;
    };
    auto pieces_of = [](int m, int n) {
        std::vector<Piece> v;
        if (m == n) {
            for (int p = 0; p < 3; ++p)
                if (p != m) v.push_back({p, p, -1});
        } else {
            v.push_back({m, n, +1});
        }
        return v;
    };
    std::map<std::array<int, 6>, long long> acc;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int l = 0; l < 3; ++l) {
                for (const Piece& ta : pieces_of(i, j)) {
                    for (const Piece& tb : pieces_of(j, l)) {
                        for (const Piece& tc : pieces_of(l, i)) {
                            const std::array<int, 6> key = {
                                std::min(ta.p, ta.q), std::max(ta.p, ta.q),
                                std::min(tb.p, tb.q), std::max(tb.p, tb.q),
                                std::min(tc.p, tc.q), std::max(tc.p, tc.q)};
                            acc[key] += ta.sign * tb.sign * tc.sign;
                        }
                    }
                }
            }
        }
    }
    std::vector<ChainTerm> terms;
    for (const auto& [key, coeff] : acc) {
        if (coeff == 0) continue;
        terms.push_back({key[0], key[1], key[2], key[3], key[4], key[5],
                         static_cast<long double>(coeff)});
    }
    return terms;
}

const std::vector<ChainTerm>& chain_terms() {
    static const std::vector<ChainTerm> terms = build_chain_terms();
    return terms;
}

// Second-order central stencil for d2/dx_p dx_q on one vector argument.
// Weights already include the cross-term 1/4; the caller divides by h^2.
struct StencilPoint {
    int off[3];
    long double w;
};

std::vector<StencilPoint> make_stencil(int p, int q) {
    std::vector<StencilPoint> pts;
    if (p == q) {
        StencilPoint plus{{0, 0, 0}, 1.0L}, mid{{0, 0, 0}, -2.0L},
            minus{{0, 0, 0}, 1.0L};
        plus.off[p] = 1;
        minus.off[p] = -1;
        pts = {plus, mid, minus};
    } else {
        for (int sp : {+1, -1}) {
            for (int sq : {+1, -1}) {
                StencilPoint pt{{0, 0, 0}, 0.25L * sp * sq};
                pt.off[p] = sp;
                pt.off[q] = sq;
                pts.push_back(pt);
            }
        }
    }
    return pts;
}

constexpr int kMemoSize = 19683;  // 3^9 offset combinations

// Chain value at one relative step s: all 63 mixed derivatives share a memo
// of function evaluations keyed by the base-3 encoding of the nine
// per-component offsets in {-1, 0, +1}.
long double chain_at_step(const TripleVectorFn& f, const Vec3L& a,
                          const Vec3L& b, const Vec3L& c, long double s) {
    const long double ha = s * a.norm();
    const long double hb = s * b.norm();
    const long double hc = s * c.norm();

    std::vector<long double> memo(kMemoSize,
                                  std::numeric_limits<long double>::quiet_NaN());
    auto eval = [&](const int oa[3], const int ob[3],
                    const int oc[3]) -> long double {
        const int key = (oa[0] + 1) + 3 * (oa[1] + 1) + 9 * (oa[2] + 1) +
                        27 * ((ob[0] + 1) + 3 * (ob[1] + 1) + 9 * (ob[2] + 1)) +
                        729 * ((oc[0] + 1) + 3 * (oc[1] + 1) + 9 * (oc[2] + 1));
        long double& slot = memo[key];
        if (std::isnan(slot)) {
            const Vec3L aa{a.x + ha * oa[0], a.y + ha * oa[1],
                           a.z + ha * oa[2]};
            const Vec3L bb{b.x + hb * ob[0], b.y + hb * ob[1],
                           b.z + hb * ob[2]};
            const Vec3L cc{c.x + hc * oc[0], c.y + hc * oc[1],
                           c.z + hc * oc[2]};
            slot = f(aa, bb, cc);
            if (!std::isfinite(static_cast<double>(slot)))
                throw DifferentiationError(
                    "apply_f_chain: function returned a non-finite value "
                    "at a stencil point");
        }
        return slot;
    };

    long double total = 0.0L;
    for (const ChainTerm& t : chain_terms()) {
        const auto sa = make_stencil(t.pa, t.qa);
        const auto sb = make_stencil(t.pb, t.qb);
        const auto sc = make_stencil(t.pc, t.qc);
        long double term_sum = 0.0L;
        for (const StencilPoint& xa : sa)
            for (const StencilPoint& xb : sb)
                for (const StencilPoint& xc : sc)
                    term_sum +=
                        xa.w * xb.w * xc.w * eval(xa.off, xb.off, xc.off);
        total += t.coeff * term_sum;
    }
    return total / (ha * ha * hb * hb * hc * hc);
}

}  // namespace

void validate(const DiffSpec& spec) {
    if (!(spec.base_step > 1e-6) || !(spec.base_step < 1e-1))
        throw DomainError("DiffSpec: base_step must lie in (1e-6, 1e-1)");
    if (spec.richardson_levels < 1)
        throw DomainError("DiffSpec: richardson_levels must be >= 1");
}

ChainResult apply_f_chain(const TripleVectorFn& f,
                          const TriangleGeometry& geometry,
                          const DiffSpec& spec) {
    validate(spec);
    const Vec3L a{static_cast<long double>(geometry.alpha_vec.x),
                  static_cast<long double>(geometry.alpha_vec.y),
                  static_cast<long double>(geometry.alpha_vec.z)};
    const Vec3L b{static_cast<long double>(geometry.beta_vec.x),
                  static_cast<long double>(geometry.beta_vec.y),
                  static_cast<long double>(geometry.beta_vec.z)};
    const Vec3L c{static_cast<long double>(geometry.gamma_vec.x),
                  static_cast<long double>(geometry.gamma_vec.y),
                  static_cast<long double>(geometry.gamma_vec.z)};
    if (a.norm() < kDegenerateLength || b.norm() < kDegenerateLength ||
        c.norm() < kDegenerateLength)
        throw DomainError("apply_f_chain: degenerate triangle geometry");

    // Richardson/Neville tableau in s^2, coarse to fine; base_step is the
    // finest step, so level j uses s_j = base_step * 2^(L-1-j).
    const int levels = spec.richardson_levels;
    std::vector<std::vector<long double>> tableau;
    std::vector<long double> diagonal;
    for (int j = 0; j < levels; ++j) {
        const long double s =
            static_cast<long double>(spec.base_step) *
            ldexpl(1.0L, levels - 1 - j);
        std::vector<long double> row;
        row.push_back(chain_at_step(f, a, b, c, s));
        for (int m = 1; m <= j; ++m) {
            const long double factor = ldexpl(1.0L, 2 * m) - 1.0L;  // 4^m - 1
            row.push_back(row[m - 1] +
                          (row[m - 1] - tableau[j - 1][m - 1]) / factor);
        }
        tableau.push_back(row);
        diagonal.push_back(row.back());
        if (j >= 2) {
            const long double d_prev =
                fabsl(diagonal[j - 1] - diagonal[j - 2]);
            const long double d_cur = fabsl(diagonal[j] - diagonal[j - 1]);
            // Successive extrapolations must keep shrinking until they sink
            // below rounding level; a stalled ratio means the step sequence
            // is outside the asymptotic regime (or the function is rough).
            if (d_cur > 0.9L * d_prev &&
                d_cur > 1e-12L * fabsl(diagonal[j]))
                throw DifferentiationError(
                    "apply_f_chain: Richardson sequence is not converging "
                    "(successive-level ratio above 0.9)");
        }
    }

    ChainResult result;
    result.value = static_cast<double>(diagonal.back());
    if (levels >= 2) {
        result.abs_error = static_cast<double>(
            fabsl(diagonal[levels - 1] - diagonal[levels - 2]));
    } else {
        // Single level: no extrapolation information; report the leading
        // truncation scale of a second-order stencil.
        result.abs_error =
            std::abs(result.value) * spec.base_step * spec.base_step;
    }
    return result;
}

}  // namespace polder
