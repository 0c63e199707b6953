/**
 * boundary.cpp - Conducting-plate interactions: atom-wall and pair-near-
 * plate closed forms plus the kernel-route consistency check.
 */

#include "polder/boundary.hpp"

#include <cmath>

#include "polder/field_kernels.hpp"

namespace polder {

namespace {

const char* kFarZoneNote =
    "far-zone form: valid when all distances exceed the atoms' transition "
    "wavelengths";

}  // namespace

AtomWallResult atom_wall(double alpha, double z) {
    if (!(z > 0.0))
        throw DomainError("atom_wall: atom must sit above the plate (z > 0)");
    AtomWallResult result;
    result.energy = -3.0 * alpha / (8.0 * kPi * z * z * z * z);
    result.force = -3.0 * alpha / (2.0 * kPi * z * z * z * z * z);
    result.notes = kFarZoneNote;
    return result;
}

PlatePairResult pair_near_plate(double alpha_a, double alpha_b,
                                const Vec3& pos_a, const Vec3& pos_b) {
    PlatePairResult result;
    result.geometry = image_geometry(pos_a, pos_b);
    const double r = result.geometry.r;
    const double rb = result.geometry.r_bar;
    const double s2 = result.geometry.sin2_theta;
    const double s2b = result.geometry.sin2_theta_bar;
    const double aa = alpha_a * alpha_b;

    result.direct = -23.0 * aa / (4.0 * kPi * std::pow(r, 7));
    result.image = -23.0 * aa / (4.0 * kPi * std::pow(rb, 7));

    const double r2 = r * r;
    const double r3 = r2 * r;
    const double r4 = r3 * r;
    const double rb2 = rb * rb;
    const double rb3 = rb2 * rb;
    const double rb4 = rb3 * rb;
    const double bracket = r4 * s2 + 5.0 * r3 * rb * s2 +
                           r2 * rb2 * (6.0 + s2 + s2b) + 5.0 * r * rb3 * s2b +
                           rb4 * s2b;
    result.cross =
        (8.0 / kPi) * aa * bracket / (r3 * rb3 * std::pow(r + rb, 5));

    result.total.value = result.direct + result.image + result.cross;
    result.total.regime = Regime::Far;
    result.total.notes = kFarZoneNote;
    return result;
}

double pair_near_plate_via_correlation(const PolarizabilityModel& model_a,
                                       const PolarizabilityModel& model_b,
                                       const Vec3& pos_a, const Vec3& pos_b,
                                       const QuadratureSpec& quad) {
    const ImageGeometry geometry = image_geometry(pos_a, pos_b);
    const Vec3 r_vec = pos_a - pos_b;
    const Vec3 mirror_b{pos_b.x, pos_b.y, -pos_b.z};
    const Vec3 rb_vec = pos_a - mirror_b;
    const double r = geometry.r;
    const double rb = geometry.r_bar;

    // E = -(1/pi) Int du aA aB u^6 * (1/2) |W(u, r) - sigma W(u, rb)|^2_F.
    // With u^3 W = Mp e^{-u|..|} the three pieces carry e^{-2ur},
    // e^{-u(r+rb)} and e^{-2u rb}; factoring e^{-2ur} onto the quadrature
    // weight leaves only decaying exponentials in the bracket, so nothing
    // blows up at either end of the u-range.
    auto weighted = [&](double u) {
        const Tensor3 mp_r = w_tensor_scaled_poly(u, r_vec);
        Tensor3 mp_im = w_tensor_scaled_poly(u, rb_vec);
        for (int j = 0; j < 3; ++j) mp_im(2, j) = -mp_im(2, j);  // sigma row

        double norm_r = 0.0, norm_im = 0.0, mixed = 0.0;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                norm_r += mp_r(i, j) * mp_r(i, j);
                norm_im += mp_im(i, j) * mp_im(i, j);
                mixed += mp_r(i, j) * mp_im(i, j);
            }
        }
        const double decay = std::exp(-u * (rb - r));
        const double bracket =
            norm_r - 2.0 * mixed * decay + norm_im * decay * decay;
        return model_a.alpha_imag(u) * model_b.alpha_imag(u) * 0.5 * bracket /
               kPi;
    };
    const IntegralResult integral =
        integrate_exp_weighted(weighted, 2.0 * r, quad);
    return -integral.value;
}

}  // namespace polder
