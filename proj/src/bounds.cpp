#include "rab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rab/golden.hpp"

namespace rab {

namespace {
// 2^x - 1 without cancellation for small x.
double exp2m1(double x) {
    return std::expm1(x * std::numbers::ln2);
}

void validate_rho(double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho)) throw std::domain_error("rho must be positive and finite");
}

void validate_pd(double pd) {
    if (!(pd > 0.0) || !(pd < 1.0)) throw std::domain_error("pd must lie in (0,1)");
}
}  // namespace

double lb_snr_no_retx(double rho, double pd) {
    validate_rho(rho);
    validate_pd(pd);
    return exp2m1(2.0 * rho / std::log(1.0 / pd));
}

double lb_ebn0_no_retx(double rho, double pd) {
    validate_rho(rho);
    validate_pd(pd);
    const double two_r = 2.0 * rho / std::log(1.0 / pd);
    return exp2m1(two_r) / two_r;
}

double lb_snr_retx(double rho) {
    validate_rho(rho);
    return exp2m1(2.0 * rho / std::exp(-1.0));
}

double lb_ebn0_retx_at(double rho, double g) {
    validate_rho(rho);
    if (!(g > 0.0) || !(g <= 1.0)) throw std::domain_error("G must lie in (0,1]");
    return exp2m1(2.0 * rho / (g * std::exp(-g))) * g / (2.0 * rho);
}

RetxEbn0Bound lb_ebn0_retx(double rho, double g_grid_step, double g_refine_tol) {
    validate_rho(rho);
    if (!(g_grid_step > 0.0) || !(g_grid_step <= 1.0)) throw std::domain_error("g_grid_step must lie in (0,1]");
    if (!(g_refine_tol > 0.0)) throw std::domain_error("g_refine_tol must be positive");

    const int cells = std::max(1, static_cast<int>(std::llround(1.0 / g_grid_step)));
    double best_g = 1.0;
    double best_v = lb_ebn0_retx_at(rho, 1.0);
    for (int i = 1; i < cells; ++i) {
        const double g = i * g_grid_step;
        const double v = lb_ebn0_retx_at(rho, g);
        if (v < best_v) {
            best_v = v;
            best_g = g;
        }
    }

    // The optimum may sit below the leftmost grid cell, so the refinement
    // bracket is allowed to extend toward 0.
    const double lo = std::max(1e-12, best_g - g_grid_step);
    const double hi = std::min(1.0, best_g + g_grid_step);
    const double g_ref = golden_section_min([rho](double g) { return lb_ebn0_retx_at(rho, g); }, lo, hi, g_refine_tol);
    const double v_ref = lb_ebn0_retx_at(rho, g_ref);
    if (v_ref < best_v) return {v_ref, g_ref};
    return {best_v, best_g};
}

LowerBounds lower_bounds(double rho, double pd) {
    const RetxEbn0Bound t4 = lb_ebn0_retx(rho);
    return {lb_snr_no_retx(rho, pd), lb_ebn0_no_retx(rho, pd), lb_snr_retx(rho), t4.value, t4.g_star};
}

}  // namespace rab
