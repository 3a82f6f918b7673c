#include "rab/fbl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rab {

namespace {
constexpr double kLog2E = std::numbers::log2e;

void require_positive_rho(double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho)) throw std::domain_error("rho must be positive and finite");
}

void require_g_unit(double g) {
    if (!(g > 0.0) || !(g <= 1.0)) throw std::domain_error("G must lie in (0,1]");
}
}  // namespace

void CodePoint::validate() const {
    if (k < 1) throw std::domain_error("CodePoint: k must be >= 1");
    if (n < 1) throw std::domain_error("CodePoint: n must be >= 1");
    if (!(snr > 0.0) || !std::isfinite(snr)) throw std::domain_error("CodePoint: snr must be positive and finite");
}

double q_function(double x) {
    if (!std::isfinite(x)) throw std::domain_error("q_function: non-finite input");
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double pe_normal_approx(const CodePoint& point) {
    point.validate();
    const double n = point.n;
    const double k = point.k;
    const double snr = point.snr;
    // n/2 * log2(1+snr) via log1p keeps precision for small snr
    const double numerator = 0.5 * n * std::log1p(snr) * kLog2E + 0.5 * std::log2(n) - k;
    const double dispersion = snr * (snr + 2.0) / (2.0 * (snr + 1.0) * (snr + 1.0));
    const double denominator = std::sqrt(n * dispersion) * kLog2E;
    return std::clamp(q_function(numerator / denominator), 0.0, 1.0);
}

double pe_normal_approx(int k, int n, double snr) {
    return pe_normal_approx(CodePoint{k, n, snr});
}

double snr_to_ebn0(int n, int k, double snr) {
    CodePoint{k, n, snr}.validate();
    return n * snr / (2.0 * k);
}

double ebn0_to_snr(int n, int k, double ebn0) {
    CodePoint{k, n, ebn0}.validate();
    return 2.0 * k * ebn0 / n;
}

double snr_from_ebn0_retx(double ebn0, double rho, double g) {
    if (!(ebn0 > 0.0)) throw std::domain_error("ebn0 must be positive");
    require_positive_rho(rho);
    require_g_unit(g);
    return 2.0 * rho * ebn0 / g;
}

double ebn0_from_snr_retx(double snr, double rho, double g) {
    if (!(snr > 0.0)) throw std::domain_error("snr must be positive");
    require_positive_rho(rho);
    require_g_unit(g);
    return g * snr / (2.0 * rho);
}

double to_db(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("to_db: argument must be positive and finite");
    return 10.0 * std::log10(x);
}

double from_db(double db) {
    if (!std::isfinite(db)) throw std::domain_error("from_db: non-finite input");
    return std::pow(10.0, db / 10.0);
}

}  // namespace rab
