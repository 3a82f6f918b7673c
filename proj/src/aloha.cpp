#include "rab/aloha.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rab/errors.hpp"
#include "rab/fbl.hpp"

namespace rab {

namespace {
// Largest blocklength the integer scan is willing to cover.
constexpr double kMaxScanN = 1e8;

int clip_to_feasible(double n_limit, const char* what) {
    if (n_limit > kMaxScanN) throw std::domain_error(std::string(what) + ": feasible blocklength range too large to scan");
    return static_cast<int>(std::floor(n_limit));
}
}  // namespace

void NoRetxParams::validate() const {
    if (k < 1) throw std::domain_error("NoRetxParams: k must be >= 1");
    if (!(rho > 0.0) || !std::isfinite(rho)) throw std::domain_error("NoRetxParams: rho must be positive and finite");
    if (!(pd > 0.0) || !(pd < 1.0)) throw std::domain_error("NoRetxParams: pd must lie in (0,1)");
}

void RetxParams::validate() const {
    if (k < 1) throw std::domain_error("RetxParams: k must be >= 1");
    if (!(rho > 0.0) || !std::isfinite(rho)) throw std::domain_error("RetxParams: rho must be positive and finite");
    if (!(g > 0.0) || !(g <= 1.0)) throw std::domain_error("RetxParams: G must lie in (0,1]");
}

double pdr_no_retx(const NoRetxParams& params, int n, double snr) {
    params.validate();
    return std::exp(-params.rho * n / params.k) * (1.0 - pe_normal_approx(params.k, n, snr));
}

double pe_target_no_retx(const NoRetxParams& params, int n) {
    params.validate();
    if (n < 1) throw std::domain_error("pe_target_no_retx: n must be >= 1");
    return 1.0 - params.pd * std::exp(params.rho * n / params.k);
}

double throughput_retx(const RetxParams& params, int n, double snr) {
    params.validate();
    const double k = params.k;
    return k / double(n) * params.g * std::exp(-params.g) * (1.0 - pe_normal_approx(params.k, n, snr));
}

double pe_target_retx(const RetxParams& params, int n) {
    params.validate();
    if (n < 1) throw std::domain_error("pe_target_retx: n must be >= 1");
    return 1.0 - params.rho * n / (params.k * params.g * std::exp(-params.g));
}

double optimal_g() {
    return 1.0;
}

double avg_transmissions(int k, int n, double rho, double g, double pi0) {
    if (k < 1 || n < 1) throw std::domain_error("avg_transmissions: k and n must be >= 1");
    if (!(rho > 0.0)) throw std::domain_error("avg_transmissions: rho must be positive");
    if (!(g > 0.0) || !(g <= 1.0)) throw std::domain_error("avg_transmissions: G must lie in (0,1]");
    if (!(pi0 >= 0.0) || !(pi0 <= 1.0)) throw std::domain_error("avg_transmissions: pi0 must lie in [0,1]");
    return k * g * (1.0 - pi0) / (rho * n);
}

FeasibleRange feasible_n_range(const NoRetxParams& params) {
    params.validate();
    // pd * exp(rho*n/k) < 1  <=>  n < k*ln(1/pd)/rho
    int n_max = clip_to_feasible(params.k * std::log(1.0 / params.pd) / params.rho, "feasible_n_range");
    while (n_max >= 1 && !(pe_target_no_retx(params, n_max) > 0.0)) --n_max;
    if (n_max < 1) throw InfeasibleSpecError("no blocklength admits the delivery-ratio constraint");
    return {1, n_max};
}

FeasibleRange feasible_n_range(const RetxParams& params) {
    params.validate();
    // rho*n/(k*G*exp(-G)) < 1  <=>  n < k*G*exp(-G)/rho
    int n_max = clip_to_feasible(params.k * params.g * std::exp(-params.g) / params.rho, "feasible_n_range");
    while (n_max >= 1 && !(pe_target_retx(params, n_max) > 0.0)) --n_max;
    if (n_max < 1) throw InfeasibleSpecError("no blocklength admits the throughput constraint");
    return {1, n_max};
}

}  // namespace rab
