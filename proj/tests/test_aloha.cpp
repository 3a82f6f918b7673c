#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "rab/aloha.hpp"
#include "rab/errors.hpp"

using namespace rab;

TEST_CASE("pdr_no_retx combines collision and decoding factors") {
    const NoRetxParams p{50, 0.1, 0.9};  // pd is ignored by pdr_no_retx
    // p_e vanishes at very high snr, leaving the pure collision exponential
    CHECK(pdr_no_retx(p, 50, 1e9) == doctest::Approx(std::exp(-0.1)).epsilon(1e-12));
    CHECK(pdr_no_retx(p, 100, 1.0) == doctest::Approx(0.52934666891937437).epsilon(1e-9));
    // p_e -> 1 as snr -> 0
    CHECK(pdr_no_retx(p, 100, 1e-12) < 1e-12);
}

TEST_CASE("pdr_no_retx monotone in rho and snr") {
    double prev = 1.0;
    for (double rho : {0.05, 0.1, 0.2, 0.4}) {
        const double v = pdr_no_retx(NoRetxParams{50, rho, 0.9}, 100, 1.0);
        CHECK(v < prev);
        prev = v;
    }
    prev = 0.0;
    for (double snr : {0.5, 1.0, 2.0, 4.0}) {
        const double v = pdr_no_retx(NoRetxParams{50, 0.1, 0.9}, 100, snr);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("pe_target_no_retx values and feasibility signal") {
    const NoRetxParams p{50, 0.1, 0.9};
    CHECK(pe_target_no_retx(p, 52) == doctest::Approx(0.0013595905759757138).epsilon(1e-9));
    CHECK(pe_target_no_retx(p, 53) < 0.0);
    CHECK(pe_target_no_retx(p, 53) == doctest::Approx(-0.00063968885587775534).epsilon(1e-9));

    // boundary: pd == exp(-rho*n/k) pushes the target to zero
    const int n = 70;
    const NoRetxParams boundary{50, 0.1, std::exp(-0.1 * n / 50.0)};
    CHECK(std::abs(pe_target_no_retx(boundary, n)) <= 1e-12);
}

TEST_CASE("throughput_retx values") {
    CHECK(throughput_retx(RetxParams{50, 0.1, 1.0}, 100, 1e9) ==
          doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-12));
    CHECK(throughput_retx(RetxParams{50, 0.1, 1.0}, 100, 1.0) ==
          doctest::Approx(0.11892539520222217).epsilon(1e-9));
    CHECK(throughput_retx(RetxParams{50, 0.1, 1e-9}, 100, 1e9) < 1e-9);
}

TEST_CASE("throughput_retx peaks at G = 1 on the unit interval") {
    const double at_one = throughput_retx(RetxParams{50, 0.1, 1.0}, 100, 1.0);
    for (int i = 1; i <= 999; ++i) {
        const double g = i / 999.0;
        CHECK(throughput_retx(RetxParams{50, 0.1, g}, 100, 1.0) <= at_one + 1e-15);
    }
}

TEST_CASE("optimal_g") {
    CHECK(optimal_g() == 1.0);
    CHECK(optimal_g() * std::exp(-optimal_g()) == doctest::Approx(0.36787944117144233).epsilon(1e-12));
}

TEST_CASE("avg_transmissions") {
    CHECK(avg_transmissions(50, 100, 0.05, 1.0, 0.0) == 10.0);
    CHECK(avg_transmissions(50, 100, 0.05, 1.0, 0.5) == 5.0);
    // at the critical rate rho = (k/n) e^-1 the device transmits e times on average
    CHECK(avg_transmissions(50, 100, 0.5 * std::exp(-1.0), 1.0, 0.0) ==
          doctest::Approx(std::exp(1.0)).epsilon(1e-12));
    CHECK(avg_transmissions(50, 100, 0.18394, 1.0, 0.0) == doctest::Approx(2.7182776992497554).epsilon(1e-9));
    CHECK(avg_transmissions(50, 100, 0.05, 1.0, 1.0) == 0.0);
}

TEST_CASE("avg_transmissions halves exactly when rho doubles") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> rho_dist(0.001, 1.0);
    std::uniform_real_distribution<double> g_dist(0.01, 1.0);
    std::uniform_real_distribution<double> pi_dist(0.0, 0.99);
    for (int i = 0; i < 200; ++i) {
        const double rho = rho_dist(gen);
        const double g = g_dist(gen);
        const double pi0 = pi_dist(gen);
        CHECK(avg_transmissions(50, 100, 2.0 * rho, g, pi0) == avg_transmissions(50, 100, rho, g, pi0) / 2.0);
    }
}

TEST_CASE("feasible_n_range, no retransmissions") {
    const FeasibleRange r = feasible_n_range(NoRetxParams{50, 0.1, 0.9});
    CHECK(r.n_min == 1);
    CHECK(r.n_max == 52);
    CHECK_THROWS_AS(feasible_n_range(NoRetxParams{50, 10.0, 0.9}), InfeasibleSpecError);
}

TEST_CASE("feasible_n_range, retransmissions") {
    const FeasibleRange r = feasible_n_range(RetxParams{50, 0.1, 1.0});
    CHECK(r.n_min == 1);
    CHECK(r.n_max == 183);
    CHECK_THROWS_AS(feasible_n_range(RetxParams{50, 20.0, 1.0}), InfeasibleSpecError);
}

TEST_CASE("every blocklength inside a feasible range has a target in (0,1)") {
    const NoRetxParams cases_no_retx[] = {{50, 0.1, 0.9}, {20, 0.25, 0.65}, {200, 0.05, 0.99}};
    for (const auto& p : cases_no_retx) {
        const FeasibleRange r = feasible_n_range(p);
        for (int n = r.n_min; n <= r.n_max; ++n) {
            const double t = pe_target_no_retx(p, n);
            CHECK(t > 0.0);
            CHECK(t < 1.0);
        }
        CHECK(pe_target_no_retx(p, r.n_max + 1) <= 0.0);
    }
    const RetxParams cases_retx[] = {{50, 0.1, 1.0}, {50, 0.1, 0.3}, {80, 0.2, 0.7}};
    for (const auto& p : cases_retx) {
        const FeasibleRange r = feasible_n_range(p);
        for (int n = r.n_min; n <= r.n_max; ++n) {
            const double t = pe_target_retx(p, n);
            CHECK(t > 0.0);
            CHECK(t < 1.0);
        }
        CHECK(pe_target_retx(p, r.n_max + 1) <= 0.0);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(NoRetxParams({50, 0.1, 1.0}).validate(), std::domain_error);
    CHECK_THROWS_AS(NoRetxParams({50, 0.1, 0.0}).validate(), std::domain_error);
    CHECK_THROWS_AS(NoRetxParams({50, -0.1, 0.9}).validate(), std::domain_error);
    CHECK_THROWS_AS(RetxParams({50, 0.1, 0.0}).validate(), std::domain_error);
    CHECK_THROWS_AS(RetxParams({50, 0.1, 1.0001}).validate(), std::domain_error);
    CHECK_THROWS_AS(RetxParams({0, 0.1, 1.0}).validate(), std::domain_error);
}
