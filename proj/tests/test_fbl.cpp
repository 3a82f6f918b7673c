#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "rab/fbl.hpp"

using namespace rab;

// Reference values below were computed with an independent 40-digit
// evaluation (mpmath) of the same expressions.

TEST_CASE("q_function matches high-precision reference values") {
    CHECK(q_function(0.0) == 0.5);
    CHECK(q_function(3.0) == doctest::Approx(0.0013498980316300945).epsilon(1e-12));
    CHECK(q_function(1.6449) == doctest::Approx(0.049995217468346303).epsilon(1e-12));
    CHECK(q_function(1.6449) == doctest::Approx(0.0500).epsilon(1e-4));
}

TEST_CASE("q_function symmetry, range, and monotonicity") {
    double prev = 1.0;
    for (int i = 0; i <= 1000; ++i) {
        const double x = -8.0 + 16.0 * i / 1000.0;
        const double q = q_function(x);
        CHECK(q > 0.0);
        CHECK(q < 1.0);
        CHECK(q < prev);
        CHECK(q + q_function(-x) == doctest::Approx(1.0).epsilon(1e-12));
        prev = q;
    }
}

TEST_CASE("q_function rejects non-finite input") {
    CHECK_THROWS_AS(q_function(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(q_function(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("pe_normal_approx reference points") {
    CHECK(pe_normal_approx(50, 100, 1.0) == doctest::Approx(0.35345451855897789).epsilon(1e-9));
    CHECK(pe_normal_approx(50, 100, 1000.0) <= 1e-300);  // Q(~44) underflows
    CHECK(pe_normal_approx(50, 100, 1.0) > pe_normal_approx(50, 100, 1.1));
}

TEST_CASE("pe_normal_approx tends to 1 at vanishing snr") {
    CHECK(pe_normal_approx(50, 100, 1e-9) > 0.999);
    CHECK(pe_normal_approx(10, 20, 1e-9) > 0.999);
}

TEST_CASE("pe_normal_approx strictly decreasing in snr across the tested grids") {
    const int ks[] = {10, 50, 137, 500, 1000};
    for (int k : ks) {
        for (int n : {k / 4, k / 2, k, 2 * k, 4 * k}) {
            if (n < 1) continue;
            double prev = 2.0;
            for (int i = 0; i < 60; ++i) {
                const double snr_db = -10.0 + 30.0 * i / 59.0;
                const double pe = pe_normal_approx(k, n, from_db(snr_db));
                CHECK(pe >= 0.0);
                CHECK(pe <= 1.0);
                if (prev <= 1.0 && prev > 0.0) CHECK(pe < prev);  // strict until underflow
                prev = pe;
            }
        }
    }
}

TEST_CASE("pe_normal_approx validates the code point") {
    CHECK_THROWS_AS(pe_normal_approx(0, 100, 1.0), std::domain_error);
    CHECK_THROWS_AS(pe_normal_approx(50, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(pe_normal_approx(50, 100, 0.0), std::domain_error);
    CHECK_THROWS_AS(pe_normal_approx(50, 100, -1.0), std::domain_error);
    CHECK_THROWS_AS(pe_normal_approx(50, 100, std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST_CASE("energy conversions, spot values") {
    CHECK(snr_to_ebn0(100, 50, 1.0) == 1.0);
    CHECK(snr_to_ebn0(50, 50, 2.0) == 1.0);
    CHECK(snr_to_ebn0(300, 100, 0.5) == 0.75);

    CHECK(snr_from_ebn0_retx(1.0, 0.5, 1.0) == 1.0);
    CHECK(snr_from_ebn0_retx(2.0, 0.1, 0.5) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(snr_from_ebn0_retx(1.295, 0.1, 0.27) == doctest::Approx(0.95925925925925926).epsilon(1e-12));

    CHECK_THROWS_AS(snr_from_ebn0_retx(1.0, 0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(snr_from_ebn0_retx(1.0, 0.1, 1.5), std::domain_error);
    CHECK_THROWS_AS(snr_from_ebn0_retx(1.0, -0.1, 0.5), std::domain_error);
}

TEST_CASE("decibel conversions") {
    CHECK(to_db(1.0) == 0.0);
    CHECK(to_db(10.0) == 10.0);
    CHECK(to_db(2.0) == doctest::Approx(3.0102999566398120).epsilon(1e-12));
    CHECK_THROWS_AS(to_db(0.0), std::domain_error);
    CHECK_THROWS_AS(to_db(-3.0), std::domain_error);
}

TEST_CASE("conversion round-trips on randomized inputs") {
    std::mt19937 gen(20240517);
    std::uniform_int_distribution<int> int_dist(1, 10000);
    std::uniform_real_distribution<double> log_snr(-8.0, 8.0);  // decades
    std::uniform_real_distribution<double> g_dist(0.01, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const int n = int_dist(gen);
        const int k = int_dist(gen);
        const double snr = std::pow(10.0, log_snr(gen));
        CHECK(ebn0_to_snr(n, k, snr_to_ebn0(n, k, snr)) == doctest::Approx(snr).epsilon(1e-12));

        const double rho = std::pow(10.0, std::uniform_real_distribution<double>(-3.0, 0.5)(gen));
        const double g = g_dist(gen);
        CHECK(ebn0_from_snr_retx(snr_from_ebn0_retx(snr, rho, g), rho, g) ==
              doctest::Approx(snr).epsilon(1e-12));

        CHECK(from_db(to_db(snr)) == doctest::Approx(snr).epsilon(1e-12));
    }
}
