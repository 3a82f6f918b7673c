#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rab/bounds.hpp"
#include "rab/fbl.hpp"

using namespace rab;

// mpmath reference values at rho = 0.1, pd = 0.9.
namespace {
constexpr double kLbSnrT1 = 2.7275929207827217;
constexpr double kLbEbn0T2 = 1.4369029831915206;
constexpr double kLbSnrT3 = 0.45766213815534663;
constexpr double kLbEbn0T4 = 1.2950568201919763;
constexpr double kGStarT4 = 0.27129008018850481;
}  // namespace

TEST_CASE("no-retransmission bounds at rho=0.1, pd=0.9") {
    CHECK(lb_snr_no_retx(0.1, 0.9) == doctest::Approx(kLbSnrT1).epsilon(1e-12));
    CHECK(to_db(lb_snr_no_retx(0.1, 0.9)) == doctest::Approx(4.3577955460255976).epsilon(1e-12));
    CHECK(lb_ebn0_no_retx(0.1, 0.9) == doctest::Approx(kLbEbn0T2).epsilon(1e-12));
    CHECK(to_db(lb_ebn0_no_retx(0.1, 0.9)) == doctest::Approx(1.5742744643141461).epsilon(1e-12));
}

TEST_CASE("no-retransmission bounds, limits and identities") {
    // rho -> 0: snr bound collapses, energy bound tends to ln 2
    CHECK(lb_snr_no_retx(1e-12, 0.9) < 1e-10);
    CHECK(lb_ebn0_no_retx(1e-8, 0.9) == doctest::Approx(std::numbers::ln2).epsilon(1e-6));

    // algebraic identity lb_ebn0 = lb_snr / (2R), exact because the code is shared
    for (double rho : {0.01, 0.1, 0.3}) {
        for (double pd : {0.5, 0.9, 0.99}) {
            const double two_r = 2.0 * rho / std::log(1.0 / pd);
            CHECK(lb_ebn0_no_retx(rho, pd) == lb_snr_no_retx(rho, pd) / two_r);
        }
    }

    // increasing in pd at fixed rho
    double prev = 0.0;
    for (int i = 0; i <= 49; ++i) {
        const double pd = 0.5 + 0.01 * i;
        const double v = lb_snr_no_retx(0.1, pd);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("retransmission snr bound") {
    CHECK(lb_snr_retx(0.1) == doctest::Approx(kLbSnrT3).epsilon(1e-12));
    CHECK(to_db(lb_snr_retx(0.1)) == doctest::Approx(-3.3945501475284395).epsilon(1e-10));
    CHECK(lb_snr_retx(1e-12) < 1e-10);
    CHECK(lb_snr_retx(0.1) < lb_snr_no_retx(0.1, 0.9));
}

TEST_CASE("retransmission energy bound minimized over G") {
    const RetxEbn0Bound b = lb_ebn0_retx(0.1);
    CHECK(b.value == doctest::Approx(kLbEbn0T4).epsilon(1e-9));
    CHECK(b.g_star == doctest::Approx(kGStarT4).epsilon(1e-3));

    // independent oracle: plain 1e-4-step grid over (0,1]
    double oracle = lb_ebn0_retx_at(0.1, 1.0);
    for (int i = 1; i < 10000; ++i) oracle = std::min(oracle, lb_ebn0_retx_at(0.1, i * 1e-4));
    CHECK(std::abs(to_db(b.value) - to_db(oracle)) < 1e-3);
    CHECK(b.value <= oracle + 1e-12);
}

TEST_CASE("retransmission energy bound, limits and identities") {
    // rho -> 0: tends to ln 2 with the optimizing G collapsing toward 0
    const RetxEbn0Bound small = lb_ebn0_retx(1e-6);
    CHECK(small.value == doctest::Approx(std::numbers::ln2).epsilon(1e-3));
    CHECK(small.g_star < 0.01);

    // pinned G = 1 reduces to the task-3 bound scaled by 1/(2 rho)
    for (double rho : {0.02, 0.1, 0.4}) {
        CHECK(lb_ebn0_retx_at(rho, 1.0) == lb_snr_retx(rho) / (2.0 * rho));
        CHECK(lb_ebn0_retx(rho).value <= lb_ebn0_retx_at(rho, 1.0) + 1e-12);
    }
}

TEST_CASE("all bounds strictly increasing in rho") {
    double p1 = 0.0, p2 = 0.0, p3 = 0.0, p4 = 0.0;
    for (int i = 1; i <= 50; ++i) {
        const double rho = 0.01 * i;
        const double v1 = lb_snr_no_retx(rho, 0.9);
        const double v2 = lb_ebn0_no_retx(rho, 0.9);
        const double v3 = lb_snr_retx(rho);
        const double v4 = lb_ebn0_retx(rho).value;
        CHECK(v1 > p1);
        CHECK(v2 > p2);
        CHECK(v3 > p3);
        CHECK(v4 > p4);
        p1 = v1;
        p2 = v2;
        p3 = v3;
        p4 = v4;
    }
}

TEST_CASE("lower_bounds aggregate") {
    const LowerBounds lb = lower_bounds(0.1, 0.9);
    CHECK(lb.snr_t1 == lb_snr_no_retx(0.1, 0.9));
    CHECK(lb.ebn0_t2 == lb_ebn0_no_retx(0.1, 0.9));
    CHECK(lb.snr_t3 == lb_snr_retx(0.1));
    CHECK(lb.ebn0_t4 == doctest::Approx(kLbEbn0T4).epsilon(1e-9));
    CHECK(lb.g_star_t4 > 0.0);
    CHECK(lb.g_star_t4 <= 1.0);
}

TEST_CASE("bounds validate their domain") {
    CHECK_THROWS_AS(lb_snr_no_retx(0.1, 1.0), std::domain_error);
    CHECK_THROWS_AS(lb_snr_no_retx(0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(lb_snr_no_retx(-0.1, 0.9), std::domain_error);
    CHECK_THROWS_AS(lb_snr_retx(0.0), std::domain_error);
    CHECK_THROWS_AS(lb_ebn0_retx_at(0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(lb_ebn0_retx_at(0.1, 1.1), std::domain_error);
}
