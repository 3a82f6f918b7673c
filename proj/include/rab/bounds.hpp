#pragma once

namespace rab {

/// Asymptotic (k -> infinity) lower bounds for the four minimization tasks
/// at one (rho, pd) pair, all in linear units.
struct LowerBounds {
    double snr_t1;
    double ebn0_t2;
    double snr_t3;
    double ebn0_t4;
    double g_star_t4;
};

/// Shannon-limit SNR of the one-shot system: 2^(2*rho/ln(1/pd)) - 1.
double lb_snr_no_retx(double rho, double pd);

/// Shannon-limit Eb/N0 of the one-shot system: (2^(2R) - 1)/(2R) with
/// R = rho/ln(1/pd). Tends to ln 2 as rho -> 0.
double lb_ebn0_no_retx(double rho, double pd);

/// Shannon-limit SNR of the retransmitting system: 2^(2*rho/e^-1) - 1.
double lb_snr_retx(double rho);

/// Task-4 bound objective at fixed G: (2^(2*rho/(G*e^-G)) - 1) * G / (2*rho).
double lb_ebn0_retx_at(double rho, double g);

struct RetxEbn0Bound {
    double value;
    double g_star;
};

/// Shannon-limit Eb/N0 of the retransmitting system, minimized over
/// G in (0,1] by coarse grid plus golden-section refinement.
RetxEbn0Bound lb_ebn0_retx(double rho, double g_grid_step = 1e-3, double g_refine_tol = 1e-6);

/// All four bounds at once (pd required).
LowerBounds lower_bounds(double rho, double pd);

}  // namespace rab
