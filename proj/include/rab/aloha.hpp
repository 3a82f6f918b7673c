#pragma once

namespace rab {

/// Inputs of the one-shot (no-feedback) system: every device transmits its
/// message exactly once in the slot after it appears.
struct NoRetxParams {
    int k;       // information bits per message
    double rho;  // spectral efficiency, bits per sample
    double pd;   // target packet delivery ratio, in (0,1)

    void validate() const;
};

/// Inputs of the retransmitting system: each of the M_a backlogged devices
/// transmits with probability G/M_a until delivered.
struct RetxParams {
    int k;
    double rho;
    double g;  // transmission intensity, in (0,1]

    void validate() const;
};

struct FeasibleRange {
    int n_min;
    int n_max;
};

/// Delivery probability of the one-shot system at blocklength n and SNR:
/// P_d = exp(-rho*n/k) * (1 - p_e(k,n,SNR)).
double pdr_no_retx(const NoRetxParams& params, int n, double snr);

/// Decoding-error probability required to hit params.pd at blocklength n:
/// 1 - pd * exp(rho*n/k). A non-positive value signals that n is
/// infeasible for these parameters (it is not an error).
double pe_target_no_retx(const NoRetxParams& params, int n);

/// Carried spectral efficiency of the retransmitting system:
/// rho = (k/n) * G * exp(-G) * (1 - p_e(k,n,SNR)).
double throughput_retx(const RetxParams& params, int n, double snr);

/// Decoding-error probability required to carry params.rho at blocklength n:
/// 1 - rho*n / (k * G * exp(-G)). Non-positive means infeasible.
double pe_target_retx(const RetxParams& params, int n);

/// Transmission intensity maximizing G*exp(-G) over (0,1].
double optimal_g();

/// Average transmissions per delivered message, S = k*G*(1-pi0) / (rho*n).
/// Returns 0 when pi0 = 1 (no active devices).
double avg_transmissions(int k, int n, double rho, double g, double pi0);

/// Blocklengths whose error-probability target lies in (0,1). Throws
/// InfeasibleSpecError when no blocklength qualifies.
FeasibleRange feasible_n_range(const NoRetxParams& params);
FeasibleRange feasible_n_range(const RetxParams& params);

}  // namespace rab
