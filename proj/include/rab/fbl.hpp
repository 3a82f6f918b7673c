#pragma once

namespace rab {

/// One operating point of a finite-blocklength code: k information bits
/// carried in n channel samples at the given linear SNR.
struct CodePoint {
    int k;       // information bits per message, >= 1
    int n;       // channel samples per slot, >= 1
    double snr;  // linear signal-to-noise ratio, > 0

    void validate() const;  // throws std::domain_error on violation
};

/// Standard Gaussian tail Q(x) = 0.5 * erfc(x / sqrt(2)).
/// Throws std::domain_error for non-finite input.
double q_function(double x);

/// Normal-approximation decoding error probability for a single
/// transmission over the unit-noise AWGN channel:
///
///   p_e = Q( (n/2 * log2(1+SNR) + 1/2 * log2(n) - k)
///            / (sqrt(n * SNR*(SNR+2) / (2*(SNR+1)^2)) * log2(e)) )
///
/// log2(e) sits outside the square root, i.e. the channel dispersion is
/// V = SNR*(SNR+2)/(2*(SNR+1)^2) * log2(e)^2 in bits^2. The value is
/// clamped to [0,1]; no lower limit is imposed on n, so callers are
/// responsible for staying in the regime where the approximation is
/// meaningful.
double pe_normal_approx(const CodePoint& point);
double pe_normal_approx(int k, int n, double snr);

/// Single-transmission energy-per-bit: Eb/N0 = n*SNR / (2k).
double snr_to_ebn0(int n, int k, double snr);
/// Inverse of snr_to_ebn0: SNR = 2k*(Eb/N0) / n.
double ebn0_to_snr(int n, int k, double ebn0);

/// SNR implied by an energy budget when every message is retransmitted
/// until delivery: SNR = 2*rho*(Eb/N0) / G, valid for G in (0,1] and a
/// vanishing idle probability. Throws std::domain_error for G outside (0,1].
double snr_from_ebn0_retx(double ebn0, double rho, double g);
/// Inverse of snr_from_ebn0_retx: Eb/N0 = G*SNR / (2*rho).
double ebn0_from_snr_retx(double snr, double rho, double g);

/// Power ratio to decibels, 10*log10(x). Throws std::domain_error for x <= 0.
double to_db(double x);
double from_db(double db);

}  // namespace rab
