#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rab/sim.hpp"
#include "rab/sweep.hpp"

namespace rab {

/// Shortest decimal string that round-trips to the same double
/// (std::to_chars); locale-independent, '.' decimal mark.
std::string format_shortest(double v);

/// Fixed four decimal places; used for every dB column.
std::string format_db(double v);

inline constexpr const char* kSweepCsvHeader =
    "task,k,rho,pd,n_opt,g_opt,snr_db,ebn0_db,snr_converted_db,"
    "ebn0_converted_db,lb_snr_db,lb_ebn0_db,status";

std::string to_csv(const SweepRow& row);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

inline constexpr const char* kSimCsvHeader =
    "mode,k,n,snr_db,lambda,g,pe,slots,warmup,seed,rng,generated,delivered,"
    "pdr_actual,pdr_virtual,throughput_bits_per_sample,s_avg,pi0_hat,ci_halfwidth";

std::string to_csv(const SimConfig& cfg, const SimResult& result);

inline constexpr const char* kBoundsCsvHeader = "bound,linear,db";

/// Four bound rows plus g_star_t4; the t1/t2 cells read "n/a" when pd is
/// absent, and g_star_t4 has no dB cell.
std::string bounds_csv(double rho, std::optional<double> pd);

}  // namespace rab
