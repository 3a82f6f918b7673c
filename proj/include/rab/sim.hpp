#pragma once

#include <cstdint>
#include <functional>
#include <optional>

namespace rab {

enum class SimMode { NoRetx, Retx };

struct SimConfig {
    SimMode mode = SimMode::NoRetx;
    int k = 1;
    int n = 1;
    double snr = 1.0;  // used only to derive p_e; ignored when pe_override is set
    double lambda = 0.0;  // new messages per slot (Poisson)
    std::optional<double> g;  // transmission intensity, retx mode only
    std::uint64_t slots = 0;
    std::uint64_t warmup_slots = 0;
    std::uint64_t seed = 0;
    std::optional<double> pe_override;

    void validate() const;
    double effective_pe() const;
};

/// Warmup convention: 10% of slots for retx mode (the backlog chain needs
/// to reach steady state), none for the memoryless no-retx mode.
std::uint64_t default_warmup(SimMode mode, std::uint64_t slots);

struct SimResult {
    std::uint64_t generated = 0;  // messages offered during the measured window
    std::uint64_t delivered = 0;
    double pdr_actual = 0.0;   // delivered / generated
    double pdr_virtual = 0.0;  // probe success frequency (no-retx); = pdr_actual in retx mode
    double throughput_bits_per_sample = 0.0;
    double s_avg = 0.0;   // transmissions per delivered message; 0 when none delivered
    double pi0_hat = 0.0;  // fraction of measured slots with nothing to send
    double ci_halfwidth = 0.0;  // 95% normal-approximation half-width for pdr_actual
};

/// Per-slot state snapshot handed to an optional observer (retx mode),
/// taken before the slot's arrivals join the backlog.
struct SlotTrace {
    std::uint64_t slot;
    std::uint32_t backlog;       // M_a at the slot boundary
    std::uint32_t transmitters;  // K_t drawn this slot
    bool delivered;
};

using SlotObserver = std::function<void(const SlotTrace&)>;

/// One-shot system: per slot, arrivals ~ Poisson(lambda); a slot with
/// exactly one message delivers it with probability 1 - p_e, slots with
/// two or more deliver nothing. Every 100th slot additionally evaluates a
/// tagged probe message (success iff the slot had no real arrivals and the
/// decode draw succeeds); probes never alter the real arrival process or
/// the generated/delivered counters.
SimResult simulate_no_retx(const SimConfig& cfg);

/// Retransmitting system: arrivals join the backlog at the next slot
/// boundary; each of the M_a backlogged devices transmits with probability
/// min(1, G/M_a); a lone transmitter is delivered with probability 1 - p_e
/// and leaves. Aborts with UnstableSimulationError once the backlog
/// exceeds 10^6 devices.
SimResult simulate_retx(const SimConfig& cfg, const SlotObserver& observer = {});

/// Dispatch on cfg.mode.
SimResult simulate(const SimConfig& cfg);

}  // namespace rab
