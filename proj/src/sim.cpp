#include "rab/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rab/errors.hpp"
#include "rab/fbl.hpp"
#include "rab/rng.hpp"

namespace rab {

namespace {
constexpr std::uint64_t kProbePeriod = 100;
constexpr std::uint64_t kMaxBacklog = 1'000'000;
constexpr double kZ95 = 1.959963984540054;

double binomial_ci_halfwidth(double p, std::uint64_t count) {
    if (count == 0) return 0.0;
    return kZ95 * std::sqrt(p * (1.0 - p) / static_cast<double>(count));
}
}  // namespace

void SimConfig::validate() const {
    if (k < 1 || n < 1) throw std::domain_error("SimConfig: k and n must be >= 1");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::domain_error("SimConfig: lambda must be positive and finite");
    if (slots == 0 || slots <= warmup_slots) throw std::domain_error("SimConfig: need slots > warmup_slots");
    if (mode == SimMode::Retx) {
        if (!g) throw std::invalid_argument("SimConfig: retx mode requires g");
        if (!(*g > 0.0) || !(*g <= 1.0)) throw std::domain_error("SimConfig: G must lie in (0,1]");
    }
    if (pe_override && (!(*pe_override >= 0.0) || !(*pe_override <= 1.0)))
        throw std::domain_error("SimConfig: pe_override must lie in [0,1]");
    if (!pe_override && (!(snr > 0.0) || !std::isfinite(snr)))
        throw std::domain_error("SimConfig: snr must be positive and finite");
}

double SimConfig::effective_pe() const {
    if (pe_override) return *pe_override;
    return pe_normal_approx(k, n, snr);
}

std::uint64_t default_warmup(SimMode mode, std::uint64_t slots) {
    return mode == SimMode::Retx ? slots / 10 : 0;
}

SimResult simulate_no_retx(const SimConfig& cfg) {
    cfg.validate();
    if (cfg.mode != SimMode::NoRetx) throw std::invalid_argument("simulate_no_retx: wrong mode");
    const double pe = cfg.effective_pe();
    const double p_decode = 1.0 - pe;
    Rng rng(cfg.seed);

    std::uint64_t generated = 0;
    std::uint64_t delivered = 0;
    std::uint64_t probes = 0;
    std::uint64_t probes_ok = 0;
    std::uint64_t idle = 0;

    for (std::uint64_t slot = 0; slot < cfg.slots; ++slot) {
        const std::uint64_t arrivals = rng.poisson(cfg.lambda);
        bool slot_delivered = false;
        if (arrivals == 1) slot_delivered = rng.bernoulli(p_decode);

        // The probe is evaluated against the slot without altering it: it
        // succeeds iff no real message arrived and its own decode succeeds.
        bool probe_ok = false;
        const bool probed = (slot % kProbePeriod == 0);
        if (probed && arrivals == 0) probe_ok = rng.bernoulli(p_decode);

        if (slot < cfg.warmup_slots) continue;
        generated += arrivals;
        if (slot_delivered) ++delivered;
        if (arrivals == 0) ++idle;
        if (probed) {
            ++probes;
            if (probe_ok) ++probes_ok;
        }
    }

    const std::uint64_t measured = cfg.slots - cfg.warmup_slots;
    SimResult r;
    r.generated = generated;
    r.delivered = delivered;
    r.pdr_actual = generated ? static_cast<double>(delivered) / static_cast<double>(generated) : 0.0;
    r.pdr_virtual = probes ? static_cast<double>(probes_ok) / static_cast<double>(probes) : 0.0;
    r.throughput_bits_per_sample =
        static_cast<double>(delivered) * cfg.k / (static_cast<double>(measured) * cfg.n);
    r.s_avg = delivered ? 1.0 : 0.0;  // every message is transmitted exactly once
    r.pi0_hat = static_cast<double>(idle) / static_cast<double>(measured);
    r.ci_halfwidth = binomial_ci_halfwidth(r.pdr_actual, generated);
    return r;
}

SimResult simulate_retx(const SimConfig& cfg, const SlotObserver& observer) {
    cfg.validate();
    if (cfg.mode != SimMode::Retx) throw std::invalid_argument("simulate_retx: wrong mode");
    const double pe = cfg.effective_pe();
    const double p_decode = 1.0 - pe;
    const double g = *cfg.g;
    Rng rng(cfg.seed);

    // One attempt counter per backlogged device; device identity beyond the
    // counter does not matter.
    std::vector<std::uint64_t> attempts;
    attempts.reserve(1024);

    std::uint64_t generated = 0;
    std::uint64_t delivered = 0;
    std::uint64_t attempts_delivered = 0;
    std::uint64_t idle = 0;

    for (std::uint64_t slot = 0; slot < cfg.slots; ++slot) {
        const bool measured = slot >= cfg.warmup_slots;
        if (slot == cfg.warmup_slots) generated = attempts.size();  // carried-over backlog counts as offered load

        const std::uint64_t backlog = attempts.size();
        std::uint64_t transmitters = 0;
        bool slot_delivered = false;
        if (backlog > 0) {
            const double p_tx = std::min(1.0, g / static_cast<double>(backlog));
            transmitters = rng.binomial(backlog, p_tx);
            // partial Fisher-Yates: move the transmitting devices to the front
            for (std::uint64_t j = 0; j < transmitters; ++j) {
                const std::uint64_t pick = j + rng.uniform_below(backlog - j);
                std::swap(attempts[j], attempts[pick]);
                ++attempts[j];
            }
            if (transmitters == 1 && rng.bernoulli(p_decode)) {
                slot_delivered = true;
                if (measured) {
                    ++delivered;
                    attempts_delivered += attempts[0];
                }
                attempts[0] = attempts.back();
                attempts.pop_back();
            }
        } else if (measured) {
            ++idle;
        }

        if (observer) {
            observer(SlotTrace{slot, static_cast<std::uint32_t>(backlog),
                               static_cast<std::uint32_t>(transmitters), slot_delivered});
        }

        const std::uint64_t arrivals = rng.poisson(cfg.lambda);
        if (measured) generated += arrivals;
        attempts.insert(attempts.end(), arrivals, 0);  // eligible from the next slot on

        if (attempts.size() > kMaxBacklog) {
            throw UnstableSimulationError(
                "simulate_retx: backlog exceeded " + std::to_string(kMaxBacklog) + " devices at slot " +
                    std::to_string(slot) + "; arrival rate " + std::to_string(cfg.lambda) +
                    " is above the critical throughput",
                slot, attempts.size());
        }
    }

    const std::uint64_t measured_slots = cfg.slots - cfg.warmup_slots;
    SimResult r;
    r.generated = generated;
    r.delivered = delivered;
    r.pdr_actual = generated ? static_cast<double>(delivered) / static_cast<double>(generated) : 0.0;
    r.pdr_virtual = r.pdr_actual;  // probe-based estimation applies to the one-shot mode only
    r.throughput_bits_per_sample =
        static_cast<double>(delivered) * cfg.k / (static_cast<double>(measured_slots) * cfg.n);
    r.s_avg = delivered ? static_cast<double>(attempts_delivered) / static_cast<double>(delivered) : 0.0;
    r.pi0_hat = static_cast<double>(idle) / static_cast<double>(measured_slots);
    r.ci_halfwidth = binomial_ci_halfwidth(r.pdr_actual, generated);
    return r;
}

SimResult simulate(const SimConfig& cfg) {
    return cfg.mode == SimMode::NoRetx ? simulate_no_retx(cfg) : simulate_retx(cfg);
}

}  // namespace rab
