#include "rab/csv.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

#include "rab/bounds.hpp"
#include "rab/fbl.hpp"
#include "rab/rng.hpp"

namespace rab {

namespace {

std::string opt_shortest(const std::optional<double>& v) {
    return v ? format_shortest(*v) : std::string();
}

std::string opt_db(const std::optional<double>& v) {
    return v ? format_db(*v) : std::string();
}

std::string opt_int(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::string bound_row(const char* name, double linear) {
    return std::string(name) + "," + format_shortest(linear) + "," + format_db(to_db(linear)) + "\n";
}

}  // namespace

std::string format_shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    if (res.ec != std::errc()) throw std::runtime_error("format_shortest: conversion failed");
    return std::string(buf, res.ptr);
}

std::string format_db(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 4);
    if (res.ec != std::errc()) throw std::runtime_error("format_db: conversion failed");
    return std::string(buf, res.ptr);
}

std::string to_csv(const SweepRow& row) {
    std::string line;
    line += std::to_string(static_cast<int>(row.task));
    line += ',';
    line += std::to_string(row.k);
    line += ',';
    line += format_shortest(row.rho);
    line += ',';
    line += opt_shortest(row.pd);
    line += ',';
    line += opt_int(row.n_opt);
    line += ',';
    line += opt_shortest(row.g_opt);
    line += ',';
    line += opt_db(row.snr_db);
    line += ',';
    line += opt_db(row.ebn0_db);
    line += ',';
    line += opt_db(row.snr_converted_db);
    line += ',';
    line += opt_db(row.ebn0_converted_db);
    line += ',';
    line += opt_db(row.lb_snr_db);
    line += ',';
    line += opt_db(row.lb_ebn0_db);
    line += ',';
    line += row.status == RowStatus::Ok ? "ok" : "infeasible";
    return line;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kSweepCsvHeader << '\n';
    for (const SweepRow& row : rows) out << to_csv(row) << '\n';
}

std::string to_csv(const SimConfig& cfg, const SimResult& result) {
    std::string line;
    line += cfg.mode == SimMode::NoRetx ? "noretx" : "retx";
    line += ',';
    line += std::to_string(cfg.k);
    line += ',';
    line += std::to_string(cfg.n);
    line += ',';
    line += cfg.pe_override ? std::string() : format_db(to_db(cfg.snr));
    line += ',';
    line += format_shortest(cfg.lambda);
    line += ',';
    line += cfg.g ? format_shortest(*cfg.g) : std::string();
    line += ',';
    line += format_shortest(cfg.effective_pe());
    line += ',';
    line += std::to_string(cfg.slots);
    line += ',';
    line += std::to_string(cfg.warmup_slots);
    line += ',';
    line += std::to_string(cfg.seed);
    line += ',';
    line += kRngAlgorithm;
    line += ',';
    line += std::to_string(result.generated);
    line += ',';
    line += std::to_string(result.delivered);
    line += ',';
    line += format_shortest(result.pdr_actual);
    line += ',';
    line += format_shortest(result.pdr_virtual);
    line += ',';
    line += format_shortest(result.throughput_bits_per_sample);
    line += ',';
    line += format_shortest(result.s_avg);
    line += ',';
    line += format_shortest(result.pi0_hat);
    line += ',';
    line += format_shortest(result.ci_halfwidth);
    return line;
}

std::string bounds_csv(double rho, std::optional<double> pd) {
    std::string out(kBoundsCsvHeader);
    out += '\n';
    if (pd) {
        out += bound_row("lb_snr_t1", lb_snr_no_retx(rho, *pd));
        out += bound_row("lb_ebn0_t2", lb_ebn0_no_retx(rho, *pd));
    } else {
        out += "lb_snr_t1,n/a,n/a\n";
        out += "lb_ebn0_t2,n/a,n/a\n";
    }
    out += bound_row("lb_snr_t3", lb_snr_retx(rho));
    const RetxEbn0Bound t4 = lb_ebn0_retx(rho);
    out += bound_row("lb_ebn0_t4", t4.value);
    out += "g_star_t4," + format_shortest(t4.g_star) + ",\n";
    return out;
}

}  // namespace rab
