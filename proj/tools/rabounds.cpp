// Command-line front end: solve single minimization tasks, run parameter
// sweeps, print Shannon lower bounds, run the Monte-Carlo simulator, and
// emit figure-reproduction CSV.
//
// Exit codes: 0 ok, 1 usage error, 2 infeasible spec, 3 simulation
// instability. CSV goes to stdout (or --out), diagnostics to stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rab/csv.hpp"
#include "rab/errors.hpp"
#include "rab/fbl.hpp"
#include "rab/sim.hpp"
#include "rab/solvers.hpp"
#include "rab/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUnstable = 3;

rab::Task to_task(int id) {
    return static_cast<rab::Task>(id);
}

// "-" (or empty) selects stdout; anything else opens a file.
int with_output(const std::string& path, const std::function<void(std::ostream&)>& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return kExitOk;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return kExitUsage;
    }
    write(file);
    if (!file.good()) {
        std::cerr << "error: failed writing '" << path << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

struct SolveArgs {
    int task = 0;
    int k = 0;
    double rho = 0.0;
    std::optional<double> pd;
};

int run_solve(const SolveArgs& a) {
    rab::TaskSpec spec{to_task(a.task), a.k, a.rho, a.pd};
    spec.validate();
    const rab::SweepRow row = rab::solve_row(spec, true, true);
    std::cout << rab::kSweepCsvHeader << '\n' << rab::to_csv(row) << '\n';
    if (row.status == rab::RowStatus::Infeasible) {
        std::cerr << "infeasible: no blocklength admits the task constraints\n";
        return kExitInfeasible;
    }
    std::cerr << "task " << a.task << ": n_opt=" << *row.n_opt << " G=" << rab::format_shortest(*row.g_opt)
              << " snr=" << rab::format_db(*row.snr_db) << " dB ebn0=" << rab::format_db(*row.ebn0_db)
              << " dB\n";
    return kExitOk;
}

struct SweepArgs {
    int task = 0;
    std::string axis;
    std::vector<double> values;
    int k = 0;
    double rho = 0.0;
    std::optional<double> pd;
    std::string out = "-";
};

int run_sweep_cmd(const SweepArgs& a) {
    rab::SweepSpec spec;
    spec.task = to_task(a.task);
    spec.axis = a.axis == "k" ? rab::SweepAxis::K : rab::SweepAxis::Rho;
    spec.values = a.values;
    spec.k = a.k;
    spec.rho = a.rho;
    spec.pd = a.pd;
    spec.validate();
    const auto rows = rab::run_sweep(spec);
    return with_output(a.out, [&](std::ostream& out) { rab::write_sweep_csv(out, rows); });
}

struct BoundsArgs {
    double rho = 0.0;
    std::optional<double> pd;
};

int run_bounds(const BoundsArgs& a) {
    std::cout << rab::bounds_csv(a.rho, a.pd);
    return kExitOk;
}

struct SimulateArgs {
    std::string mode;
    int k = 1;
    int n = 1;
    std::optional<double> snr_db;
    double lambda = 0.0;
    std::optional<double> g;
    std::optional<double> pe;
    std::uint64_t slots = 1'000'000;
    std::optional<std::uint64_t> warmup;
    std::uint64_t seed = 0;
};

int run_simulate(const SimulateArgs& a) {
    rab::SimConfig cfg;
    cfg.mode = a.mode == "retx" ? rab::SimMode::Retx : rab::SimMode::NoRetx;
    cfg.k = a.k;
    cfg.n = a.n;
    cfg.lambda = a.lambda;
    cfg.g = a.g;
    cfg.slots = a.slots;
    cfg.warmup_slots = a.warmup ? *a.warmup : rab::default_warmup(cfg.mode, a.slots);
    cfg.seed = a.seed;
    cfg.pe_override = a.pe;
    if (a.snr_db) cfg.snr = rab::from_db(*a.snr_db);
    if (!a.pe && !a.snr_db) throw std::invalid_argument("simulate: give either --pe or --snr-db (with --k/--n)");
    cfg.validate();
    const rab::SimResult result = rab::simulate(cfg);
    std::cout << rab::kSimCsvHeader << '\n' << rab::to_csv(cfg, result) << '\n';
    return kExitOk;
}

struct FigureArgs {
    int id = 0;
    std::vector<double> values;
    std::optional<double> pd;
    std::string out = "-";
};

int run_figure(const FigureArgs& a) {
    auto sweeps = rab::figure_sweeps(a.id);
    for (rab::SweepSpec& s : sweeps) {
        if (!a.values.empty()) s.values = a.values;
        if (a.pd && s.pd) s.pd = a.pd;
        s.validate();
    }
    std::vector<rab::SweepRow> rows;
    for (const rab::SweepSpec& s : sweeps) {
        const auto part = rab::run_sweep(s);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return with_output(a.out, [&](std::ostream& out) { rab::write_sweep_csv(out, rows); });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"achievability bounds, Shannon lower bounds, and Monte-Carlo validation\n"
                 "for SNR and energy-per-bit in slotted-ALOHA random access over a Gaussian MAC"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "solve one minimization task");
    solve->add_option("--task", solve_args.task, "task id")->required()->check(CLI::Range(1, 4));
    solve->add_option("--k", solve_args.k, "information bits per message")->required();
    solve->add_option("--rho", solve_args.rho, "spectral efficiency, bits/sample")->required();
    solve->add_option("--pd", solve_args.pd, "target packet delivery ratio (tasks 1 and 2)");
    solve->set_config("--config");

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "solve one task over a parameter grid");
    sweep->add_option("--task", sweep_args.task, "task id")->required()->check(CLI::Range(1, 4));
    sweep->add_option("--axis", sweep_args.axis, "swept parameter")->required()->check(CLI::IsMember({"k", "rho"}));
    sweep->add_option("--values", sweep_args.values, "axis values, strictly increasing")->required()->delimiter(',');
    sweep->add_option("--k", sweep_args.k, "fixed k (rho axis)");
    sweep->add_option("--rho", sweep_args.rho, "fixed rho (k axis)");
    sweep->add_option("--pd", sweep_args.pd, "target packet delivery ratio (tasks 1 and 2)");
    sweep->add_option("--out", sweep_args.out, "output CSV path, '-' for stdout");
    sweep->set_config("--config");

    BoundsArgs bounds_args;
    CLI::App* bounds = app.add_subcommand("bounds", "print the four Shannon lower bounds");
    bounds->add_option("--rho", bounds_args.rho, "spectral efficiency")->required();
    bounds->add_option("--pd", bounds_args.pd, "packet delivery ratio for the no-retransmission cells");
    bounds->set_config("--config");

    SimulateArgs sim_args;
    CLI::App* simulate = app.add_subcommand("simulate", "Monte-Carlo slotted-ALOHA simulation");
    simulate->add_option("--mode", sim_args.mode, "noretx or retx")->required()->check(CLI::IsMember({"noretx", "retx"}));
    simulate->add_option("--k", sim_args.k, "information bits per message");
    simulate->add_option("--n", sim_args.n, "samples per slot");
    simulate->add_option("--snr-db", sim_args.snr_db, "per-transmission SNR in dB (derives p_e)");
    simulate->add_option("--pe", sim_args.pe, "decoding error probability override");
    simulate->add_option("--lambda", sim_args.lambda, "new messages per slot")->required();
    simulate->add_option("--g", sim_args.g, "transmission intensity (retx mode)");
    simulate->add_option("--slots", sim_args.slots, "simulated slots");
    simulate->add_option("--warmup", sim_args.warmup, "warmup slots excluded from statistics");
    simulate->add_option("--seed", sim_args.seed, "RNG seed");
    simulate->set_config("--config");

    FigureArgs figure_args;
    CLI::App* figure = app.add_subcommand("figure", "emit a preconfigured figure-reproduction sweep");
    figure->add_option("--id", figure_args.id, "figure id")->required()->check(CLI::Range(1, 4));
    figure->add_option("--values", figure_args.values, "override the swept axis values")->delimiter(',');
    figure->add_option("--pd", figure_args.pd, "override the delivery-ratio of the no-retransmission tasks");
    figure->add_option("--out", figure_args.out, "output CSV path, '-' for stdout");
    figure->set_config("--config");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) return run_solve(solve_args);
        if (sweep->parsed()) return run_sweep_cmd(sweep_args);
        if (bounds->parsed()) return run_bounds(bounds_args);
        if (simulate->parsed()) return run_simulate(sim_args);
        if (figure->parsed()) return run_figure(figure_args);
    } catch (const rab::UnstableSimulationError& e) {
        std::cerr << "unstable: " << e.what() << '\n';
        return kExitUnstable;
    } catch (const rab::InfeasibleSpecError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
