#pragma once

#include <optional>
#include <vector>

#include "rab/solvers.hpp"

namespace rab {

enum class SweepAxis { K, Rho };

/// One parameter sweep: solve `task` at every value of the swept axis,
/// holding the other TaskSpec fields fixed.
struct SweepSpec {
    Task task;
    SweepAxis axis;
    std::vector<double> values;  // non-empty, strictly increasing
    int k = 0;                   // fixed k (ignored when axis == K)
    double rho = 0.0;            // fixed rho (ignored when axis == Rho)
    std::optional<double> pd;
    bool emit_converted = true;
    bool emit_lower_bounds = true;

    void validate() const;
};

enum class RowStatus { Ok, Infeasible };

struct SweepRow {
    Task task;
    int k = 0;
    double rho = 0.0;
    std::optional<double> pd;
    std::optional<int> n_opt;
    std::optional<double> g_opt;
    std::optional<double> snr_db;
    std::optional<double> ebn0_db;
    std::optional<double> snr_converted_db;
    std::optional<double> ebn0_converted_db;
    std::optional<double> lb_snr_db;
    std::optional<double> lb_ebn0_db;
    RowStatus status = RowStatus::Ok;
};

SweepRow solve_row(const TaskSpec& spec, bool emit_converted, bool emit_lower_bounds,
                   const SolverOptions& opts = {});

/// Rows in the order of spec.values. Infeasible points produce rows that
/// carry the parameters and status only.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SolverOptions& opts = {});

/// Preconfigured sweeps behind the `figure` subcommand. Figures 1/2 share
/// one dataset (tasks 1 and 2 over 24 log-spaced k in [20, 2000] at
/// pd = 0.9, rho in {0.1, 0.12}); figures 3/4 share another (all four
/// tasks over rho in [0.02, 0.18] in steps of 0.01 at k = 50, pd = 0.65).
std::vector<SweepSpec> figure_sweeps(int figure_id);

/// The default swept-axis grid of a figure (k values for 1/2, rho for 3/4).
std::vector<double> figure_axis_values(int figure_id);

}  // namespace rab
