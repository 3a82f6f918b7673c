#pragma once

#include <optional>

#include "rab/aloha.hpp"

namespace rab {

enum class Task { T1 = 1, T2 = 2, T3 = 3, T4 = 4 };

/// Inputs of one minimization task. pd is required for T1/T2 (one-shot
/// delivery) and must be absent for T3/T4 (retransmissions).
struct TaskSpec {
    Task task;
    int k;
    double rho;
    std::optional<double> pd;

    void validate() const;
};

struct SolverOptions {
    double snr_lo = 1e-9;        // bracket floor, linear (-90 dB)
    double snr_hi_init = 1.0;    // initial bracket ceiling
    double rel_tol = 1e-9;       // bisection tolerance, relative to pe_target
    double g_grid_step = 0.01;   // task-4 coarse grid over G
    double g_refine_tol = 1e-4;  // task-4 golden-section bracket width
    int max_bracket_doublings = 60;

    void validate() const;
};

/// Solver output. snr/ebn0 are kept mutually consistent: tasks 1/2 via
/// Eb/N0 = n*SNR/(2k), tasks 3/4 via Eb/N0 = G*SNR/(2*rho).
struct Solution {
    TaskSpec spec;
    int n_opt;
    double g_opt;  // 1.0 for tasks 1-3
    double snr;
    double snr_db;
    double ebn0;
    double ebn0_db;
    double pe_achieved;
    double pe_target;
    FeasibleRange feasible_range;
};

/// Smallest SNR with pe_normal_approx(k, n, snr) = pe_target, found by
/// doubling the ceiling until the target is bracketed and then bisecting
/// on log-SNR. Returns opts.snr_lo when the target is already met there.
/// Throws NoSolutionError when the bracket cannot be established within
/// max_bracket_doublings, std::domain_error for pe_target outside (0,1).
double solve_snr_for_pe(int k, int n, double pe_target, const SolverOptions& opts = {});

/// Task 1: minimize SNR over n subject to pd = exp(-rho*n/k)*(1 - p_e).
Solution task1_min_snr(const TaskSpec& spec, const SolverOptions& opts = {});

/// Task 2: minimize Eb/N0 = n*SNR/(2k) over n, same constraint as task 1.
Solution task2_min_ebn0(const TaskSpec& spec, const SolverOptions& opts = {});

/// Task 3: minimize SNR over n subject to rho = (k/n)*e^-1*(1 - p_e),
/// with the throughput-optimal intensity G = 1.
Solution task3_min_snr(const TaskSpec& spec, const SolverOptions& opts = {});

/// Task 4: minimize Eb/N0 = G*SNR/(2*rho) over n and G in (0,1], subject
/// to rho = (k/n)*G*e^-G*(1 - p_e). G is scanned on a coarse grid and
/// refined by golden section around the best cell.
Solution task4_min_ebn0(const TaskSpec& spec, const SolverOptions& opts = {});

/// Dispatch on spec.task.
Solution solve_task(const TaskSpec& spec, const SolverOptions& opts = {});

struct ConvertedMetrics {
    double snr_db;
    double ebn0_db;
};

/// The solution's two metrics recomputed from each other through the
/// task's conversion rule (tasks 1/2: Eb/N0 = n*SNR/(2k); tasks 3/4:
/// Eb/N0 = G*SNR/(2*rho)). Idempotent for a consistent Solution.
ConvertedMetrics convert_solution(const Solution& sol);

}  // namespace rab
