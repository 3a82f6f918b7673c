#include "rab/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rab/errors.hpp"
#include "rab/fbl.hpp"
#include "rab/golden.hpp"

namespace rab {

namespace {

constexpr int kMaxBisectIters = 200;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct PointSolve {
    int n;
    double snr;
    double target;
};

// Solves every blocklength in [1, n_max] whose error target lies in (0,1).
// Blocklengths that would need an SNR above the bracket ceiling are
// dropped; they cannot beat any solved point.
template <class TargetFn>
std::vector<PointSolve> scan_blocklengths(int k, int n_max, TargetFn&& target_of_n, const SolverOptions& opts) {
    std::vector<PointSolve> points;
    points.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const double target = target_of_n(n);
        if (!(target > 0.0) || !(target < 1.0)) continue;
        try {
            points.push_back({n, solve_snr_for_pe(k, n, target, opts), target});
        } catch (const NoSolutionError&) {
        }
    }
    return points;
}

// Argmin over the scanned points; ties within rel_tol of the minimum go to
// the smallest n (shortest slot).
template <class Objective>
const PointSolve& argmin_points(const std::vector<PointSolve>& points, Objective&& obj, double rel_tol) {
    double best = kInf;
    for (const PointSolve& p : points) best = std::min(best, obj(p));
    for (const PointSolve& p : points) {
        if (obj(p) <= best * (1.0 + rel_tol)) return p;
    }
    return points.front();  // unreachable for non-empty input
}

Solution make_solution(const TaskSpec& spec, const PointSolve& point, double g, const FeasibleRange& range) {
    const bool no_retx = spec.task == Task::T1 || spec.task == Task::T2;
    const double ebn0 = no_retx ? snr_to_ebn0(point.n, spec.k, point.snr)
                                : ebn0_from_snr_retx(point.snr, spec.rho, g);
    return Solution{spec,
                    point.n,
                    g,
                    point.snr,
                    to_db(point.snr),
                    ebn0,
                    to_db(ebn0),
                    pe_normal_approx(spec.k, point.n, point.snr),
                    point.target,
                    range};
}

void require_task(const TaskSpec& spec, Task expected, const char* name) {
    spec.validate();
    if (spec.task != expected) throw std::invalid_argument(std::string(name) + ": wrong task id");
}

std::vector<PointSolve> scan_no_retx(const TaskSpec& spec, const FeasibleRange& range, const SolverOptions& opts) {
    const NoRetxParams params{spec.k, spec.rho, *spec.pd};
    auto points = scan_blocklengths(
        spec.k, range.n_max, [&](int n) { return pe_target_no_retx(params, n); }, opts);
    if (points.empty()) throw InfeasibleSpecError("no blocklength solvable within the snr bracket");
    return points;
}

struct RetxScan {
    double g;
    PointSolve point;
    double ebn0;
};

// Best (smallest-SNR) blocklength at a fixed intensity G; at fixed G the
// Eb/N0 objective is proportional to SNR, so one reduction serves both.
std::optional<RetxScan> scan_retx_at_g(const TaskSpec& spec, double g, const SolverOptions& opts) {
    const RetxParams params{spec.k, spec.rho, g};
    FeasibleRange range{};
    try {
        range = feasible_n_range(params);
    } catch (const InfeasibleSpecError&) {
        return std::nullopt;
    }
    auto points = scan_blocklengths(
        spec.k, range.n_max, [&](int n) { return pe_target_retx(params, n); }, opts);
    if (points.empty()) return std::nullopt;
    const PointSolve& best = argmin_points(points, [](const PointSolve& p) { return p.snr; }, opts.rel_tol);
    return RetxScan{g, best, ebn0_from_snr_retx(best.snr, spec.rho, g)};
}

}  // namespace

void TaskSpec::validate() const {
    if (k < 1) throw std::domain_error("TaskSpec: k must be >= 1");
    if (!(rho > 0.0) || !std::isfinite(rho)) throw std::domain_error("TaskSpec: rho must be positive and finite");
    const bool needs_pd = task == Task::T1 || task == Task::T2;
    if (needs_pd && !pd) throw std::invalid_argument("TaskSpec: tasks 1 and 2 require pd");
    if (!needs_pd && pd) throw std::invalid_argument("TaskSpec: tasks 3 and 4 take no pd");
    if (pd && (!(*pd > 0.0) || !(*pd < 1.0))) throw std::domain_error("TaskSpec: pd must lie in (0,1)");
}

void SolverOptions::validate() const {
    if (!(snr_lo > 0.0) || !(snr_lo < snr_hi_init)) throw std::domain_error("SolverOptions: need 0 < snr_lo < snr_hi_init");
    if (!(rel_tol > 0.0)) throw std::domain_error("SolverOptions: rel_tol must be positive");
    if (!(g_grid_step > 0.0) || !(g_grid_step <= 1.0)) throw std::domain_error("SolverOptions: g_grid_step must lie in (0,1]");
    if (!(g_refine_tol > 0.0)) throw std::domain_error("SolverOptions: g_refine_tol must be positive");
    if (max_bracket_doublings < 1) throw std::domain_error("SolverOptions: max_bracket_doublings must be >= 1");
}

double solve_snr_for_pe(int k, int n, double pe_target, const SolverOptions& opts) {
    opts.validate();
    if (!(pe_target > 0.0) || !(pe_target < 1.0)) throw std::domain_error("solve_snr_for_pe: pe_target must lie in (0,1)");

    const auto pe_at = [k, n](double snr) { return pe_normal_approx(k, n, snr); };

    // p_e is strictly decreasing in SNR over the operating regime.
    if (pe_at(opts.snr_lo) <= pe_target) return opts.snr_lo;  // already met at the floor

    double hi = opts.snr_hi_init;
    int doublings = 0;
    while (pe_at(hi) >= pe_target) {
        if (++doublings > opts.max_bracket_doublings) {
            throw NoSolutionError("solve_snr_for_pe: target not bracketed below the snr ceiling");
        }
        hi *= 2.0;
    }

    double log_lo = std::log(opts.snr_lo);
    double log_hi = std::log(hi);
    for (int it = 0; it < kMaxBisectIters; ++it) {
        const double mid = 0.5 * (log_lo + log_hi);
        const double pe = pe_at(std::exp(mid));
        if (std::abs(pe - pe_target) <= opts.rel_tol * pe_target) return std::exp(mid);
        if (pe > pe_target) {
            log_lo = mid;
        } else {
            log_hi = mid;
        }
        if (log_hi - log_lo < 1e-15) break;
    }
    return std::exp(0.5 * (log_lo + log_hi));
}

Solution task1_min_snr(const TaskSpec& spec, const SolverOptions& opts) {
    require_task(spec, Task::T1, "task1_min_snr");
    opts.validate();
    const FeasibleRange range = feasible_n_range(NoRetxParams{spec.k, spec.rho, *spec.pd});
    const auto points = scan_no_retx(spec, range, opts);
    const PointSolve& best = argmin_points(points, [](const PointSolve& p) { return p.snr; }, opts.rel_tol);
    return make_solution(spec, best, 1.0, range);
}

Solution task2_min_ebn0(const TaskSpec& spec, const SolverOptions& opts) {
    require_task(spec, Task::T2, "task2_min_ebn0");
    opts.validate();
    const FeasibleRange range = feasible_n_range(NoRetxParams{spec.k, spec.rho, *spec.pd});
    const auto points = scan_no_retx(spec, range, opts);
    const int k = spec.k;
    const PointSolve& best =
        argmin_points(points, [k](const PointSolve& p) { return snr_to_ebn0(p.n, k, p.snr); }, opts.rel_tol);
    return make_solution(spec, best, 1.0, range);
}

Solution task3_min_snr(const TaskSpec& spec, const SolverOptions& opts) {
    require_task(spec, Task::T3, "task3_min_snr");
    opts.validate();
    const double g = optimal_g();
    const FeasibleRange range = feasible_n_range(RetxParams{spec.k, spec.rho, g});
    const auto scan = scan_retx_at_g(spec, g, opts);
    if (!scan) throw InfeasibleSpecError("no blocklength solvable within the snr bracket");
    return make_solution(spec, scan->point, g, range);
}

Solution task4_min_ebn0(const TaskSpec& spec, const SolverOptions& opts) {
    require_task(spec, Task::T4, "task4_min_ebn0");
    opts.validate();

    // Coarse grid over G; the last cell is pinned to exactly 1.
    const int cells = std::max(1, static_cast<int>(std::llround(1.0 / opts.g_grid_step)));
    std::vector<RetxScan> candidates;
    candidates.reserve(static_cast<std::size_t>(cells));
    for (int i = 1; i <= cells; ++i) {
        const double g = (i == cells) ? 1.0 : i * opts.g_grid_step;
        if (auto scan = scan_retx_at_g(spec, g, opts)) candidates.push_back(*scan);
    }
    if (candidates.empty()) throw InfeasibleSpecError("no (n, G) pair admits the throughput constraint");

    double best_obj = kInf;
    for (const RetxScan& c : candidates) best_obj = std::min(best_obj, c.ebn0);
    const RetxScan* best = nullptr;
    for (const RetxScan& c : candidates) {
        if (c.ebn0 > best_obj * (1.0 + opts.rel_tol)) continue;
        if (!best || c.point.n < best->point.n || (c.point.n == best->point.n && c.g < best->g)) best = &c;
    }

    // Golden-section refinement of G around the winning cell.
    const double lo = std::max(opts.g_grid_step, best->g - opts.g_grid_step);
    const double hi = std::min(1.0, best->g + opts.g_grid_step);
    const double g_refined = golden_section_min(
        [&](double g) {
            const auto scan = scan_retx_at_g(spec, g, opts);
            return scan ? scan->ebn0 : kInf;
        },
        lo, hi, opts.g_refine_tol);

    RetxScan winner = *best;
    if (const auto refined = scan_retx_at_g(spec, g_refined, opts)) {
        const bool strictly_better = refined->ebn0 < winner.ebn0 * (1.0 - opts.rel_tol);
        const bool tie = refined->ebn0 <= winner.ebn0 * (1.0 + opts.rel_tol);
        const bool tie_preferred = tie && (refined->point.n < winner.point.n ||
                                           (refined->point.n == winner.point.n && refined->g < winner.g));
        if (strictly_better || tie_preferred) winner = *refined;
    }

    const FeasibleRange range = feasible_n_range(RetxParams{spec.k, spec.rho, winner.g});
    return make_solution(spec, winner.point, winner.g, range);
}

Solution solve_task(const TaskSpec& spec, const SolverOptions& opts) {
    spec.validate();
    switch (spec.task) {
        case Task::T1: return task1_min_snr(spec, opts);
        case Task::T2: return task2_min_ebn0(spec, opts);
        case Task::T3: return task3_min_snr(spec, opts);
        case Task::T4: return task4_min_ebn0(spec, opts);
    }
    throw std::invalid_argument("solve_task: unknown task id");
}

ConvertedMetrics convert_solution(const Solution& sol) {
    if (sol.spec.task == Task::T1 || sol.spec.task == Task::T2) {
        return {to_db(ebn0_to_snr(sol.n_opt, sol.spec.k, sol.ebn0)),
                to_db(snr_to_ebn0(sol.n_opt, sol.spec.k, sol.snr))};
    }
    return {to_db(snr_from_ebn0_retx(sol.ebn0, sol.spec.rho, sol.g_opt)),
            to_db(ebn0_from_snr_retx(sol.snr, sol.spec.rho, sol.g_opt))};
}

}  // namespace rab
