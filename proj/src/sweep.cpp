#include "rab/sweep.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "rab/bounds.hpp"
#include "rab/errors.hpp"
#include "rab/fbl.hpp"

namespace rab {

namespace {

void fill_lower_bounds(SweepRow& row) {
    if (row.task == Task::T1 || row.task == Task::T2) {
        row.lb_snr_db = to_db(lb_snr_no_retx(row.rho, *row.pd));
        row.lb_ebn0_db = to_db(lb_ebn0_no_retx(row.rho, *row.pd));
    } else {
        row.lb_snr_db = to_db(lb_snr_retx(row.rho));
        row.lb_ebn0_db = to_db(lb_ebn0_retx(row.rho).value);
    }
}

}  // namespace

void SweepSpec::validate() const {
    if (values.empty()) throw std::invalid_argument("SweepSpec: values must be non-empty");
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] > values[i - 1])) throw std::invalid_argument("SweepSpec: values must be strictly increasing");
    }
    if (axis == SweepAxis::K) {
        for (double v : values) {
            if (!(v >= 1.0) || v != std::floor(v)) throw std::invalid_argument("SweepSpec: k values must be positive integers");
        }
    } else {
        for (double v : values) {
            if (!(v > 0.0)) throw std::invalid_argument("SweepSpec: rho values must be positive");
        }
    }
}

SweepRow solve_row(const TaskSpec& spec, bool emit_converted, bool emit_lower_bounds, const SolverOptions& opts) {
    spec.validate();
    SweepRow row;
    row.task = spec.task;
    row.k = spec.k;
    row.rho = spec.rho;
    row.pd = spec.pd;
    try {
        const Solution sol = solve_task(spec, opts);
        row.n_opt = sol.n_opt;
        row.g_opt = sol.g_opt;
        row.snr_db = sol.snr_db;
        row.ebn0_db = sol.ebn0_db;
        if (emit_converted) {
            const ConvertedMetrics conv = convert_solution(sol);
            row.snr_converted_db = conv.snr_db;
            row.ebn0_converted_db = conv.ebn0_db;
        }
        if (emit_lower_bounds) fill_lower_bounds(row);
        row.status = RowStatus::Ok;
    } catch (const InfeasibleSpecError&) {
        row.status = RowStatus::Infeasible;
    }
    return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SolverOptions& opts) {
    spec.validate();
    std::vector<SweepRow> rows;
    rows.reserve(spec.values.size());
    for (double value : spec.values) {
        TaskSpec ts{spec.task, spec.k, spec.rho, spec.pd};
        if (spec.axis == SweepAxis::K) {
            ts.k = static_cast<int>(std::llround(value));
        } else {
            ts.rho = value;
        }
        rows.push_back(solve_row(ts, spec.emit_converted, spec.emit_lower_bounds, opts));
    }
    return rows;
}

std::vector<double> figure_axis_values(int figure_id) {
    if (figure_id == 1 || figure_id == 2) {
        // 24 log-spaced integers in [20, 2000]
        std::set<long long> ks;
        for (int i = 0; i < 24; ++i) {
            ks.insert(std::llround(20.0 * std::pow(100.0, i / 23.0)));
        }
        return {ks.begin(), ks.end()};
    }
    if (figure_id == 3 || figure_id == 4) {
        // rho from 0.02 to 0.18 in steps of 0.01
        std::vector<double> rhos;
        for (int i = 2; i <= 18; ++i) rhos.push_back(i / 100.0);
        return rhos;
    }
    throw std::invalid_argument("figure_axis_values: figure id must be 1..4");
}

std::vector<SweepSpec> figure_sweeps(int figure_id) {
    const std::vector<double> values = figure_axis_values(figure_id);
    std::vector<SweepSpec> sweeps;
    if (figure_id == 1 || figure_id == 2) {
        for (double rho : {0.1, 0.12}) {
            for (Task task : {Task::T1, Task::T2}) {
                SweepSpec s;
                s.task = task;
                s.axis = SweepAxis::K;
                s.values = values;
                s.rho = rho;
                s.pd = 0.9;
                sweeps.push_back(std::move(s));
            }
        }
        return sweeps;
    }
    for (Task task : {Task::T1, Task::T2, Task::T3, Task::T4}) {
        SweepSpec s;
        s.task = task;
        s.axis = SweepAxis::Rho;
        s.values = values;
        s.k = 50;
        if (task == Task::T1 || task == Task::T2) s.pd = 0.65;
        sweeps.push_back(std::move(s));
    }
    return sweeps;
}

}  // namespace rab
