#include "ffm/sweep.hpp"

#include <cmath>
#include <limits>

#include "ffm/diagnostics.hpp"

namespace ffm {

namespace {

ClebschState run_at(const SimConfig& cfg, double a) {
    SimConfig c = cfg;
    c.a = a;
    auto grid = make_grid(c);
    const Dynamics dyn(grid, FuzzyOptions{c.pairing, OperandOrder::Symmetrized});
    const ClebschState s0 = make_initial_state(c, grid);
    RunResult r = run(s0, dyn, RunParams{c.dt, c.t_end, 1});
    if (r.nonfinite_abort) throw NonFiniteError("sweep: run at a = " + fmt_double(a)
                                                + " became non-finite");
    return r.final_state;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SimConfig& cfg, const std::vector<double>& a_list) {
    if (a_list.empty()) throw ConfigError("sweep: empty a list");
    for (std::size_t i = 0; i < a_list.size(); ++i) {
        if (a_list[i] < 0.0) throw ConfigError("sweep: a values must be >= 0");
        if (i > 0 && a_list[i] >= a_list[i - 1])
            throw ConfigError("sweep: a values must be strictly descending");
    }

    const ClebschState reference = run_at(cfg, 0.0);

    std::vector<SweepRow> rows;
    bool has_zero = false;
    for (double a : a_list) {
        SweepRow row;
        row.a = a;
        row.distance = state_distance(run_at(cfg, a), reference);
        rows.push_back(row);
        if (a == 0.0) has_zero = true;
    }
    if (!has_zero) rows.push_back({0.0, state_distance(run_at(cfg, 0.0), reference), 0.0});

    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].order = nan;
        if (i == 0 || rows[i].a <= 0.0 || rows[i].distance <= 0.0) continue;
        if (rows[i - 1].distance <= 0.0) continue;
        rows[i].order = std::log(rows[i - 1].distance / rows[i].distance)
                      / std::log(rows[i - 1].a / rows[i].a);
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "a,D,order\n";
    for (const auto& r : rows)
        out += fmt_double(r.a) + ',' + fmt_double(r.distance) + ',' + fmt_double(r.order) + '\n';
    return out;
}

}  // namespace ffm
