#pragma once

#include "ffm/config.hpp"

namespace ffm {

struct SweepRow {
    double a = 0.0;
    double distance = 0.0;  // L2 state distance to the commutative run at t_end
    double order = 0.0;     // empirical order vs previous row (nan when undefined)
};

// Runs the cutoff dynamics at each a (descending, >= 0) on the fixed
// (h, kmax, dt, t_end) of cfg and reports the final-state distance to the
// a = 0 run. A baseline a = 0 row is appended when the list lacks one.
std::vector<SweepRow> run_sweep(const SimConfig& cfg, const std::vector<double>& a_list);

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace ffm
