#pragma once

#include <string>
#include <vector>

#include "ffm/integrate.hpp"

namespace ffm {

// Writes content to path via a temp file + rename so readers never observe a
// partial file.
void atomic_write_file(const std::string& path, const std::string& content);

// %.17g formatting: round-trip exact and byte-stable on a given platform.
std::string fmt_double(double v);

// Diagnostics CSV, fixed column order:
// t,H,L2_lambda,L2_mu,reality_residual,aliasing_loss,helicity_scalar,
// helicity_x,helicity_y,helicity_z
std::string diagnostics_csv(const std::vector<DiagnosticsRecord>& records);
void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRecord>& records);

// Shell-binned energy: node contributions bucketed by |k| into shells of
// width h. Shell s covers [s*h, (s+1)*h).
struct ShellRow {
    int shell = 0;
    double k_lo = 0.0;
    double k_hi = 0.0;
    double energy = 0.0;
};

std::vector<ShellRow> bin_energy_shells(const MomentumGrid& grid,
                                        const std::vector<double>& node_energy);
std::string shells_csv(const std::vector<ShellRow>& rows);

}  // namespace ffm
