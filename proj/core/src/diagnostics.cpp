#include "ffm/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ffm/errors.hpp"

namespace ffm {

void atomic_write_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw SnapshotError("cannot open for writing: " + tmp);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw SnapshotError("short write: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string diagnostics_csv(const std::vector<DiagnosticsRecord>& records) {
    std::string out =
        "t,H,L2_lambda,L2_mu,reality_residual,aliasing_loss,"
        "helicity_scalar,helicity_x,helicity_y,helicity_z\n";
    for (const auto& r : records) {
        out += fmt_double(r.t) + ',' + fmt_double(r.H) + ',' + fmt_double(r.L2_lambda) + ','
             + fmt_double(r.L2_mu) + ',' + fmt_double(r.reality_residual) + ','
             + fmt_double(r.aliasing_loss) + ',' + fmt_double(r.helicity_scalar) + ','
             + fmt_double(r.helicity_vec.x) + ',' + fmt_double(r.helicity_vec.y) + ','
             + fmt_double(r.helicity_vec.z) + '\n';
    }
    return out;
}

void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRecord>& records) {
    atomic_write_file(path, diagnostics_csv(records));
}

std::vector<ShellRow> bin_energy_shells(const MomentumGrid& grid,
                                        const std::vector<double>& node_energy) {
    const int n_shells = static_cast<int>(std::floor(grid.kmax / grid.h)) + 1;
    std::vector<ShellRow> rows(n_shells);
    for (int s = 0; s < n_shells; ++s)
        rows[s] = {s, s * grid.h, (s + 1) * grid.h, 0.0};
    for (std::size_t m = 0; m < grid.size(); ++m) {
        int s = static_cast<int>(std::floor(norm(grid.node_k[m]) / grid.h));
        s = std::min(s, n_shells - 1);
        rows[s].energy += node_energy[m];
    }
    return rows;
}

std::string shells_csv(const std::vector<ShellRow>& rows) {
    std::string out = "shell,k_lo,k_hi,energy\n";
    for (const auto& r : rows) {
        out += std::to_string(r.shell) + ',' + fmt_double(r.k_lo) + ',' + fmt_double(r.k_hi)
             + ',' + fmt_double(r.energy) + '\n';
    }
    return out;
}

}  // namespace ffm
