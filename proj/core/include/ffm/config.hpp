#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffm/mode_field.hpp"
#include "ffm/su2.hpp"

namespace ffm {

// Numerical thresholds used by the run and the embedded verification suite,
// carried in the config so a run is reproducible from one file.
struct Tolerances {
    double reality = 1e-10;
    double group_axioms = 1e-14;
    double chart_roundtrip = 1e-12;
    double pairing_closed_form = 1e-12;
    double classical_equivalence = 1e-12;
    double gradient_fd = 1e-6;
    double deposition_duality = 1e-14;
    double fd_step = 1e-6;
};

struct ModeSpec {
    std::array<int, 3> k{};
    cplx lambda{};
    cplx mu{};
};

struct InitialCondition {
    enum class Kind { Random, Modes };
    Kind kind = Kind::Random;
    // random
    std::uint64_t seed = 0;
    double k0 = 1.0;
    double amplitude = 0.0;
    // explicit list; mirrored automatically for reality
    std::vector<ModeSpec> modes;
};

struct SimConfig {
    double a = 0.0;
    double h = 1.0;
    double kmax = 1.0;
    double dt = 1e-3;
    double t_end = 0.0;
    PairingChoice pairing = PairingChoice::PolarizedTrace;
    std::string integrator = "rk4";
    InitialCondition initial;
    std::string output_dir = "out";
    int snapshot_every = 0;     // 0: final snapshot only
    int diagnostics_every = 1;  // record cadence in steps
    Tolerances tol;
};

// Strict schema: unknown keys anywhere are rejected with the offending key
// named in the error message.
SimConfig load_sim_config(const std::string& path);      // ConfigError
SimConfig parse_sim_config(const std::string& text,
                           const std::string& origin);   // ConfigError

// Every field explicit, defaults included; reloading this text reproduces
// the run.
std::string resolved_config_json(const SimConfig& cfg);

std::shared_ptr<const MomentumGrid> make_grid(const SimConfig& cfg);
ClebschState make_initial_state(const SimConfig& cfg,
                                std::shared_ptr<const MomentumGrid> grid);  // ConfigError

}  // namespace ffm
