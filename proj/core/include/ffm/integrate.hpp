#pragma once

#include <functional>
#include <optional>

#include "ffm/classical.hpp"
#include "ffm/fuzzy.hpp"

namespace ffm {

// Per-step conserved-quantity record. The helicity entries are meaningful in
// the commutative theory only and are written as zeros at a > 0.
struct DiagnosticsRecord {
    double t = 0.0;
    double H = 0.0;
    double L2_lambda = 0.0;
    double L2_mu = 0.0;
    double reality_residual = 0.0;
    double aliasing_loss = 0.0;
    double helicity_scalar = 0.0;
    Vec3 helicity_vec{};
};

// Dispatches between the commutative solver (a = 0) and the cutoff engine.
// An a = 0 run therefore follows exactly the same code path as the
// commutative theory run directly.
class Dynamics {
  public:
    Dynamics(std::shared_ptr<const MomentumGrid> grid, FuzzyOptions opts);

    bool classical() const { return grid_->a.classical(); }
    const MomentumGrid& grid() const { return *grid_; }
    const FuzzyEngine& engine() const { return engine_; }

    StateDeriv rhs(const ClebschState& s) const;
    double hamiltonian(const ClebschState& s) const;
    double aliasing_loss(const ClebschState& s) const { return engine_.aliasing_loss(s); }
    std::vector<double> node_energies(const ClebschState& s) const {
        return engine_.node_energies(s);
    }

    DiagnosticsRecord diagnostics(const ClebschState& s, double pre_projection_residual) const;

  private:
    std::shared_ptr<const MomentumGrid> grid_;
    FuzzyEngine engine_;
};

// One classical RK4 step followed by a single reality projection; the
// projection magnitude (max amplitude change) is returned through *proj_mag.
ClebschState step_rk4(const ClebschState& s, double dt, const Dynamics& dyn,
                      double* proj_mag = nullptr);

struct RunParams {
    double dt = 1e-3;
    double t_end = 0.0;
    int diagnostics_every = 1;
};

struct RunResult {
    std::vector<DiagnosticsRecord> records;
    ClebschState final_state;
    bool nonfinite_abort = false;
};

// Deterministic fixed-step integration from s0 to t_end. A non-finite
// amplitude or energy aborts the run; the last finite state is returned with
// the abort flag set. step_callback, when given, fires after every step.
RunResult run(const ClebschState& s0, const Dynamics& dyn, const RunParams& params,
              const std::function<void(int step, const ClebschState&)>& step_callback = {});

}  // namespace ffm
