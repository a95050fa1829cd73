#include "ffm/integrate.hpp"

#include <cmath>

#include "ffm/errors.hpp"

namespace ffm {

Dynamics::Dynamics(std::shared_ptr<const MomentumGrid> grid, FuzzyOptions opts)
    : grid_(grid), engine_(std::move(grid), opts) {}

StateDeriv Dynamics::rhs(const ClebschState& s) const {
    return classical() ? classical_rhs(s) : engine_.rhs(s);
}

double Dynamics::hamiltonian(const ClebschState& s) const {
    return classical() ? classical_hamiltonian(s) : engine_.hamiltonian(s);
}

DiagnosticsRecord Dynamics::diagnostics(const ClebschState& s,
                                        double pre_projection_residual) const {
    DiagnosticsRecord r;
    r.t = s.t;
    r.H = hamiltonian(s);
    r.L2_lambda = l2_weighted(s.lambda);
    r.L2_mu = l2_weighted(s.mu);
    r.reality_residual = pre_projection_residual;
    r.aliasing_loss = aliasing_loss(s);
    if (classical()) {
        r.helicity_scalar = helicity_scalar(s);
        r.helicity_vec = helicity_vector(s);
    }
    return r;
}

namespace {

void axpy(std::vector<cplx>& y, double a, const std::vector<cplx>& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

ClebschState advanced(const ClebschState& s, double a, const StateDeriv& d) {
    ClebschState out = s;
    axpy(out.lambda.amp, a, d.dlambda);
    axpy(out.mu.amp, a, d.dmu);
    return out;
}

}  // namespace

ClebschState step_rk4(const ClebschState& s, double dt, const Dynamics& dyn, double* proj_mag) {
    const StateDeriv k1 = dyn.rhs(s);
    const StateDeriv k2 = dyn.rhs(advanced(s, 0.5 * dt, k1));
    const StateDeriv k3 = dyn.rhs(advanced(s, 0.5 * dt, k2));
    const StateDeriv k4 = dyn.rhs(advanced(s, dt, k3));

    ClebschState out = s;
    const double c = dt / 6.0;
    for (std::size_t i = 0; i < out.lambda.amp.size(); ++i) {
        out.lambda.amp[i] += c * (k1.dlambda[i] + 2.0 * k2.dlambda[i] + 2.0 * k3.dlambda[i]
                                  + k4.dlambda[i]);
        out.mu.amp[i] += c * (k1.dmu[i] + 2.0 * k2.dmu[i] + 2.0 * k3.dmu[i] + k4.dmu[i]);
    }

    const ClebschState projected = reality_project(out);
    if (proj_mag) {
        double m = 0.0;
        for (std::size_t i = 0; i < out.lambda.amp.size(); ++i) {
            m = std::max(m, std::abs(projected.lambda.amp[i] - out.lambda.amp[i]));
            m = std::max(m, std::abs(projected.mu.amp[i] - out.mu.amp[i]));
        }
        *proj_mag = m;
    }
    return projected;
}

RunResult run(const ClebschState& s0, const Dynamics& dyn, const RunParams& params,
              const std::function<void(int step, const ClebschState&)>& step_callback) {
    RunResult res;
    ClebschState s = s0;
    s.t = 0.0;

    res.records.push_back(dyn.diagnostics(s, reality_residual(s)));
    if (step_callback) step_callback(0, s);

    const int n_steps = static_cast<int>(std::llround(params.t_end / params.dt));
    for (int step = 1; step <= n_steps; ++step) {
        double pre_resid = 0.0;
        ClebschState next = step_rk4(s, params.dt, dyn, &pre_resid);
        next.t = step * params.dt;
        if (!all_finite(next)) {  // keep the previous state as the last good one
            res.nonfinite_abort = true;
            break;
        }
        if (step % params.diagnostics_every == 0 || step == n_steps) {
            DiagnosticsRecord r = dyn.diagnostics(next, pre_resid);
            if (!std::isfinite(r.H)) {
                res.nonfinite_abort = true;
                break;
            }
            res.records.push_back(r);
        }
        s = std::move(next);
        if (step_callback) step_callback(step, s);
    }
    res.final_state = std::move(s);
    return res;
}

}  // namespace ffm
