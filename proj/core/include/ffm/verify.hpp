#pragma once

#include <string>
#include <vector>

#include "ffm/config.hpp"
#include "ffm/integrate.hpp"

namespace ffm {

struct VerifyCheck {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

// Embedded invariant suite: group axioms, chart identities, pairing closed
// forms, deposition properties, a = 0 equivalence of the two solvers, and
// finite-difference gradient consistency. Deterministic; force_fault injects
// one failing entry so the reporting path can be exercised.
std::vector<VerifyCheck> run_verify_suite(const Tolerances& tol, bool force_fault = false);

// Reality-preserving central finite difference of H with respect to the
// conjugate of mode n (the mirror mode moves conjugately so the state stays
// physical). This is the derivative the Hamilton equations refer to.
enum class WhichField { Lambda, Mu };
template <class HamiltonianFn>
cplx fd_conjugate_gradient(const HamiltonianFn& ham, const ClebschState& s, WhichField which,
                           std::size_t n, double step) {
    const auto eval = [&](cplx eps) {
        ClebschState p = s;
        ModeField& f = (which == WhichField::Lambda) ? p.lambda : p.mu;
        const std::size_t m = f.grid->mirror[n];
        f.amp[n] += eps;
        if (m != n) f.amp[m] += std::conj(eps);
        return ham(p);
    };
    const std::size_t m = s.lambda.grid->mirror[n];
    const double gx = (eval(cplx{step, 0.0}) - eval(cplx{-step, 0.0})) / (2.0 * step);
    if (m == n) return cplx{gx, 0.0};  // self-mirror mode: only the real direction exists
    const double gy = (eval(cplx{0.0, step}) - eval(cplx{0.0, -step})) / (2.0 * step);
    return 0.5 * cplx{gx, gy};
}

}  // namespace ffm
