#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "ffm/grid.hpp"

namespace ffm {

using cplx = std::complex<double>;

// Complex amplitudes over the grid nodes (one of the Clebsch mode functions).
// Physical fields obey the reality involution f(-k) = conj f(k).
struct ModeField {
    std::shared_ptr<const MomentumGrid> grid;
    std::vector<cplx> amp;

    ModeField() = default;
    explicit ModeField(std::shared_ptr<const MomentumGrid> g)
        : grid(std::move(g)), amp(grid->size(), cplx{}) {}
};

// Max over nodes of |f(-k) - conj f(k)|.
double reality_residual(const ModeField& f);

// Averaging projector onto reality-symmetric fields; idempotent.
ModeField reality_project(const ModeField& f);

// Truncated position-space evaluation f(x) = sum_i w_i f_i exp(2 pi i k_i.x).
cplx evaluate_position(const ModeField& f, const Vec3& x);

// Weighted norms sum_i w_i |f_i|^2.
double l2_weighted(const ModeField& f);

struct ClebschState {
    ModeField lambda;
    ModeField mu;
    double t = 0.0;
};

double reality_residual(const ClebschState& s);
ClebschState reality_project(const ClebschState& s);

// Time derivative of the two mode functions.
struct StateDeriv {
    std::vector<cplx> dlambda;
    std::vector<cplx> dmu;
};

// Seeded band-limited random state: independent complex Gaussians per mirror
// pair with spectral envelope amplitude * exp(-|k|^2 / k0^2), mirrored for
// reality (the k = 0 mode is drawn real).
ClebschState random_band_limited(std::shared_ptr<const MomentumGrid> grid,
                                 std::uint64_t seed, double k0, double amplitude);

// Flat L2 distance between two states on the same node set,
// sqrt(sum h^3 (|d lambda|^2 + |d mu|^2)); weights are deliberately the
// undeformed ones so states carrying different a remain comparable.
double state_distance(const ClebschState& x, const ClebschState& y);

bool all_finite(const ClebschState& s);

}  // namespace ffm
