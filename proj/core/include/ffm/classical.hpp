#pragma once

#include <array>

#include "ffm/mode_field.hpp"

namespace ffm {

// Three complex amplitudes per node (velocity or vorticity modes).
struct VectorModes {
    std::shared_ptr<const MomentumGrid> grid;
    std::vector<std::array<cplx, 3>> amp;

    VectorModes() = default;
    explicit VectorModes(std::shared_ptr<const MomentumGrid> g)
        : grid(std::move(g)), amp(grid->size(), std::array<cplx, 3>{}) {}
};

// Leray projector per mode: u - khat (khat.u); the k = 0 mode is pinned to
// zero (no mean flow). Idempotent.
VectorModes project_divfree(const VectorModes& u);

// v = P(lambda grad mu):
//   vtilde(K) = (2 pi i / w_K) Pi_K sum_{k+p=K} w_k w_p lambda(k) mu(p) p.
VectorModes velocity_from_clebsch(const ClebschState& s);

// omega = grad lambda x grad mu:
//   omegatilde(K) = -(2 pi)^2 (1/w_K) sum_{k+p=K} w_k w_p lambda(k) mu(p) (k x p).
VectorModes vorticity_from_clebsch(const ClebschState& s);

// curl in mode space, (2 pi i K) x vtilde(K).
VectorModes curl_of(const VectorModes& v);

// Kinetic energy through the factorized channel sum,
//   H = (1/2)(2 pi)^2 sum_{K != 0} W(K)^dag Pi_K W(K) / w_K,
// and independently through (1/2) sum_K w_K |vtilde(K)|^2.
double classical_hamiltonian(const ClebschState& s);
double classical_hamiltonian_via_velocity(const ClebschState& s);

// Advection by the reconstructed velocity:
//   d lambda(K)/dt = -(1/w_K) sum_{k+p=K} w_k w_p vtilde(k).(2 pi i p) lambda(p),
// and identically for mu. Equals the Hamiltonian gradient flow of
// classical_hamiltonian on reality-symmetric states.
StateDeriv classical_rhs(const ClebschState& s);

// Kinetic helicity sum_K w_K conj(vtilde(K)).omegatilde(K); vanishes for
// Clebsch states whose products stay inside the ball. The vector variant
// sum_K w_K Re[omegatilde(K) x conj(vtilde(K))] is emitted alongside it.
double helicity_scalar(const ClebschState& s);
Vec3 helicity_vector(const ClebschState& s);
double helicity_scalar_of(const VectorModes& v, const VectorModes& omega);

// Max over modes of |k.u(k)| / |u(k)| (zero modes skipped).
double divergence_residual(const VectorModes& u);

double l2_weighted(const VectorModes& u);

}  // namespace ffm
