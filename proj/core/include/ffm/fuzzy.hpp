#pragma once

#include "ffm/mode_field.hpp"

namespace ffm {

// Which composed element carries a (lambda_i, mu_j) coupling through the
// momentum-conservation constraint: g_i g_j, g_j g_i, or the average of the
// two quartic forms. The two pure orders coincide classically and differ at
// O(a); only the symmetrized form is invariant under the reality involution,
// so it is the default used by the dynamics.
enum class OperandOrder { FirstSecond, SecondFirst, Symmetrized };

struct FuzzyOptions {
    PairingChoice pairing = PairingChoice::PolarizedTrace;
    OperandOrder order = OperandOrder::Symmetrized;
};

// Bilinear content of the quartic energy, deposited at composed momenta:
//   W_m = sum_{i,j} w_i w_j lambda_i mu_j c_m(G_ij) q(g_j),
// where q linearizes the pairing, B(g1,g2) = q(g1).q(g2). q is a 4-vector:
// ((u0-1)/2a, u/2a) for PolarizedTrace, (0, k(g)) for ChartDot; both reduce
// to (0, k) at a = 0, where W matches the classical channel sum exactly.
struct WField {
    std::vector<std::array<cplx, 4>> w;
};

// Cutoff Clebsch dynamics on a fixed grid. Precomputes the group elements,
// pairing vectors and the pair deposition table once; all evaluations are
// deterministic fixed-order reductions.
class FuzzyEngine {
  public:
    FuzzyEngine(std::shared_ptr<const MomentumGrid> grid, FuzzyOptions opts);

    // H = (1/2)(2 pi)^2 sum_{m != origin} W_m^dag Pi_m W_m / w_m with
    // Pi_m = I - qhat_m qhat_m^T; nonnegative, equals the classical kinetic
    // energy at a = 0. Symmetrized order averages the two pure forms.
    double hamiltonian(const ClebschState& s) const;

    // Exact gradient flow of hamiltonian() along reality-preserving
    // directions:
    //   d mu_n/dt    = -(1/w_n)[dH/d conj(lambda_n) + conj(dH/d lambda_nbar)]
    //   d lambda_n/dt = +(1/w_n)[dH/d conj(mu_n)    + conj(dH/d mu_nbar)],
    // which reproduces the advection equations of the commutative theory at
    // a = 0 on reality-symmetric states.
    StateDeriv rhs(const ClebschState& s) const;

    WField build_wfield(const ClebschState& s, OperandOrder order) const;

    // Per-node energy content E_m (H = sum of shells of E_m).
    std::vector<double> node_energies(const ClebschState& s) const;

    // Bilinear mass sum of lost_ij w_i w_j |lambda_i||mu_j| over couplings
    // whose composed momentum left (fully or partially) the ball.
    double aliasing_loss(const ClebschState& s) const;
    std::size_t dropped_pair_count() const { return dropped_.size(); }

    const MomentumGrid& grid() const { return *grid_; }
    const FuzzyOptions& options() const { return opts_; }

  private:
    std::shared_ptr<const MomentumGrid> grid_;
    FuzzyOptions opts_;
    struct LossEntry {
        int i, j;
        double lost;
    };

    std::vector<std::array<double, 4>> q_;     // pairing vector per node
    std::vector<std::array<double, 4>> qhat_;  // unit q (zero at the origin)
    std::vector<Deposit> pair_;                // ordered pairs, count 0 = dropped
    std::vector<std::pair<int, int>> dropped_;
    std::vector<LossEntry> lossy_;

    void accumulate_wfields(const ClebschState& s, WField* w12, WField* w21) const;
};

}  // namespace ffm
