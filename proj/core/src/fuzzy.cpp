#include "ffm/fuzzy.hpp"

#include <cmath>

namespace ffm {

namespace {

constexpr double kTwoPiSq = 4.0 * M_PI * M_PI;

using Vec4 = std::array<double, 4>;
using CVec4 = std::array<cplx, 4>;

double vdot(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

cplx vdot(const Vec4& a, const CVec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

}  // namespace

FuzzyEngine::FuzzyEngine(std::shared_ptr<const MomentumGrid> grid, FuzzyOptions opts)
    : grid_(std::move(grid)), opts_(opts) {
    const MomentumGrid& g = *grid_;
    const CutoffParam a = g.a;
    const std::size_t n = g.size();

    std::vector<GroupElement> ge;
    if (!a.classical()) {
        ge.reserve(n);
        for (std::size_t i = 0; i < n; ++i) ge.push_back(from_momentum(g.node_k[i], a));
    }

    q_.resize(n);
    qhat_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3& k = g.node_k[i];
        if (a.classical() || opts_.pairing == PairingChoice::ChartDot) {
            q_[i] = {0.0, k.x, k.y, k.z};
        } else {
            const double inv2a = 1.0 / (2.0 * a.a);
            q_[i] = {(ge[i].s - 1.0) * inv2a, ge[i].v.x * inv2a, ge[i].v.y * inv2a,
                     ge[i].v.z * inv2a};
        }
        const double qn = std::sqrt(vdot(q_[i], q_[i]));
        qhat_[i] = (qn == 0.0) ? Vec4{} : Vec4{q_[i][0] / qn, q_[i][1] / qn, q_[i][2] / qn,
                                               q_[i][3] / qn};
    }

    // Deposition table over ordered pairs; entry (i,j) carries the composed
    // element g_i g_j. count == 0 marks a fully out-of-band coupling; partial
    // boundary losses stay in Deposit::lost.
    pair_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& ti = g.node_int[i];
        for (std::size_t j = 0; j < n; ++j) {
            Deposit& d = pair_[i * n + j];
            d.lost = 1.0;
            if (a.classical()) {
                const auto& tj = g.node_int[j];
                const int m = g.index_of(ti[0] + tj[0], ti[1] + tj[1], ti[2] + tj[2]);
                if (m >= 0) {
                    d.count = 1;
                    d.index[0] = m;
                    d.weight[0] = 1.0;
                    d.lost = 0.0;
                }
            } else {
                const GroupElement prod = multiply(ge[i], ge[j]);
                if (1.0 + prod.s >= kAntipodeEps) {
                    if (auto dep = try_deposit(g, to_momentum(prod, a))) d = *dep;
                }
            }
            if (d.count == 0) dropped_.emplace_back(static_cast<int>(i), static_cast<int>(j));
            if (d.lost > 0.0)
                lossy_.push_back({static_cast<int>(i), static_cast<int>(j), d.lost});
        }
    }
}

void FuzzyEngine::accumulate_wfields(const ClebschState& s, WField* w12, WField* w21) const {
    const MomentumGrid& g = *grid_;
    const std::size_t n = g.size();
    if (w12) w12->w.assign(n, CVec4{});
    if (w21) w21->w.assign(n, CVec4{});
    for (std::size_t i = 0; i < n; ++i) {
        const double wi = g.weight[i];
        for (std::size_t j = 0; j < n; ++j) {
            const Deposit& d = pair_[i * n + j];
            if (d.count == 0) continue;
            const double ww = wi * g.weight[j];
            // The composed element g_i g_j serves the (lambda_i, mu_j)
            // coupling of the 12-ordered form and the (lambda_j, mu_i)
            // coupling of the 21-ordered one.
            if (w12) {
                const cplx c = ww * s.lambda.amp[i] * s.mu.amp[j];
                if (c != cplx{}) {
                    const Vec4& q = q_[j];
                    for (int t = 0; t < d.count; ++t) {
                        CVec4& acc = w12->w[d.index[t]];
                        const cplx cw = d.weight[t] * c;
                        for (int u = 0; u < 4; ++u) acc[u] += cw * q[u];
                    }
                }
            }
            if (w21) {
                const cplx c = ww * s.lambda.amp[j] * s.mu.amp[i];
                if (c != cplx{}) {
                    const Vec4& q = q_[i];
                    for (int t = 0; t < d.count; ++t) {
                        CVec4& acc = w21->w[d.index[t]];
                        const cplx cw = d.weight[t] * c;
                        for (int u = 0; u < 4; ++u) acc[u] += cw * q[u];
                    }
                }
            }
        }
    }
}

WField FuzzyEngine::build_wfield(const ClebschState& s, OperandOrder order) const {
    WField w;
    if (order == OperandOrder::SecondFirst)
        accumulate_wfields(s, nullptr, &w);
    else
        accumulate_wfields(s, &w, nullptr);
    return w;
}

double FuzzyEngine::hamiltonian(const ClebschState& s) const {
    WField w12, w21;
    const bool use12 = opts_.order != OperandOrder::SecondFirst;
    const bool use21 = opts_.order != OperandOrder::FirstSecond;
    accumulate_wfields(s, use12 ? &w12 : nullptr, use21 ? &w21 : nullptr);
    const double pref = (opts_.order == OperandOrder::Symmetrized) ? 0.5 : 1.0;

    double h = 0.0;
    const auto add = [&](const WField& w) {
        for (std::size_t m = 0; m < grid_->size(); ++m) {
            if (static_cast<int>(m) == grid_->origin) continue;  // identity channel
            double n2 = 0.0;
            for (int u = 0; u < 4; ++u) n2 += std::norm(w.w[m][u]);
            const cplx qw = vdot(qhat_[m], w.w[m]);
            h += pref * (n2 - std::norm(qw)) / grid_->weight[m];
        }
    };
    if (use12) add(w12);
    if (use21) add(w21);
    return 0.5 * kTwoPiSq * h;
}

std::vector<double> FuzzyEngine::node_energies(const ClebschState& s) const {
    WField w12, w21;
    const bool use12 = opts_.order != OperandOrder::SecondFirst;
    const bool use21 = opts_.order != OperandOrder::FirstSecond;
    accumulate_wfields(s, use12 ? &w12 : nullptr, use21 ? &w21 : nullptr);
    const double pref = (opts_.order == OperandOrder::Symmetrized) ? 0.5 : 1.0;

    std::vector<double> e(grid_->size(), 0.0);
    const auto add = [&](const WField& w) {
        for (std::size_t m = 0; m < grid_->size(); ++m) {
            if (static_cast<int>(m) == grid_->origin) continue;
            double n2 = 0.0;
            for (int u = 0; u < 4; ++u) n2 += std::norm(w.w[m][u]);
            const cplx qw = vdot(qhat_[m], w.w[m]);
            e[m] += 0.5 * kTwoPiSq * pref * (n2 - std::norm(qw)) / grid_->weight[m];
        }
    };
    if (use12) add(w12);
    if (use21) add(w21);
    return e;
}

StateDeriv FuzzyEngine::rhs(const ClebschState& s) const {
    const MomentumGrid& g = *grid_;
    const std::size_t n = g.size();
    const bool use12 = opts_.order != OperandOrder::SecondFirst;
    const bool use21 = opts_.order != OperandOrder::FirstSecond;
    const double pref = (opts_.order == OperandOrder::Symmetrized) ? 0.5 : 1.0;

    WField w12, w21;
    accumulate_wfields(s, use12 ? &w12 : nullptr, use21 ? &w21 : nullptr);

    // Y_m = Pi_m W_m / w_m; the identity channel carries no energy and is
    // zeroed so it never feeds back into the gradient.
    const auto make_y = [&](const WField& w) {
        std::vector<CVec4> y(n, CVec4{});
        for (std::size_t m = 0; m < n; ++m) {
            if (static_cast<int>(m) == g.origin) continue;
            const cplx qw = vdot(qhat_[m], w.w[m]);
            for (int u = 0; u < 4; ++u)
                y[m][u] = (w.w[m][u] - qw * qhat_[m][u]) / g.weight[m];
        }
        return y;
    };
    std::vector<CVec4> y12, y21;
    if (use12) y12 = make_y(w12);
    if (use21) y21 = make_y(w21);

    std::vector<cplx> s_mu(n, cplx{}), s_la(n, cplx{});

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Deposit& d = pair_[i * n + j];
            if (d.count == 0) continue;
            if (use12) {
                CVec4 yt{};
                for (int t = 0; t < d.count; ++t) {
                    const CVec4& ym = y12[d.index[t]];
                    for (int u = 0; u < 4; ++u) yt[u] += d.weight[t] * ym[u];
                }
                const cplx qy = vdot(q_[j], yt);
                // d mu: lambda leg at i; d lambda: mu leg at j. The mirrored
                // accumulations carry the conjugate-gradient halves.
                s_mu[i] += pref * g.weight[j] * std::conj(s.mu.amp[j]) * qy;
                s_mu[g.mirror[i]] += pref * g.weight[j] * s.mu.amp[j] * std::conj(qy);
                s_la[j] += pref * g.weight[i] * std::conj(s.lambda.amp[i]) * qy;
                s_la[g.mirror[j]] += pref * g.weight[i] * s.lambda.amp[i] * std::conj(qy);
            }
            if (use21) {
                CVec4 yt{};
                for (int t = 0; t < d.count; ++t) {
                    const CVec4& ym = y21[d.index[t]];
                    for (int u = 0; u < 4; ++u) yt[u] += d.weight[t] * ym[u];
                }
                const cplx qy = vdot(q_[i], yt);
                // In the 21-ordered form the coupling at g_i g_j has its mu
                // leg on i and lambda leg on j.
                s_mu[j] += pref * g.weight[i] * std::conj(s.mu.amp[i]) * qy;
                s_mu[g.mirror[j]] += pref * g.weight[i] * s.mu.amp[i] * std::conj(qy);
                s_la[i] += pref * g.weight[j] * std::conj(s.lambda.amp[j]) * qy;
                s_la[g.mirror[i]] += pref * g.weight[j] * s.lambda.amp[j] * std::conj(qy);
            }
        }
    }

    StateDeriv out{std::vector<cplx>(n), std::vector<cplx>(n)};
    const double half_c = 0.5 * kTwoPiSq;
    for (std::size_t m = 0; m < n; ++m) {
        out.dlambda[m] = half_c * s_la[m];
        out.dmu[m] = -half_c * s_mu[m];
    }
    return out;
}

double FuzzyEngine::aliasing_loss(const ClebschState& s) const {
    const MomentumGrid& g = *grid_;
    const bool use12 = opts_.order != OperandOrder::SecondFirst;
    const bool use21 = opts_.order != OperandOrder::FirstSecond;
    const double pref = (opts_.order == OperandOrder::Symmetrized) ? 0.5 : 1.0;
    double loss = 0.0;
    for (const auto& e : lossy_) {
        const double ww = e.lost * g.weight[e.i] * g.weight[e.j];
        if (use12) loss += pref * ww * std::abs(s.lambda.amp[e.i]) * std::abs(s.mu.amp[e.j]);
        if (use21) loss += pref * ww * std::abs(s.lambda.amp[e.j]) * std::abs(s.mu.amp[e.i]);
    }
    return loss;
}

}  // namespace ffm
