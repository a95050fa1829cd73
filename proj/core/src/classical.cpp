#include "ffm/classical.hpp"

#include <cmath>

namespace ffm {

namespace {

constexpr double kTwoPiSq = 4.0 * M_PI * M_PI;

using CVec3 = std::array<cplx, 3>;


CVec3 ccross(const CVec3& a, const CVec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Bilinear channel sum W(K) = sum_{k+p=K} w_k w_p lambda(k) mu(p) payload(p),
// with payload p or k x p; channels outside the ball are dropped.
template <class Payload>
std::vector<CVec3> channel_sum(const ClebschState& s, Payload payload) {
    const MomentumGrid& g = *s.lambda.grid;
    std::vector<CVec3> w(g.size(), CVec3{});
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (s.lambda.amp[i] == cplx{}) continue;
        const auto& ti = g.node_int[i];
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (s.mu.amp[j] == cplx{}) continue;
            const auto& tj = g.node_int[j];
            const int m = g.index_of(ti[0] + tj[0], ti[1] + tj[1], ti[2] + tj[2]);
            if (m < 0) continue;
            const cplx c = g.weight[i] * g.weight[j] * s.lambda.amp[i] * s.mu.amp[j];
            const Vec3 q = payload(g.node_k[i], g.node_k[j]);
            w[m][0] += c * q.x;
            w[m][1] += c * q.y;
            w[m][2] += c * q.z;
        }
    }
    return w;
}

CVec3 transverse_part(const CVec3& u, const Vec3& k, double k2) {
    const cplx kdotu = k.x * u[0] + k.y * u[1] + k.z * u[2];
    const cplx f = kdotu / k2;
    return {u[0] - k.x * f, u[1] - k.y * f, u[2] - k.z * f};
}

double cnorm2(const CVec3& u) { return std::norm(u[0]) + std::norm(u[1]) + std::norm(u[2]); }

}  // namespace

VectorModes project_divfree(const VectorModes& u) {
    VectorModes out(u.grid);
    const MomentumGrid& g = *u.grid;
    for (std::size_t m = 0; m < g.size(); ++m) {
        if (static_cast<int>(m) == g.origin) continue;  // mean flow excluded
        out.amp[m] = transverse_part(u.amp[m], g.node_k[m], norm2(g.node_k[m]));
    }
    return out;
}

VectorModes velocity_from_clebsch(const ClebschState& s) {
    const MomentumGrid& g = *s.lambda.grid;
    const auto w = channel_sum(s, [](const Vec3&, const Vec3& p) { return p; });
    VectorModes v(s.lambda.grid);
    const cplx two_pi_i{0.0, 2.0 * M_PI};
    for (std::size_t m = 0; m < g.size(); ++m) {
        if (static_cast<int>(m) == g.origin) continue;
        const CVec3 t = transverse_part(w[m], g.node_k[m], norm2(g.node_k[m]));
        const cplx f = two_pi_i / g.weight[m];
        v.amp[m] = {f * t[0], f * t[1], f * t[2]};
    }
    return v;
}

VectorModes vorticity_from_clebsch(const ClebschState& s) {
    const MomentumGrid& g = *s.lambda.grid;
    const auto w = channel_sum(s, [](const Vec3& k, const Vec3& p) { return cross(k, p); });
    VectorModes om(s.lambda.grid);
    for (std::size_t m = 0; m < g.size(); ++m) {
        const cplx f = -kTwoPiSq / g.weight[m];
        om.amp[m] = {f * w[m][0], f * w[m][1], f * w[m][2]};
    }
    return om;
}

VectorModes curl_of(const VectorModes& v) {
    VectorModes out(v.grid);
    const cplx two_pi_i{0.0, 2.0 * M_PI};
    for (std::size_t m = 0; m < v.grid->size(); ++m) {
        const CVec3 ik = {two_pi_i * v.grid->node_k[m].x, two_pi_i * v.grid->node_k[m].y,
                          two_pi_i * v.grid->node_k[m].z};
        out.amp[m] = ccross(ik, v.amp[m]);
    }
    return out;
}

double classical_hamiltonian(const ClebschState& s) {
    const MomentumGrid& g = *s.lambda.grid;
    const auto w = channel_sum(s, [](const Vec3&, const Vec3& p) { return p; });
    double h = 0.0;
    for (std::size_t m = 0; m < g.size(); ++m) {
        if (static_cast<int>(m) == g.origin) continue;
        const CVec3 t = transverse_part(w[m], g.node_k[m], norm2(g.node_k[m]));
        h += cnorm2(t) / g.weight[m];
    }
    return 0.5 * kTwoPiSq * h;
}

double classical_hamiltonian_via_velocity(const ClebschState& s) {
    return 0.5 * l2_weighted(velocity_from_clebsch(s));
}

StateDeriv classical_rhs(const ClebschState& s) {
    const MomentumGrid& g = *s.lambda.grid;
    const VectorModes v = velocity_from_clebsch(s);
    StateDeriv d{std::vector<cplx>(g.size(), cplx{}), std::vector<cplx>(g.size(), cplx{})};
    const cplx two_pi_i{0.0, 2.0 * M_PI};
    for (std::size_t i = 0; i < g.size(); ++i) {  // velocity leg
        if (cnorm2(v.amp[i]) == 0.0) continue;
        const auto& ti = g.node_int[i];
        for (std::size_t j = 0; j < g.size(); ++j) {  // advected leg
            const auto& tj = g.node_int[j];
            const int m = g.index_of(ti[0] + tj[0], ti[1] + tj[1], ti[2] + tj[2]);
            if (m < 0) continue;
            const Vec3& p = g.node_k[j];
            const cplx vdotp = v.amp[i][0] * p.x + v.amp[i][1] * p.y + v.amp[i][2] * p.z;
            const cplx f = g.weight[i] * g.weight[j] / g.weight[m] * two_pi_i * vdotp;
            d.dlambda[m] -= f * s.lambda.amp[j];
            d.dmu[m] -= f * s.mu.amp[j];
        }
    }
    return d;
}

double helicity_scalar(const ClebschState& s) {
    return helicity_scalar_of(velocity_from_clebsch(s), vorticity_from_clebsch(s));
}

double helicity_scalar_of(const VectorModes& v, const VectorModes& omega) {
    double acc = 0.0;
    for (std::size_t m = 0; m < v.grid->size(); ++m) {
        cplx c{};
        for (int d = 0; d < 3; ++d) c += std::conj(v.amp[m][d]) * omega.amp[m][d];
        acc += v.grid->weight[m] * c.real();
    }
    return acc;
}

Vec3 helicity_vector(const ClebschState& s) {
    const VectorModes v = velocity_from_clebsch(s);
    const VectorModes om = vorticity_from_clebsch(s);
    Vec3 acc{};
    for (std::size_t m = 0; m < v.grid->size(); ++m) {
        const CVec3 vc = {std::conj(v.amp[m][0]), std::conj(v.amp[m][1]), std::conj(v.amp[m][2])};
        const CVec3 x = ccross(om.amp[m], vc);
        acc += v.grid->weight[m] * Vec3{x[0].real(), x[1].real(), x[2].real()};
    }
    return acc;
}

double divergence_residual(const VectorModes& u) {
    double r = 0.0;
    for (std::size_t m = 0; m < u.grid->size(); ++m) {
        const double n2 = cnorm2(u.amp[m]);
        if (n2 == 0.0) continue;
        const Vec3& k = u.grid->node_k[m];
        const cplx kd = k.x * u.amp[m][0] + k.y * u.amp[m][1] + k.z * u.amp[m][2];
        r = std::max(r, std::abs(kd) / (norm(k) * std::sqrt(n2) + 1e-300));
    }
    return r;
}

double l2_weighted(const VectorModes& u) {
    double acc = 0.0;
    for (std::size_t m = 0; m < u.grid->size(); ++m)
        acc += u.grid->weight[m] * cnorm2(u.amp[m]);
    return acc;
}

}  // namespace ffm
