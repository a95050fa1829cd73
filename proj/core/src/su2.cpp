#include "ffm/su2.hpp"

#include <algorithm>
#include <cmath>

namespace ffm {

GroupElement make_group_element(double s, const Vec3& v) {
    const double n2 = s * s + norm2(v);
    if (std::fabs(n2 - 1.0) <= 1e-14) return {s, v};  // keeps e.g exactly g
    const double n = std::sqrt(n2);
    return {s / n, v / n};
}

// Product of g1 = (a0, a) and g2 = (b0, b) in the i*sigma basis:
//   (a0 b0 - a.b, a0 b + b0 a - a x b),
// the sign of the cross term matching 2x2 matrix multiplication of
// a0*1 + i a.sigma. Renormalized to keep |g| = 1 under long products.
GroupElement multiply(const GroupElement& g1, const GroupElement& g2) {
    const double s = g1.s * g2.s - dot(g1.v, g2.v);
    const Vec3 v = g1.s * g2.v + g2.s * g1.v - cross(g1.v, g2.v);
    return make_group_element(s, v);
}

GroupElement inverse(const GroupElement& g) { return {g.s, -g.v}; }

double trace(const GroupElement& g) { return 2.0 * g.s; }

double rho(const GroupElement& g) { return std::acos(std::clamp(g.s, -1.0, 1.0)); }

GroupElement from_momentum(const Vec3& k, CutoffParam a) {
    const double ak2 = a.a * a.a * norm2(k);
    const double d = 1.0 + ak2;
    return {(1.0 - ak2) / d, (2.0 * a.a / d) * k};
}

Vec3 to_momentum(const GroupElement& g, CutoffParam a) {
    const double denom = 1.0 + g.s;
    if (denom < kAntipodeEps)
        throw AntipodeError("to_momentum: group element at (or within 1e-12 of) the antipode");
    return g.v / (a.a * denom);
}

Vec3 compose_momenta(const Vec3& k1, const Vec3& k2, CutoffParam a) {
    if (a.classical()) return k1 + k2;
    return to_momentum(multiply(from_momentum(k1, a), from_momentum(k2, a)), a);
}

double haar_weight(const Vec3& k, CutoffParam a) {
    const double d = 1.0 + a.a * a.a * norm2(k);
    return 1.0 / (d * d * d);
}

double pairing_raw(const GroupElement& g1, const GroupElement& g2, CutoffParam a) {
    // (1/4a^2)[tr(g1^dag g2) - 2] = (1/2a^2)(s1 s2 + v1.v2 - 1)
    return (g1.s * g2.s + dot(g1.v, g2.v) - 1.0) / (2.0 * a.a * a.a);
}

double pairing(const GroupElement& g1, const GroupElement& g2, CutoffParam a,
               PairingChoice choice) {
    switch (choice) {
        case PairingChoice::PolarizedTrace: {
            const GroupElement e = GroupElement::identity();
            return 0.5 * (pairing_raw(g1, g2, a) - pairing_raw(g1, e, a) - pairing_raw(g2, e, a));
        }
        case PairingChoice::ChartDot:
            return dot(to_momentum(g1, a), to_momentum(g2, a));
    }
    return 0.0;
}

double pairing_momenta(const Vec3& k1, const Vec3& k2, CutoffParam a, PairingChoice choice) {
    if (a.classical()) return dot(k1, k2);
    return pairing(from_momentum(k1, a), from_momentum(k2, a), a, choice);
}

Mat3 maurer_cartan_omega(const Vec3& k, CutoffParam a) {
    if (a.classical()) return Mat3::identity();
    // Components of g^{-1} dg against the i sigma/2 basis, divided by 4a so
    // that omega(0) = I. Closed form for the stereographic chart:
    //   omega_ij = [(1-a^2k^2)(D d_ij - 2a^2 k_i k_j) + 4a^2 k_i k_j]/D^3
    //              - (2a/D^2) eps_ijl k_l,    D = 1 + a^2 k^2.
    const double aa = a.a;
    const double k2 = norm2(k);
    const double d = 1.0 + aa * aa * k2;
    const double d2 = d * d, d3 = d2 * d;
    const double c1 = (1.0 - aa * aa * k2);
    const std::array<double, 3> kc{k.x, k.y, k.z};
    Mat3 w;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double dij = (i == j) ? 1.0 : 0.0;
            w(i, j) = (c1 * (d * dij - 2.0 * aa * aa * kc[i] * kc[j])
                       + 4.0 * aa * aa * kc[i] * kc[j]) / d3;
        }
    const double ce = 2.0 * aa / d2;
    w(0, 1) -= ce * kc[2];
    w(0, 2) += ce * kc[1];
    w(1, 0) += ce * kc[2];
    w(1, 2) -= ce * kc[0];
    w(2, 0) -= ce * kc[1];
    w(2, 1) += ce * kc[0];
    return w;
}

Mat3 maurer_cartan_xi(const Vec3& k, CutoffParam a) {
    const Mat3 w = maurer_cartan_omega(k, a);
    const double d = det(w);
    if (std::fabs(d) < 1e-12)
        throw SingularFrameError("maurer_cartan_xi: |det omega| < 1e-12");
    return inverse(w, d);
}

std::array<Mat2c, 3> pauli_matrices() {
    using c = std::complex<double>;
    const c i{0.0, 1.0};
    Mat2c s1{{{c{0.0}, c{1.0}}, {c{1.0}, c{0.0}}}};
    Mat2c s2{{{c{0.0}, -i}, {i, c{0.0}}}};
    Mat2c s3{{{c{1.0}, c{0.0}}, {c{0.0}, c{-1.0}}}};
    return {s1, s2, s3};
}

Mat2c to_matrix(const GroupElement& g) {
    using c = std::complex<double>;
    const c i{0.0, 1.0};
    return {{{g.s + i * g.v.z, i * g.v.x + g.v.y},
             {i * g.v.x - g.v.y, g.s - i * g.v.z}}};
}

}  // namespace ffm
