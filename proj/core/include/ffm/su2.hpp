#pragma once

#include <array>
#include <complex>

#include "ffm/errors.hpp"
#include "ffm/vec.hpp"

namespace ffm {

// Threshold below which 1 + u0 counts as the antipode (momentum at infinity).
inline constexpr double kAntipodeEps = 1e-12;

// Short-distance scale a (length). a = 0 selects the commutative limit: all
// chart maps take their Euclidean form and nothing ever divides by a.
struct CutoffParam {
    double a = 0.0;
    bool classical() const { return a == 0.0; }
};

// Point of SU(2) stored as a unit quaternion, g = s*1 + i v.sigma with the
// Pauli triple sigma. Constructors normalize, so s^2 + |v|^2 = 1 holds.
struct GroupElement {
    double s = 1.0;  // scalar part, tr(g)/2
    Vec3 v{};        // vector part

    static GroupElement identity() { return {}; }
    static GroupElement antipode() { return {-1.0, {}}; }
};

GroupElement make_group_element(double s, const Vec3& v);  // normalizes

GroupElement multiply(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);
double trace(const GroupElement& g);       // = 2 s
double rho(const GroupElement& g);         // arccos(tr g / 2), clamped, in [0, pi]

// Stereographic chart between R^3 momenta and the group:
//   g = (1 - a^2 k^2)/(1 + a^2 k^2) + 2 i a sigma.k / (1 + a^2 k^2),
//   |k| = (1/a) tan(rho/2).
GroupElement from_momentum(const Vec3& k, CutoffParam a);   // requires a.a > 0
Vec3 to_momentum(const GroupElement& g, CutoffParam a);     // throws AntipodeError

// Group composition pushed to the chart. At a = 0 this is exact vector
// addition; at a > 0 it goes through the group product.
Vec3 compose_momenta(const Vec3& k1, const Vec3& k2, CutoffParam a);

// Deformed quadrature density relative to Lebesgue d^3k: 1/(1 + a^2 k^2)^3.
// The constant prefactor is fixed so the measure tends to d^3k as a -> 0.
double haar_weight(const Vec3& k, CutoffParam a);

enum class PairingChoice { PolarizedTrace, ChartDot };

// Raw group pairing (1/4a^2)[tr(g1^dag g2) - 2]; identically zero on the
// diagonal, so the dynamics use the repaired bilinears below instead.
double pairing_raw(const GroupElement& g1, const GroupElement& g2, CutoffParam a);

// Repaired pairing B with B(e, .) = 0, B(g, g) > 0 for g != e, and
// B -> k1.k2 as a -> 0:
//   PolarizedTrace: (1/2)[raw(g1,g2) - raw(g1,e) - raw(g2,e)]
//   ChartDot:       k(g1).k(g2)
double pairing(const GroupElement& g1, const GroupElement& g2, CutoffParam a,
               PairingChoice choice);  // requires a.a > 0

// Same bilinear evaluated from chart momenta; valid for a >= 0 (both choices
// return exactly k1.k2 at a = 0).
double pairing_momenta(const Vec3& k1, const Vec3& k2, CutoffParam a,
                       PairingChoice choice);

// Maurer-Cartan frame of the chart, normalized so omega(0) = xi(0) = I.
// xi = omega^{-1}; throws SingularFrameError when |det omega| < 1e-12.
Mat3 maurer_cartan_omega(const Vec3& k, CutoffParam a);
Mat3 maurer_cartan_xi(const Vec3& k, CutoffParam a);

using Mat2c = std::array<std::array<std::complex<double>, 2>, 2>;

// The Pauli triple (sigma_1, sigma_2, sigma_3).
std::array<Mat2c, 3> pauli_matrices();

// 2x2 unitary representation g = s*1 + i v.sigma of a group element.
Mat2c to_matrix(const GroupElement& g);

}  // namespace ffm
