#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ffm/su2.hpp"
#include "ffm/vec.hpp"

namespace ffm {

// Fractional cell offsets closer to a lattice plane than this snap to it, so
// compositions that land exactly on a node deposit with a single unit weight.
inline constexpr double kDepositSnapEps = 1e-9;

// Finite, negation-symmetric truncation of momentum space: all lattice points
// h*(i,j,l) inside the ball |k| <= kmax, ordered lexicographically by integer
// triple, with quadrature weights w = h^3 / (1 + a^2 k^2)^3. Immutable after
// construction.
struct MomentumGrid {
    double h = 1.0;
    double kmax = 0.0;
    CutoffParam a{};

    std::vector<std::array<int, 3>> node_int;  // integer triples, lexicographic
    std::vector<Vec3> node_k;                  // h * triple
    std::vector<double> weight;
    std::vector<int> mirror;                   // index of -k
    int origin = -1;                           // index of k = 0

    std::size_t size() const { return node_k.size(); }
    double a_kmax() const { return a.a * kmax; }

    int index_of(int i, int j, int l) const;

  private:
    friend MomentumGrid build_grid(double h, double kmax, CutoffParam a);
    std::unordered_map<std::uint64_t, int> lookup_;
};

MomentumGrid build_grid(double h, double kmax, CutoffParam a);  // EmptyGridError

// Cloud-in-cell deposition of a chart momentum onto the surrounding lattice
// corners: at most 8 nodes carrying trilinear weights that sum to 1 in the
// interior. Corners falling outside the ball are dropped and their weight is
// reported in `lost`, so the deposit degrades continuously at the truncation
// boundary instead of vanishing there. A momentum with no surviving corner is
// fully out of band.
struct Deposit {
    int count = 0;
    std::array<int, 8> index{};
    std::array<double, 8> weight{};
    double lost = 0.0;  // CIC weight carried by corners outside the ball
};

std::optional<Deposit> try_deposit(const MomentumGrid& grid, const Vec3& k);

// Throwing wrappers matching the two chart regimes. The group form requires
// a > 0 and may surface AntipodeError from the chart map.
Deposit deposit(const MomentumGrid& grid, const GroupElement& g);  // OutOfBandError
Deposit deposit_momentum(const MomentumGrid& grid, const Vec3& k); // OutOfBandError

}  // namespace ffm
