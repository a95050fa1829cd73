#include "ffm/grid.hpp"

#include <cmath>

#include "ffm/errors.hpp"

namespace ffm {

namespace {

constexpr int kKeyOffset = 1 << 20;

std::uint64_t pack_key(int i, int j, int l) {
    const auto u = [](int n) { return static_cast<std::uint64_t>(n + kKeyOffset); };
    return (u(i) << 42) | (u(j) << 21) | u(l);
}

}  // namespace

int MomentumGrid::index_of(int i, int j, int l) const {
    const auto it = lookup_.find(pack_key(i, j, l));
    return it == lookup_.end() ? -1 : it->second;
}

MomentumGrid build_grid(double h, double kmax, CutoffParam a) {
    if (h <= 0.0) throw EmptyGridError("build_grid: h must be positive");
    if (kmax < h) throw EmptyGridError("build_grid: kmax < h leaves only the origin");

    MomentumGrid g;
    g.h = h;
    g.kmax = kmax;
    g.a = a;

    const int n = static_cast<int>(std::floor(kmax / h));
    const double r2 = (kmax / h) * (kmax / h);
    for (int i = -n; i <= n; ++i)
        for (int j = -n; j <= n; ++j)
            for (int l = -n; l <= n; ++l) {
                const double q2 = double(i) * i + double(j) * j + double(l) * l;
                if (q2 > r2) continue;
                const int idx = static_cast<int>(g.node_int.size());
                g.node_int.push_back({i, j, l});
                const Vec3 k{h * i, h * j, h * l};
                g.node_k.push_back(k);
                g.weight.push_back(h * h * h * haar_weight(k, a));
                g.lookup_.emplace(pack_key(i, j, l), idx);
            }

    g.mirror.resize(g.size());
    for (std::size_t m = 0; m < g.size(); ++m) {
        const auto& t = g.node_int[m];
        g.mirror[m] = g.index_of(-t[0], -t[1], -t[2]);
    }
    g.origin = g.index_of(0, 0, 0);
    return g;
}

namespace {

// Per-axis CIC stencil: either a single plane (on-node within snap tolerance)
// or the two enclosing planes with linear weights.
struct AxisStencil {
    int cell[2];
    double w[2];
    int n;
};

AxisStencil axis_stencil(double t) {
    AxisStencil s;
    const double r = std::round(t);
    if (std::fabs(t - r) <= kDepositSnapEps * std::max(1.0, std::fabs(t))) {
        s.n = 1;
        s.cell[0] = static_cast<int>(r);
        s.w[0] = 1.0;
        return s;
    }
    const double lo = std::floor(t);
    const double f = t - lo;
    s.n = 2;
    s.cell[0] = static_cast<int>(lo);
    s.cell[1] = s.cell[0] + 1;
    s.w[0] = 1.0 - f;
    s.w[1] = f;
    return s;
}

std::optional<Deposit> deposit_canonical(const MomentumGrid& grid, const Vec3& k) {
    const AxisStencil sx = axis_stencil(k.x / grid.h);
    const AxisStencil sy = axis_stencil(k.y / grid.h);
    const AxisStencil sz = axis_stencil(k.z / grid.h);

    Deposit d;
    for (int ix = 0; ix < sx.n; ++ix)
        for (int iy = 0; iy < sy.n; ++iy)
            for (int iz = 0; iz < sz.n; ++iz) {
                const double w = sx.w[ix] * sy.w[iy] * sz.w[iz];
                const int node = grid.index_of(sx.cell[ix], sy.cell[iy], sz.cell[iz]);
                if (node < 0) {
                    d.lost += w;
                    continue;
                }
                d.index[d.count] = node;
                d.weight[d.count] = w;
                ++d.count;
            }
    if (d.count == 0) return std::nullopt;
    return d;
}

// Mirror-canonical sign: deposits of k and -k must be exact mirrors of each
// other, so the stencil is always computed on the lexicographically positive
// representative and reflected through the grid's negation map.
bool lex_negative(const Vec3& k) {
    if (k.x != 0.0) return k.x < 0.0;
    if (k.y != 0.0) return k.y < 0.0;
    return k.z < 0.0;
}

}  // namespace

std::optional<Deposit> try_deposit(const MomentumGrid& grid, const Vec3& k) {
    if (!lex_negative(k)) return deposit_canonical(grid, k);
    auto d = deposit_canonical(grid, -k);
    if (!d) return std::nullopt;
    for (int c = 0; c < d->count; ++c) d->index[c] = grid.mirror[d->index[c]];
    return d;
}

Deposit deposit_momentum(const MomentumGrid& grid, const Vec3& k) {
    auto d = try_deposit(grid, k);
    if (!d) throw OutOfBandError("deposit: chart momentum outside the truncation ball");
    return *d;
}

Deposit deposit(const MomentumGrid& grid, const GroupElement& g) {
    return deposit_momentum(grid, to_momentum(g, grid.a));
}

}  // namespace ffm
