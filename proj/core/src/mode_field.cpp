#include "ffm/mode_field.hpp"

#include <cmath>

#include "ffm/errors.hpp"
#include "ffm/rng.hpp"

namespace ffm {

double reality_residual(const ModeField& f) {
    double r = 0.0;
    for (std::size_t i = 0; i < f.amp.size(); ++i) {
        const cplx d = f.amp[f.grid->mirror[i]] - std::conj(f.amp[i]);
        r = std::max(r, std::abs(d));
    }
    return r;
}

ModeField reality_project(const ModeField& f) {
    ModeField out(f.grid);
    for (std::size_t i = 0; i < f.amp.size(); ++i)
        out.amp[i] = 0.5 * (f.amp[i] + std::conj(f.amp[f.grid->mirror[i]]));
    return out;
}

cplx evaluate_position(const ModeField& f, const Vec3& x) {
    cplx acc{};
    for (std::size_t i = 0; i < f.amp.size(); ++i) {
        const double phase = 2.0 * M_PI * dot(f.grid->node_k[i], x);
        acc += f.grid->weight[i] * f.amp[i] * cplx{std::cos(phase), std::sin(phase)};
    }
    return acc;
}

double l2_weighted(const ModeField& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < f.amp.size(); ++i)
        acc += f.grid->weight[i] * std::norm(f.amp[i]);
    return acc;
}

double reality_residual(const ClebschState& s) {
    return std::max(reality_residual(s.lambda), reality_residual(s.mu));
}

ClebschState reality_project(const ClebschState& s) {
    return {reality_project(s.lambda), reality_project(s.mu), s.t};
}

ClebschState random_band_limited(std::shared_ptr<const MomentumGrid> grid,
                                 std::uint64_t seed, double k0, double amplitude) {
    Rng rng(seed);
    ClebschState s{ModeField(grid), ModeField(grid), 0.0};
    const double inv_k02 = 1.0 / (k0 * k0);
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const int m = grid->mirror[i];
        if (static_cast<std::size_t>(m) < i) continue;  // filled by its mirror
        const double env = amplitude * std::exp(-norm2(grid->node_k[i]) * inv_k02);
        if (static_cast<std::size_t>(m) == i) {  // k = 0: real amplitude
            s.lambda.amp[i] = env * rng.normal();
            s.mu.amp[i] = env * rng.normal();
            continue;
        }
        const cplx zl = env * M_SQRT1_2 * cplx{rng.normal(), rng.normal()};
        const cplx zm = env * M_SQRT1_2 * cplx{rng.normal(), rng.normal()};
        s.lambda.amp[i] = zl;
        s.lambda.amp[m] = std::conj(zl);
        s.mu.amp[i] = zm;
        s.mu.amp[m] = std::conj(zm);
    }
    return s;
}

double state_distance(const ClebschState& x, const ClebschState& y) {
    const double h = x.lambda.grid->h;
    const double h3 = h * h * h;
    double acc = 0.0;
    for (std::size_t i = 0; i < x.lambda.amp.size(); ++i) {
        acc += std::norm(x.lambda.amp[i] - y.lambda.amp[i]);
        acc += std::norm(x.mu.amp[i] - y.mu.amp[i]);
    }
    return std::sqrt(h3 * acc);
}

bool all_finite(const ClebschState& s) {
    const auto ok = [](const ModeField& f) {
        for (const cplx& z : f.amp)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    };
    return ok(s.lambda) && ok(s.mu) && std::isfinite(s.t);
}

}  // namespace ffm
