#include "ffm/star.hpp"

#include <cmath>

namespace ffm {

ModeField star(const ModeField& f1, const ModeField& f2, double* dropped) {
    const MomentumGrid& g = *f1.grid;
    const CutoffParam a = g.a;
    ModeField out(f1.grid);

    std::vector<GroupElement> ge;
    if (!a.classical()) {
        ge.reserve(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            ge.push_back(from_momentum(g.node_k[i], a));
    }

    double loss = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (f1.amp[i] == cplx{}) continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (f2.amp[j] == cplx{}) continue;
            Vec3 kc;
            if (a.classical()) {
                kc = g.node_k[i] + g.node_k[j];
            } else {
                const GroupElement prod = multiply(ge[i], ge[j]);
                if (1.0 + prod.s < kAntipodeEps) {  // off the chart: drop
                    loss += g.weight[i] * g.weight[j] * std::abs(f1.amp[i]) * std::abs(f2.amp[j]);
                    continue;
                }
                kc = to_momentum(prod, a);
            }
            const auto dep = try_deposit(g, kc);
            const cplx coupling = g.weight[i] * g.weight[j] * f1.amp[i] * f2.amp[j];
            if (!dep) {
                loss += std::abs(coupling);
                continue;
            }
            loss += dep->lost * std::abs(coupling);
            for (int c = 0; c < dep->count; ++c)
                out.amp[dep->index[c]] += dep->weight[c] * coupling;
        }
    }
    for (std::size_t m = 0; m < g.size(); ++m) out.amp[m] /= g.weight[m];
    if (dropped) *dropped += loss;
    return out;
}

ModeField star_commutator(const ModeField& f1, const ModeField& f2) {
    ModeField ab = star(f1, f2);
    const ModeField ba = star(f2, f1);
    for (std::size_t m = 0; m < ab.amp.size(); ++m) ab.amp[m] -= ba.amp[m];
    return ab;
}

double associator_norm(const ModeField& f1, const ModeField& f2, const ModeField& f3) {
    const ModeField left = star(star(f1, f2), f3);
    const ModeField right = star(f1, star(f2, f3));
    double acc = 0.0;
    for (std::size_t m = 0; m < left.amp.size(); ++m)
        acc += f1.grid->weight[m] * std::norm(left.amp[m] - right.amp[m]);
    return std::sqrt(acc);
}

}  // namespace ffm
