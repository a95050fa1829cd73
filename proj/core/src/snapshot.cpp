#include "ffm/snapshot.hpp"

#include <fstream>

#include <json.hpp>

#include "ffm/diagnostics.hpp"
#include "ffm/errors.hpp"

namespace ffm {

using nlohmann::json;

std::string pairing_name(PairingChoice p) {
    return p == PairingChoice::PolarizedTrace ? "polarized_trace" : "chart_dot";
}

PairingChoice pairing_from_name(const std::string& name) {
    if (name == "polarized_trace") return PairingChoice::PolarizedTrace;
    if (name == "chart_dot") return PairingChoice::ChartDot;
    throw ConfigError("unknown pairing '" + name + "' (expected polarized_trace or chart_dot)");
}

namespace {

json grid_header(const MomentumGrid& g) {
    json nodes = json::array();
    for (const auto& t : g.node_int) nodes.push_back({t[0], t[1], t[2]});
    return json{{"a", g.a.a}, {"h", g.h}, {"kmax", g.kmax}, {"nodes", std::move(nodes)}};
}

std::shared_ptr<const MomentumGrid> grid_from_header(const json& j, const std::string& path) {
    const double a = j.at("a").get<double>();
    const double h = j.at("h").get<double>();
    const double kmax = j.at("kmax").get<double>();
    auto grid = std::make_shared<MomentumGrid>(build_grid(h, kmax, CutoffParam{a}));
    const auto& nodes = j.at("nodes");
    if (nodes.size() != grid->size())
        throw SnapshotError(path + ": node list does not match the (h, kmax) grid");
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const auto& t = nodes[i];
        if (t.size() != 3 || t[0].get<int>() != grid->node_int[i][0]
            || t[1].get<int>() != grid->node_int[i][1] || t[2].get<int>() != grid->node_int[i][2])
            throw SnapshotError(path + ": node order differs from the canonical grid order");
    }
    return grid;
}

json amp_block(const std::vector<cplx>& amp) {
    json re = json::array(), im = json::array();
    for (const cplx& z : amp) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

void read_amp_block(const json& j, std::vector<cplx>& amp, const std::string& path) {
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != amp.size() || im.size() != amp.size())
        throw SnapshotError(path + ": amplitude arrays do not match the grid size");
    for (std::size_t i = 0; i < amp.size(); ++i)
        amp[i] = cplx{re[i].get<double>(), im[i].get<double>()};
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SnapshotError("cannot open snapshot: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw SnapshotError(path + ": " + e.what());
    }
    return j;
}

}  // namespace

void write_mode_field(const std::string& path, const ModeField& f) {
    json j = grid_header(*f.grid);
    const json block = amp_block(f.amp);
    j["re"] = block.at("re");
    j["im"] = block.at("im");
    atomic_write_file(path, j.dump(2) + "\n");
}

ModeField read_mode_field(const std::string& path) {
    const json j = load_json(path);
    try {
        ModeField f(grid_from_header(j, path));
        read_amp_block(j, f.amp, path);
        return f;
    } catch (const json::exception& e) {
        throw SnapshotError(path + ": " + e.what());
    }
}

void write_state_snapshot(const std::string& path, const ClebschState& s,
                          PairingChoice pairing) {
    json j = grid_header(*s.lambda.grid);
    j["pairing"] = pairing_name(pairing);
    j["t"] = s.t;
    j["lambda"] = amp_block(s.lambda.amp);
    j["mu"] = amp_block(s.mu.amp);
    atomic_write_file(path, j.dump(2) + "\n");
}

StateSnapshot read_state_snapshot(const std::string& path) {
    const json j = load_json(path);
    try {
        auto grid = grid_from_header(j, path);
        StateSnapshot snap;
        snap.state.lambda = ModeField(grid);
        snap.state.mu = ModeField(grid);
        snap.state.t = j.at("t").get<double>();
        snap.pairing = pairing_from_name(j.at("pairing").get<std::string>());
        read_amp_block(j.at("lambda"), snap.state.lambda.amp, path);
        read_amp_block(j.at("mu"), snap.state.mu.amp, path);
        return snap;
    } catch (const json::exception& e) {
        throw SnapshotError(path + ": " + e.what());
    }
}

}  // namespace ffm
