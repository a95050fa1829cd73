#include "ffm/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

#include "ffm/snapshot.hpp"

namespace ffm {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key))
            throw ConfigError("unknown key '" + where + key + "'");
}

double require_number(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) throw ConfigError("missing required key '" + where + key + "'");
    if (!obj.at(key).is_number())
        throw ConfigError("key '" + where + key + "' must be a number");
    return obj.at(key).get<double>();
}

double optional_number(const json& obj, const std::string& key, double fallback,
                       const std::string& where) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number())
        throw ConfigError("key '" + where + key + "' must be a number");
    return obj.at(key).get<double>();
}

InitialCondition parse_initial(const json& j) {
    if (!j.is_object()) throw ConfigError("'initial' must be an object");
    reject_unknown_keys(j, {"random", "modes"}, "initial.");
    if (j.contains("random") == j.contains("modes"))
        throw ConfigError("'initial' must contain exactly one of 'random' or 'modes'");

    InitialCondition ic;
    if (j.contains("random")) {
        const json& r = j.at("random");
        reject_unknown_keys(r, {"seed", "k0", "amplitude"}, "initial.random.");
        ic.kind = InitialCondition::Kind::Random;
        if (!r.contains("seed") || !r.at("seed").is_number_unsigned())
            throw ConfigError("'initial.random.seed' must be a non-negative integer");
        ic.seed = r.at("seed").get<std::uint64_t>();
        ic.k0 = require_number(r, "k0", "initial.random.");
        ic.amplitude = require_number(r, "amplitude", "initial.random.");
        if (ic.k0 <= 0.0) throw ConfigError("'initial.random.k0' must be positive");
        if (ic.amplitude < 0.0) throw ConfigError("'initial.random.amplitude' must be >= 0");
        return ic;
    }

    ic.kind = InitialCondition::Kind::Modes;
    const json& modes = j.at("modes");
    if (!modes.is_array() || modes.empty())
        throw ConfigError("'initial.modes' must be a non-empty array");
    for (const json& m : modes) {
        reject_unknown_keys(m, {"k", "lambda", "mu"}, "initial.modes[].");
        ModeSpec spec;
        const json& k = m.at("k");
        if (!k.is_array() || k.size() != 3)
            throw ConfigError("'initial.modes[].k' must be an integer triple");
        for (int d = 0; d < 3; ++d) {
            if (!k[d].is_number_integer())
                throw ConfigError("'initial.modes[].k' must be an integer triple");
            spec.k[d] = k[d].get<int>();
        }
        const auto pair2 = [&](const char* key) {
            const json& v = m.at(key);
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                throw ConfigError(std::string("'initial.modes[].") + key
                                  + "' must be [re, im]");
            return cplx{v[0].get<double>(), v[1].get<double>()};
        };
        spec.lambda = pair2("lambda");
        spec.mu = pair2("mu");
        ic.modes.push_back(spec);
    }
    return ic;
}

Tolerances parse_tolerances(const json& j) {
    Tolerances t;
    reject_unknown_keys(j,
                        {"reality", "group_axioms", "chart_roundtrip", "pairing_closed_form",
                         "classical_equivalence", "gradient_fd", "deposition_duality",
                         "fd_step"},
                        "tolerances.");
    t.reality = optional_number(j, "reality", t.reality, "tolerances.");
    t.group_axioms = optional_number(j, "group_axioms", t.group_axioms, "tolerances.");
    t.chart_roundtrip = optional_number(j, "chart_roundtrip", t.chart_roundtrip, "tolerances.");
    t.pairing_closed_form =
        optional_number(j, "pairing_closed_form", t.pairing_closed_form, "tolerances.");
    t.classical_equivalence =
        optional_number(j, "classical_equivalence", t.classical_equivalence, "tolerances.");
    t.gradient_fd = optional_number(j, "gradient_fd", t.gradient_fd, "tolerances.");
    t.deposition_duality =
        optional_number(j, "deposition_duality", t.deposition_duality, "tolerances.");
    t.fd_step = optional_number(j, "fd_step", t.fd_step, "tolerances.");
    return t;
}

}  // namespace

SimConfig parse_sim_config(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    if (!j.is_object()) throw ConfigError(origin + ": config must be a JSON object");

    reject_unknown_keys(j,
                        {"a", "h", "kmax", "dt", "t_end", "pairing", "integrator", "initial",
                         "output_dir", "snapshot_every", "diagnostics_every", "tolerances"},
                        "");

    SimConfig cfg;
    cfg.a = require_number(j, "a", "");
    cfg.h = require_number(j, "h", "");
    cfg.kmax = require_number(j, "kmax", "");
    cfg.dt = require_number(j, "dt", "");
    cfg.t_end = require_number(j, "t_end", "");
    if (!j.contains("pairing")) throw ConfigError("missing required key 'pairing'");
    cfg.pairing = pairing_from_name(j.at("pairing").get<std::string>());
    if (!j.contains("initial")) throw ConfigError("missing required key 'initial'");
    cfg.initial = parse_initial(j.at("initial"));

    if (j.contains("integrator")) {
        cfg.integrator = j.at("integrator").get<std::string>();
        if (cfg.integrator != "rk4")
            throw ConfigError("'integrator' must be \"rk4\"");
    }
    if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("snapshot_every")) {
        if (!j.at("snapshot_every").is_number_integer())
            throw ConfigError("'snapshot_every' must be an integer");
        cfg.snapshot_every = j.at("snapshot_every").get<int>();
    }
    if (j.contains("diagnostics_every")) {
        if (!j.at("diagnostics_every").is_number_integer())
            throw ConfigError("'diagnostics_every' must be an integer");
        cfg.diagnostics_every = j.at("diagnostics_every").get<int>();
    }
    if (j.contains("tolerances")) cfg.tol = parse_tolerances(j.at("tolerances"));

    if (cfg.a < 0.0) throw ConfigError("'a' must be >= 0");
    if (cfg.h <= 0.0) throw ConfigError("'h' must be positive");
    if (cfg.kmax < cfg.h) throw ConfigError("'kmax' must be >= h");
    if (cfg.dt <= 0.0) throw ConfigError("'dt' must be positive");
    if (cfg.t_end < 0.0) throw ConfigError("'t_end' must be >= 0");
    if (cfg.snapshot_every < 0) throw ConfigError("'snapshot_every' must be >= 0");
    if (cfg.diagnostics_every < 1) throw ConfigError("'diagnostics_every' must be >= 1");
    return cfg;
}

SimConfig load_sim_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_sim_config(text, path);
}

std::string resolved_config_json(const SimConfig& cfg) {
    json j;
    j["a"] = cfg.a;
    j["h"] = cfg.h;
    j["kmax"] = cfg.kmax;
    j["dt"] = cfg.dt;
    j["t_end"] = cfg.t_end;
    j["pairing"] = pairing_name(cfg.pairing);
    j["integrator"] = cfg.integrator;
    j["output_dir"] = cfg.output_dir;
    j["snapshot_every"] = cfg.snapshot_every;
    j["diagnostics_every"] = cfg.diagnostics_every;
    if (cfg.initial.kind == InitialCondition::Kind::Random) {
        j["initial"]["random"] = {
            {"seed", cfg.initial.seed}, {"k0", cfg.initial.k0},
            {"amplitude", cfg.initial.amplitude}};
    } else {
        json modes = json::array();
        for (const ModeSpec& m : cfg.initial.modes) {
            modes.push_back({{"k", {m.k[0], m.k[1], m.k[2]}},
                             {"lambda", {m.lambda.real(), m.lambda.imag()}},
                             {"mu", {m.mu.real(), m.mu.imag()}}});
        }
        j["initial"]["modes"] = std::move(modes);
    }
    j["tolerances"] = {{"reality", cfg.tol.reality},
                       {"group_axioms", cfg.tol.group_axioms},
                       {"chart_roundtrip", cfg.tol.chart_roundtrip},
                       {"pairing_closed_form", cfg.tol.pairing_closed_form},
                       {"classical_equivalence", cfg.tol.classical_equivalence},
                       {"gradient_fd", cfg.tol.gradient_fd},
                       {"deposition_duality", cfg.tol.deposition_duality},
                       {"fd_step", cfg.tol.fd_step}};
    return j.dump(2) + "\n";
}

std::shared_ptr<const MomentumGrid> make_grid(const SimConfig& cfg) {
    return std::make_shared<MomentumGrid>(build_grid(cfg.h, cfg.kmax, CutoffParam{cfg.a}));
}

ClebschState make_initial_state(const SimConfig& cfg,
                                std::shared_ptr<const MomentumGrid> grid) {
    if (cfg.initial.kind == InitialCondition::Kind::Random)
        return random_band_limited(grid, cfg.initial.seed, cfg.initial.k0,
                                   cfg.initial.amplitude);

    ClebschState s{ModeField(grid), ModeField(grid), 0.0};
    std::set<int> seen;
    for (const ModeSpec& m : cfg.initial.modes) {
        const int idx = grid->index_of(m.k[0], m.k[1], m.k[2]);
        if (idx < 0)
            throw ConfigError("initial mode k = [" + std::to_string(m.k[0]) + ","
                              + std::to_string(m.k[1]) + "," + std::to_string(m.k[2])
                              + "] is not a grid node");
        const int mir = grid->mirror[idx];
        if (seen.count(idx) || (mir != idx && seen.count(mir)))
            throw ConfigError("initial mode listed twice (directly or via its mirror)");
        seen.insert(idx);
        seen.insert(mir);
        if (mir == idx) {  // k = 0 must carry a real amplitude
            if (m.lambda.imag() != 0.0 || m.mu.imag() != 0.0)
                throw ConfigError("the k = 0 initial mode must be real");
            s.lambda.amp[idx] = m.lambda;
            s.mu.amp[idx] = m.mu;
            continue;
        }
        s.lambda.amp[idx] = m.lambda;
        s.lambda.amp[mir] = std::conj(m.lambda);
        s.mu.amp[idx] = m.mu;
        s.mu.amp[mir] = std::conj(m.mu);
    }
    return s;
}

}  // namespace ffm
