// Copyright 2026 The Entroflux Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entroflux/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace entroflux {

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + " must be an object");
}

void reject_unknown_keys(const json& j, const std::string& where,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) throw ConfigError("unknown key '" + key + "' in " + where);
    }
}

double get_number(const json& j, const char* key, const std::string& where) {
    const auto it = j.find(key);
    if (it == j.end()) throw ConfigError(where + "." + key + " is required");
    if (!it->is_number()) throw ConfigError(where + "." + key + " must be a number");
    return it->get<double>();
}

double number_or(const json& j, const char* key, double fallback, const std::string& where) {
    return j.contains(key) ? get_number(j, key, where) : fallback;
}

std::uint64_t unsigned_or(const json& j, const char* key, std::uint64_t fallback,
                          const std::string& where) {
    const auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number_integer() || (!it->is_number_unsigned() && it->get<std::int64_t>() < 0)) {
        throw ConfigError(where + "." + key + " must be a non-negative integer");
    }
    return it->get<std::uint64_t>();
}

ComplexMatrix parse_matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ConfigError(where + " must be a non-empty array of rows");
    const auto d = static_cast<Index>(j.size());
    ComplexMatrix m(d, d);
    for (Index r = 0; r < d; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Index>(row.size()) != d) {
            throw ConfigError(where + " must be square (row " + std::to_string(r) + " has wrong length)");
        }
        for (Index c = 0; c < d; ++c) {
            const json& e = row[static_cast<std::size_t>(c)];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw ConfigError(where + " entries must be [re, im] pairs");
            }
            m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

ControlLaw parse_control(const json& j, const std::string& where) {
    require_object(j, where);
    const auto kind_it = j.find("kind");
    if (kind_it == j.end() || !kind_it->is_string()) throw ConfigError(where + ".kind is required");
    const std::string kind = kind_it->get<std::string>();
    if (kind == "zero") {
        reject_unknown_keys(j, where, {"kind"});
        return ControlLaw::zero();
    }
    if (kind == "constant") {
        reject_unknown_keys(j, where, {"kind", "value"});
        return ControlLaw::constant(get_number(j, "value", where));
    }
    if (kind == "bloch_x_proportional") {
        reject_unknown_keys(j, where, {"kind", "gain"});
        return ControlLaw::bloch_x_proportional(get_number(j, "gain", where));
    }
    throw ConfigError(where + ".kind must be one of zero, constant, bloch_x_proportional");
}

IntegratorConfig parse_integrator(const json& j) {
    const std::string where = "ensemble.integrator";
    require_object(j, where);
    reject_unknown_keys(j, where,
                        {"dt", "t_final", "record_stride", "floor", "repair_tolerance",
                         "repair_flag_threshold"});
    IntegratorConfig c;
    c.dt = get_number(j, "dt", where);
    c.t_final = get_number(j, "t_final", where);
    c.record_stride = static_cast<int>(unsigned_or(j, "record_stride", 1, where));
    c.floor = number_or(j, "floor", c.floor, where);
    c.repair_tolerance = number_or(j, "repair_tolerance", c.repair_tolerance, where);
    c.repair_flag_threshold = number_or(j, "repair_flag_threshold", c.repair_flag_threshold, where);
    return c;
}

Emit parse_emit(const json& j) {
    if (j == "trajectories") return Emit::trajectories;
    if (j == "ensemble") return Emit::ensemble;
    if (j == "bound_report") return Emit::bound_report;
    throw ConfigError("emit entries must be trajectories, ensemble or bound_report");
}

}  // namespace

ModelSpec RunConfig::build_model() const {
    if (model) return *model;
    return qubit::stabilization_model(*scenario);
}

RunConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    require_object(root, "config");
    reject_unknown_keys(root, "config",
                        {"scenario", "model", "initial_state", "ensemble", "output_path", "emit",
                         "smoothing_window"});

    RunConfig cfg;
    try {
        const bool has_scenario = root.contains("scenario");
        const bool has_model = root.contains("model");
        if (has_scenario == has_model) {
            throw ConfigError("config needs exactly one of 'scenario' and 'model'");
        }
        if (has_scenario) {
            const json& s = root["scenario"];
            require_object(s, "scenario");
            reject_unknown_keys(s, "scenario", {"kappa", "alpha", "control"});
            qubit::QubitScenario sc;
            sc.kappa = get_number(s, "kappa", "scenario");
            sc.alpha = get_number(s, "alpha", "scenario");
            if (s.contains("control")) sc.control = parse_control(s["control"], "scenario.control");
            sc.validate();
            cfg.scenario = sc;
        } else {
            const json& m = root["model"];
            require_object(m, "model");
            reject_unknown_keys(m, "model", {"hamiltonian", "probe", "decoherence", "control"});
            for (const char* key : {"hamiltonian", "probe", "decoherence"}) {
                if (!m.contains(key)) throw ConfigError(std::string("model.") + key + " is required");
            }
            ControlLaw law = ControlLaw::zero();
            if (m.contains("control")) law = parse_control(m["control"], "model.control");
            cfg.model.emplace(parse_matrix(m["hamiltonian"], "model.hamiltonian"),
                              parse_matrix(m["probe"], "model.probe"),
                              parse_matrix(m["decoherence"], "model.decoherence"), law);
        }

        if (!root.contains("initial_state")) throw ConfigError("initial_state is required");
        const json& init = root["initial_state"];
        require_object(init, "initial_state");
        reject_unknown_keys(init, "initial_state", {"bloch", "matrix"});
        if (init.contains("bloch") == init.contains("matrix")) {
            throw ConfigError("initial_state needs exactly one of 'bloch' and 'matrix'");
        }
        if (init.contains("bloch")) {
            const json& b = init["bloch"];
            if (!b.is_array() || b.size() != 3 || !b[0].is_number() || !b[1].is_number() ||
                !b[2].is_number()) {
                throw ConfigError("initial_state.bloch must be [x, y, z]");
            }
            cfg.initial_state = qubit::bloch_to_density(
                {b[0].get<double>(), b[1].get<double>(), b[2].get<double>()});
        } else {
            cfg.initial_state = DensityMatrix(parse_matrix(init["matrix"], "initial_state.matrix"));
        }

        if (!root.contains("ensemble")) throw ConfigError("ensemble is required");
        const json& e = root["ensemble"];
        require_object(e, "ensemble");
        reject_unknown_keys(e, "ensemble",
                            {"n_trajectories", "master_seed", "worker_count", "integrator"});
        cfg.ensemble.n_trajectories = unsigned_or(e, "n_trajectories", 1, "ensemble");
        cfg.ensemble.master_seed = unsigned_or(e, "master_seed", 0, "ensemble");
        if (e.contains("worker_count")) {
            cfg.ensemble.worker_count =
                static_cast<unsigned>(unsigned_or(e, "worker_count", 1, "ensemble"));
            cfg.workers_from_document = true;
        }
        if (!e.contains("integrator")) throw ConfigError("ensemble.integrator is required");
        cfg.ensemble.integrator = parse_integrator(e["integrator"]);
        cfg.ensemble.validate();

        if (root.contains("output_path")) {
            if (!root["output_path"].is_string()) throw ConfigError("output_path must be a string");
            cfg.output_path = root["output_path"].get<std::string>();
        }
        if (root.contains("emit")) {
            const json& em = root["emit"];
            if (!em.is_array()) throw ConfigError("emit must be an array");
            cfg.emit.clear();
            for (const auto& x : em) cfg.emit.insert(parse_emit(x));
        }
        if (root.contains("smoothing_window")) {
            cfg.smoothing_window =
                static_cast<int>(unsigned_or(root, "smoothing_window", 1, "config"));
            if (cfg.smoothing_window < 1 || cfg.smoothing_window % 2 == 0) {
                throw ConfigError("smoothing_window must be a positive odd integer");
            }
        }

        const ModelSpec model = cfg.build_model();
        if (model.dim() != cfg.initial_state.dim()) {
            throw ConfigError("initial_state dimension does not match the model");
        }
    } catch (const ValidationError& e) {
        throw ConfigError(e.what());
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config(os.str());
}

}  // namespace entroflux
