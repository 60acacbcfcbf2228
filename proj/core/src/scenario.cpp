#include "hatom/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace hatom::io {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ValidationError(field + ": " + what);
}

void check_known_keys(const json& j, const std::string& prefix,
                      const std::set<std::string>& known) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!known.count(it.key())) {
            fail(prefix.empty() ? it.key() : prefix + "." + it.key(), "unknown field");
        }
    }
}

double get_number(const json& j, const std::string& field, double fallback) {
    if (!j.contains(field)) return fallback;
    if (!j.at(field).is_number()) fail(field, "must be a number");
    return j.at(field).get<double>();
}

long get_integer(const json& j, const std::string& field, long fallback) {
    if (!j.contains(field)) return fallback;
    if (!j.at(field).is_number_integer()) fail(field, "must be an integer");
    return j.at(field).get<long>();
}

bool get_bool(const json& j, const std::string& field, bool fallback) {
    if (!j.contains(field)) return fallback;
    if (!j.at(field).is_boolean()) fail(field, "must be a boolean");
    return j.at(field).get<bool>();
}

std::string get_string(const json& j, const std::string& field, const std::string& fallback) {
    if (!j.contains(field)) return fallback;
    if (!j.at(field).is_string()) fail(field, "must be a string");
    return j.at(field).get<std::string>();
}

Vec3 get_vec3(const json& j, const std::string& field, Vec3 fallback) {
    if (!j.contains(field)) return fallback;
    const auto& a = j.at(field);
    if (!a.is_array() || a.size() != 3 || !a[0].is_number() || !a[1].is_number() ||
        !a[2].is_number()) {
        fail(field, "must be an array of 3 numbers");
    }
    return Vec3{a[0].get<double>(), a[1].get<double>(), a[2].get<double>()};
}

ExperimentKind parse_kind(const std::string& s) {
    if (s == "quantum-reference") return ExperimentKind::quantum_reference;
    if (s == "hybrid") return ExperimentKind::hybrid;
    if (s == "oracle") return ExperimentKind::oracle;
    if (s == "compare") return ExperimentKind::compare;
    fail("kind", "must be one of quantum-reference|hybrid|oracle|compare, got \"" + s + "\"");
}

ForceLaw parse_law(const std::string& s) {
    if (s == "adiabatic-gradient") return ForceLaw::adiabatic_gradient;
    if (s == "ehrenfest") return ForceLaw::ehrenfest;
    fail("force_law", "must be adiabatic-gradient or ehrenfest, got \"" + s + "\"");
}

RelInit parse_rel_init(const std::string& s) {
    if (s == "ground") return RelInit::ground;
    if (s == "superposition01") return RelInit::superposition01;
    if (s == "displaced-gaussian") return RelInit::displaced_gaussian;
    fail("oracle.initial_relative",
         "must be ground|superposition01|displaced-gaussian, got \"" + s + "\"");
}

std::string rel_init_string(RelInit r) {
    switch (r) {
        case RelInit::ground: return "ground";
        case RelInit::superposition01: return "superposition01";
        case RelInit::displaced_gaussian: return "displaced-gaussian";
    }
    return "?";
}

ScenarioConfig from_json(const json& j) {
    if (!j.is_object()) throw ParseError("config root must be a JSON object");
    check_known_keys(j, "", {"kind", "mass_ratio", "packet", "force_law", "proton",
                             "horizon_kepler", "dt", "stride", "seed", "out_dir",
                             "emit_density", "density_grid", "oracle"});
    if (!j.contains("kind")) fail("kind", "required");
    if (!j.at("kind").is_string()) fail("kind", "must be a string");

    ScenarioConfig c;
    c.kind = parse_kind(j.at("kind").get<std::string>());
    c.mass_ratio = get_number(j, "mass_ratio", kPhysicalMassRatio);
    if (!(c.mass_ratio > 0.0) || !std::isfinite(c.mass_ratio)) {
        fail("mass_ratio", "must be finite and > 0");
    }

    if (j.contains("packet")) {
        const auto& p = j.at("packet");
        if (!p.is_object()) fail("packet", "must be an object");
        check_known_keys(p, "packet", {"n_bar", "sigma_n", "sigma_com", "window"});
        c.packet.n_bar = get_number(p, "n_bar", 60.0);
        c.packet.sigma_n = get_number(p, "sigma_n", 0.8);
        c.packet.sigma_com = get_number(p, "sigma_com", 10.0);
        if (p.contains("window")) {
            const auto& w = p.at("window");
            if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() ||
                !w[1].is_number_integer()) {
                fail("packet.window", "must be [n_lo, n_hi] integers");
            }
            c.packet.n_lo = w[0].get<int>();
            c.packet.n_hi = w[1].get<int>();
        }
        if (!(c.packet.n_bar >= 1.0)) fail("packet.n_bar", "must be >= 1");
        if (!(c.packet.sigma_n > 0.0)) fail("packet.sigma_n", "must be > 0");
        if (!(c.packet.sigma_com > 0.0)) fail("packet.sigma_com", "must be > 0");
        if (c.packet.has_window()) {
            if (c.packet.n_lo < 1) fail("packet.window", "n_lo must be >= 1");
            if (c.packet.n_lo > c.packet.n_bar || c.packet.n_hi < c.packet.n_bar) {
                fail("packet.window", "must contain n_bar");
            }
        }
    }

    c.force_law = parse_law(get_string(j, "force_law", "adiabatic-gradient"));
    if (j.contains("proton")) {
        const auto& p = j.at("proton");
        if (!p.is_object()) fail("proton", "must be an object");
        check_known_keys(p, "proton", {"r0", "p0"});
        c.r_p0 = get_vec3(p, "r0", Vec3{});
        c.p_p0 = get_vec3(p, "p0", Vec3{});
    }
    c.horizon_kepler = get_number(j, "horizon_kepler", 10.0);
    if (!(c.horizon_kepler > 0.0)) fail("horizon_kepler", "must be > 0");
    c.dt = get_number(j, "dt", 0.0);
    if (c.dt < 0.0) fail("dt", "must be >= 0 (0 selects the module default)");
    c.stride = static_cast<int>(get_integer(j, "stride", 64));
    if (c.stride < 1) fail("stride", "must be >= 1");
    const long seed = get_integer(j, "seed", 0);
    if (seed < 0) fail("seed", "must be >= 0");
    c.seed = static_cast<unsigned long>(seed);
    c.out_dir = get_string(j, "out_dir", "out");
    if (c.out_dir.empty()) fail("out_dir", "must be nonempty");
    c.emit_density = get_bool(j, "emit_density", false);
    c.density_grid = static_cast<int>(get_integer(j, "density_grid", 384));
    if (c.density_grid < 32) fail("density_grid", "must be >= 32");

    if (j.contains("oracle")) {
        const auto& o = j.at("oracle");
        if (!o.is_object()) fail("oracle", "must be an object");
        check_known_keys(o, "oracle",
                         {"mass_ratio", "softening", "box_half_width", "grid_points",
                          "initial_relative", "gaussian_center", "gaussian_width", "com_width",
                          "com_center", "boost", "total_time", "dt", "stride", "purity_every",
                          "record_density"});
        auto& s = c.oracle;
        s.mass_ratio = get_number(o, "mass_ratio", 100.0);
        s.softening = get_number(o, "softening", 1.0);
        s.box_half_width = get_number(o, "box_half_width", 40.0);
        s.grid_points = static_cast<int>(get_integer(o, "grid_points", 512));
        s.initial_relative = parse_rel_init(get_string(o, "initial_relative", "superposition01"));
        s.gaussian_center = get_number(o, "gaussian_center", 0.0);
        s.gaussian_width = get_number(o, "gaussian_width", 1.0);
        s.com_width = get_number(o, "com_width", 5.0);
        s.com_center = get_number(o, "com_center", 0.0);
        s.boost = get_number(o, "boost", 0.0);
        s.total_time = get_number(o, "total_time", 35.0);
        s.dt = get_number(o, "dt", 0.05);
        s.stride = static_cast<int>(get_integer(o, "stride", 10));
        s.purity_every = static_cast<int>(get_integer(o, "purity_every", 5));
        s.record_density = get_bool(o, "record_density", true);

        if (!(s.mass_ratio > 0.0)) fail("oracle.mass_ratio", "must be > 0");
        if (!(s.softening > 0.0)) fail("oracle.softening", "must be > 0");
        if (!(s.box_half_width > 0.0)) fail("oracle.box_half_width", "must be > 0");
        if (s.grid_points < 16) fail("oracle.grid_points", "must be >= 16");
        if (!(s.gaussian_width > 0.0)) fail("oracle.gaussian_width", "must be > 0");
        if (!(s.com_width > 0.0)) fail("oracle.com_width", "must be > 0");
        if (!(s.total_time > 0.0)) fail("oracle.total_time", "must be > 0");
        if (!(s.dt > 0.0)) fail("oracle.dt", "must be > 0");
        if (s.stride < 1) fail("oracle.stride", "must be >= 1");
        if (s.purity_every < 0) fail("oracle.purity_every", "must be >= 0");
        const double dx = 2.0 * s.box_half_width / s.grid_points;
        if (dx > s.softening / 4.0) {
            fail("oracle.grid_points", "grid spacing " + std::to_string(dx) +
                                           " does not resolve the softening length (need dx <= s/4)");
        }
    }

    if (c.kind == ExperimentKind::compare &&
        c.oracle.initial_relative == RelInit::displaced_gaussian) {
        fail("oracle.initial_relative",
             "compare runs support ground or superposition01 initial states");
    }
    return c;
}

json to_json(const ScenarioConfig& c) {
    json j;
    j["kind"] = to_string(c.kind);
    j["mass_ratio"] = c.mass_ratio;
    json p;
    p["n_bar"] = c.packet.n_bar;
    p["sigma_n"] = c.packet.sigma_n;
    p["sigma_com"] = c.packet.sigma_com;
    if (c.packet.has_window()) p["window"] = {c.packet.n_lo, c.packet.n_hi};
    j["packet"] = p;
    j["force_law"] = to_string(c.force_law);
    j["proton"] = {{"r0", {c.r_p0.x, c.r_p0.y, c.r_p0.z}},
                   {"p0", {c.p_p0.x, c.p_p0.y, c.p_p0.z}}};
    j["horizon_kepler"] = c.horizon_kepler;
    j["dt"] = c.dt;
    j["stride"] = c.stride;
    j["seed"] = c.seed;
    j["out_dir"] = c.out_dir;
    j["emit_density"] = c.emit_density;
    j["density_grid"] = c.density_grid;
    json o;
    o["mass_ratio"] = c.oracle.mass_ratio;
    o["softening"] = c.oracle.softening;
    o["box_half_width"] = c.oracle.box_half_width;
    o["grid_points"] = c.oracle.grid_points;
    o["initial_relative"] = rel_init_string(c.oracle.initial_relative);
    o["gaussian_center"] = c.oracle.gaussian_center;
    o["gaussian_width"] = c.oracle.gaussian_width;
    o["com_width"] = c.oracle.com_width;
    o["com_center"] = c.oracle.com_center;
    o["boost"] = c.oracle.boost;
    o["total_time"] = c.oracle.total_time;
    o["dt"] = c.oracle.dt;
    o["stride"] = c.oracle.stride;
    o["purity_every"] = c.oracle.purity_every;
    o["record_density"] = c.oracle.record_density;
    j["oracle"] = o;
    return j;
}

} // namespace

std::string to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::quantum_reference: return "quantum-reference";
        case ExperimentKind::hybrid: return "hybrid";
        case ExperimentKind::oracle: return "oracle";
        case ExperimentKind::compare: return "compare";
    }
    return "?";
}

std::string to_string(ForceLaw law) {
    return law == ForceLaw::adiabatic_gradient ? "adiabatic-gradient" : "ehrenfest";
}

ScenarioConfig parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return from_json(j);
}

ScenarioConfig load_scenario(const std::string& path) {
    return load_scenario(path, {});
}

ScenarioConfig load_scenario(const std::string& path, const std::vector<std::string>& overrides) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open config file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    json j;
    try {
        j = json::parse(ss.str());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": malformed JSON: " + e.what());
    }
    for (const auto& ov : overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("override \"" + ov + "\": expected key=value");
        }
        const std::string path_part = ov.substr(0, eq);
        const std::string value_part = ov.substr(eq + 1);
        json value;
        try {
            value = json::parse(value_part);
        } catch (const nlohmann::json::exception&) {
            value = value_part; // bare strings allowed
        }
        json* node = &j;
        std::size_t start = 0;
        while (true) {
            const auto dot = path_part.find('.', start);
            const std::string key = path_part.substr(start, dot - start);
            if (key.empty()) throw ValidationError("override \"" + ov + "\": empty key segment");
            if (dot == std::string::npos) {
                (*node)[key] = value;
                break;
            }
            node = &(*node)[key];
            start = dot + 1;
        }
    }
    return from_json(j);
}

std::string serialize_scenario(const ScenarioConfig& config) {
    return to_json(config).dump(2) + "\n";
}

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b) {
    return serialize_scenario(a) == serialize_scenario(b);
}

} // namespace hatom::io
