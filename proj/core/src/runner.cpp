#include "hatom/runner.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hatom/csv.hpp"
#include "hatom/density.hpp"
#include "hatom/snapshot.hpp"
#include "hatom/svgplot.hpp"
#include "hatom/version.hpp"

namespace hatom::io {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

void add_check(RunManifest& m, const std::string& name, double measured, double tol,
               char direction = '<') {
    InvariantCheck c;
    c.name = name;
    c.measured = measured;
    c.tolerance = tol;
    c.direction = direction;
    c.pass = (direction == '<') ? (measured <= tol) : (measured >= tol);
    m.invariants.push_back(c);
}

std::string artifact(RunManifest& m, const std::string& dir, const std::string& name) {
    m.artifacts.push_back(name);
    return (fs::path(dir) / name).string();
}

// ----- quantum-reference ---------------------------------------------------

void run_quantum_reference(const ScenarioConfig& cfg, RunManifest& man) {
    const AtomParams params = make_params(cfg.mass_ratio);
    const CircularPacket packet = build_packet(cfg.packet, params);
    const PacketTables tables(packet);
    const TimeScales ts = time_scales(packet.spec, params);

    man.derived.emplace_back("t_kepler", ts.t_kepler);
    man.derived.emplace_back("t_rev", ts.t_rev);
    man.derived.emplace_back("t_spread", ts.t_spread);
    man.derived.emplace_back("t_rev_over_t_kepler", ts.t_rev / ts.t_kepler);
    man.derived.emplace_back("t_spread_over_t_kepler", ts.t_spread / ts.t_kepler);
    man.derived.emplace_back("kernel_width_electron",
                             electron_kernel_width(params, cfg.packet.sigma_com));
    man.derived.emplace_back("kernel_width_proton",
                             proton_kernel_width(params, cfg.packet.sigma_com));
    man.derived.emplace_back("kernel_width_ratio", params.m_p / params.m_e);

    const double dt = (cfg.dt > 0.0) ? cfg.dt : ts.t_kepler / 4096.0;
    const double t_end = cfg.horizon_kepler * ts.t_kepler;
    const double sample_dt = dt * cfg.stride;
    const std::size_t n_samples = static_cast<std::size_t>(std::floor(t_end / sample_dt)) + 1;

    std::vector<std::vector<double>> cols(13);
    const Vec3 r0 = tables.center(packet, 0.0);
    double revival_peak = 0.0;
    double min_before_rev = 1e300;
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double t = i * sample_dt;
        const Vec3 r = tables.center(packet, t);
        const Vec3 p = tables.momentum(packet, t);
        const auto [re, rp] = particle_centers(r, params);
        const double ac = tables.autocorrelation(packet, t);
        const double nrm = evolve_coeffs(packet, t).norm2();
        std::size_t j = 0;
        cols[j++].push_back(t);
        cols[j++].push_back(r.x);
        cols[j++].push_back(r.y);
        cols[j++].push_back(norm(r));
        cols[j++].push_back(p.x);
        cols[j++].push_back(p.y);
        cols[j++].push_back(re.x);
        cols[j++].push_back(re.y);
        cols[j++].push_back(rp.x);
        cols[j++].push_back(rp.y);
        cols[j++].push_back(ac);
        cols[j++].push_back(nrm);
        cols[j++].push_back(norm(r) / norm(r0));
        if (t >= 0.95 * ts.t_rev && t <= 1.05 * ts.t_rev) {
            revival_peak = std::max(revival_peak, norm(r) / norm(r0));
        }
        if (t >= ts.t_spread && t <= 0.9 * ts.t_rev) {
            min_before_rev = std::min(min_before_rev, norm(r) / norm(r0));
        }
    }
    const std::string csv = csv_table(
        "quantum-reference",
        {"t", "r_x", "r_y", "r_abs", "p_x", "p_y", "re_x", "re_y", "rp_x", "rp_y",
         "autocorrelation", "norm", "localization"},
        {"atu", "a0", "a0", "a0", "au", "au", "a0", "a0", "a0", "a0", "1", "1", "1"}, cols);
    write_text_file(artifact(man, cfg.out_dir, "trajectory.csv"), csv);

    std::vector<Series> loc{{"|<r>|(t)/|<r>(0)|", cols[0], cols[12]},
                            {"autocorrelation", cols[0], cols[10]}};
    write_svg(artifact(man, cfg.out_dir, "localization.svg"),
              timeseries_svg("Circular packet localization and autocorrelation", "t [atu]",
                             "dimensionless", loc));

    // invariants actually executed on this run
    double max_norm_dev = 0.0;
    for (double v : cols[11]) max_norm_dev = std::max(max_norm_dev, std::abs(v - 1.0));
    add_check(man, "norm_conservation", max_norm_dev, 1e-12);

    double max_center_identity = 0.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double mex = params.m_e * cols[6][i] + params.m_p * cols[8][i];
        const double mey = params.m_e * cols[7][i] + params.m_p * cols[9][i];
        max_center_identity =
            std::max(max_center_identity, std::hypot(mex, mey) / std::max(1.0, norm(r0)));
    }
    add_check(man, "center_of_mass_identity", max_center_identity, 1e-12);
    add_check(man, "spread_before_revival",
              (std::isfinite(ts.t_spread) && ts.t_spread > ts.t_kepler && ts.t_spread < ts.t_rev)
                  ? 0.0 : 1.0, 0.5);
    if (cfg.horizon_kepler * ts.t_kepler >= 1.05 * ts.t_rev) {
        add_check(man, "revival_recovery", revival_peak, 0.5, '>');
        add_check(man, "delocalized_between", min_before_rev, 0.1);
        man.derived.emplace_back("revival_peak_localization", revival_peak);
    }

    if (cfg.emit_density) {
        const double a = bohr_scale(params, packet.mass);
        const double kp = proton_kernel_width(params, cfg.packet.sigma_com);
        const double ke = electron_kernel_width(params, cfg.packet.sigma_com);
        PlaneGrid grid;
        grid.n = cfg.density_grid;
        grid.half_width = std::max(1.5 * cfg.packet.n_bar * cfg.packet.n_bar * a, 1.1 * kp);
        const PlanarDensity raw = sample_density_plane(packet, 0.0, grid);
        const PlanarDensity el = coarse_grain(raw, ke);
        const PlanarDensity pr = coarse_grain(raw, kp);
        write_svg(artifact(man, cfg.out_dir, "density_relative.svg"),
                  heatmap_svg("Relative-motion density, t=0 plane", raw));
        write_svg(artifact(man, cfg.out_dir, "density_electron.svg"),
                  heatmap_svg("Electron density (coarse-grained), scaled view", el));
        write_svg(artifact(man, cfg.out_dir, "density_proton.svg"),
                  heatmap_svg("Proton density (coarse-grained), scaled view", pr));
        Snapshot snap;
        snap.dtype = 0;
        snap.dims = {static_cast<std::uint64_t>(grid.n), static_cast<std::uint64_t>(grid.n)};
        snap.origin = {grid.coord(0), grid.coord(0)};
        snap.spacing = {grid.dx(), grid.dx()};
        snap.f64 = raw.values;
        write_snapshot(artifact(man, cfg.out_dir, "density_relative.hatsnap"), snap);
    }
}

// ----- hybrid (3-d adiabatic representation) --------------------------------

void run_hybrid_kind(const ScenarioConfig& cfg, RunManifest& man) {
    const AtomParams params = make_params(cfg.mass_ratio);
    HybridScenario sc;
    sc.spec = cfg.packet;
    sc.r_p0 = cfg.r_p0;
    sc.p_p0 = cfg.p_p0;
    sc.horizon_kepler = cfg.horizon_kepler;
    sc.dt = cfg.dt;
    sc.stride = cfg.stride;
    const TrajectoryRecord rec = run_hybrid(sc, cfg.force_law, params);

    write_text_file(artifact(man, cfg.out_dir, "trajectory.csv"),
                    trajectory_csv("hybrid", rec));

    const TimeScales ts = time_scales(cfg.packet, params);
    man.derived.emplace_back("t_kepler_full_quantum", ts.t_kepler);
    man.derived.emplace_back("t_kepler_hybrid_electron",
                             ts.t_kepler * params.mu / params.m_e);
    man.derived.emplace_back("hybrid_frequency_ratio_mu_over_me", params.mu / params.m_e);

    std::vector<double> t(rec.size()), px(rec.size()), py(rec.size()), pmag(rec.size()),
        rpdev(rec.size());
    double norm_dev = 0.0, pop_drift = 0.0, dp = 0.0, denergy = 0.0;
    double p_excursion = 0.0, rp_dev_max = 0.0;
    for (std::size_t i = 0; i < rec.size(); ++i) {
        t[i] = rec.t[i];
        px[i] = rec.P[i].x;
        py[i] = rec.P[i].y;
        pmag[i] = norm(rec.P[i] - rec.P[0]);
        p_excursion = std::max(p_excursion, pmag[i]);
        // free-flight reference r_p0 + p0 t / m_p
        const Vec3 expect = cfg.r_p0 + (rec.t[i] / params.m_p) * cfg.p_p0;
        rpdev[i] = norm(rec.r_p[i] - expect);
        rp_dev_max = std::max(rp_dev_max, rpdev[i]);
        norm_dev = std::max(norm_dev, std::abs(rec.norm[i] - 1.0));
        dp = std::max(dp, norm(rec.p_p[i] - rec.p_p[0]));
        denergy = std::max(denergy, std::abs(rec.energy[i] - rec.energy[0]) /
                                        std::max(1e-300, std::abs(rec.energy[0])));
        for (std::size_t s = 0; s < rec.populations[i].size(); ++s) {
            pop_drift = std::max(pop_drift,
                                 std::abs(rec.populations[i][s] - rec.populations[0][s]));
        }
    }

    write_svg(artifact(man, cfg.out_dir, "total_momentum.svg"),
              timeseries_svg("Total momentum under the " + to_string(cfg.force_law) + " law",
                             "t [atu]", "P [au]",
                             {{"P_x", t, px}, {"P_y", t, py}, {"|P - P(0)|", t, pmag}}));
    write_svg(artifact(man, cfg.out_dir, "proton_deviation.svg"),
              timeseries_svg("Proton deviation from free flight", "t [atu]", "|dr_p| [a0]",
                             {{"|r_p - free flight|", t, rpdev}}));

    add_check(man, "electron_norm_drift", norm_dev, 1e-10);
    add_check(man, "population_drift", pop_drift, 1e-10);
    add_check(man, "energy_drift_relative", denergy, 1e-8);
    if (cfg.force_law == ForceLaw::adiabatic_gradient) {
        add_check(man, "proton_free_flight_deviation", rp_dev_max,
                  1e-9 * std::max(1.0, norm(cfg.r_p0)));
        add_check(man, "proton_momentum_change", dp, 1e-12);
        const double threshold = 0.5 * params.mu / cfg.packet.n_bar;
        add_check(man, "total_momentum_excursion", p_excursion, threshold, '>');
        man.derived.emplace_back("momentum_excursion", p_excursion);
        man.derived.emplace_back("momentum_excursion_threshold", threshold);
    }
    man.derived.emplace_back("proton_displacement_max",
                             rp_dev_max); // 0 for the motionless demonstration
}

// ----- oracle ----------------------------------------------------------------

void run_oracle_kind(const ScenarioConfig& cfg, RunManifest& man) {
    const OracleScenario scn = cfg.oracle;
    OracleRun run = run_oracle(scn);
    const AtomParams params = make_params(scn.mass_ratio);

    write_text_file(artifact(man, cfg.out_dir, "trajectory.csv"),
                    trajectory_csv("oracle", run.record));
    if (!run.purity.empty()) {
        write_text_file(artifact(man, cfg.out_dir, "purity.csv"),
                        csv_table("oracle-purity", {"t", "proton_purity"}, {"atu", "1"},
                                  {run.purity_t, run.purity}));
    }

    std::vector<double> t(run.record.size()), xe(run.record.size()), xp(run.record.size()),
        pdrift(run.record.size());
    double momentum_drift = 0.0, norm_dev = 0.0, com_dev = 0.0, energy_dev = 0.0;
    const double R0 = params.m_e * run.record.r_e[0].x + params.m_p * run.record.r_p[0].x;
    for (std::size_t i = 0; i < run.record.size(); ++i) {
        t[i] = run.record.t[i];
        xe[i] = run.record.r_e[i].x;
        xp[i] = run.record.r_p[i].x;
        pdrift[i] = std::abs(run.record.P[i].x - run.record.P[0].x);
        momentum_drift = std::max(momentum_drift, pdrift[i]);
        norm_dev = std::max(norm_dev, std::abs(run.record.norm[i] - 1.0));
        const double line = R0 + run.record.P[0].x * run.record.t[i];
        com_dev = std::max(com_dev, std::abs(params.m_e * xe[i] + params.m_p * xp[i] - line));
        energy_dev = std::max(energy_dev,
                              std::abs(run.record.energy[i] - run.record.energy[0]) /
                                  std::max(1e-300, std::abs(run.record.energy[0])));
    }
    write_svg(artifact(man, cfg.out_dir, "centers.svg"),
              timeseries_svg("Exact two-body particle centers", "t [atu]", "x [a0]",
                             {{"<x_e>", t, xe}, {"<x_p>", t, xp}}));
    write_svg(artifact(man, cfg.out_dir, "momentum_drift.svg"),
              timeseries_svg("Total momentum drift (exact dynamics)", "t [atu]",
                             "|<P>(t) - <P>(0)| [au]", {{"drift", t, pdrift}}));
    if (!run.purity.empty()) {
        write_svg(artifact(man, cfg.out_dir, "purity.svg"),
                  timeseries_svg("Proton reduced-state purity", "t [atu]", "Tr(rho_p^2)",
                                 {{"purity", run.purity_t, run.purity}}));
    }

    add_check(man, "momentum_conservation", momentum_drift, 1e-8);
    add_check(man, "norm_conservation", norm_dev, 1e-10);
    add_check(man, "center_of_mass_uniform_motion", com_dev, 1e-8);
    add_check(man, "energy_drift_relative", energy_dev, 1e-6);
    if (!run.purity.empty()) {
        double pmax = 0.0;
        for (double v : run.purity) pmax = std::max(pmax, v);
        add_check(man, "purity_bounded_by_one", pmax, 1.0 + 1e-10);
        man.derived.emplace_back("proton_purity_initial", run.purity.front());
    }
    man.derived.emplace_back("proton_center_amplitude", [&] {
        double a = 0.0;
        for (double v : xp) a = std::max(a, std::abs(v - xp[0]));
        return a;
    }());

    if (cfg.emit_density) {
        TwoBodyPropagator prop(scn);
        TwoBodyField field = prop.initial();
        Snapshot snap;
        snap.dtype = 1;
        snap.dims = {static_cast<std::uint64_t>(prop.grid().n),
                     static_cast<std::uint64_t>(prop.grid().n)};
        snap.origin = {prop.grid().x(0), prop.grid().x(0)};
        snap.spacing = {prop.grid().dx(), prop.grid().dx()};
        snap.c128 = field.psi;
        write_snapshot(artifact(man, cfg.out_dir, "field_initial.hatsnap"), snap);
    }
}

// ----- compare ----------------------------------------------------------------

Hybrid1DScenario matched_hybrid_scenario(const OracleScenario& os, const OracleRun& orun,
                                         ForceLaw law) {
    Hybrid1DScenario hs;
    hs.grid = Grid1D{os.grid_points, os.box_half_width};
    hs.softening = os.softening;
    hs.mass_ratio = os.mass_ratio;
    hs.init = (os.initial_relative == RelInit::ground) ? Electron1DInit::relative_ground
                                                       : Electron1DInit::relative_superposition01;
    double rp0 = orun.record.r_p[0].x;
    double pp0 = orun.record.p_p[0].x;
    if (std::abs(rp0) < 1e-12) rp0 = 0.0;
    if (std::abs(pp0) < 1e-12) pp0 = 0.0;
    hs.r_p0 = rp0;
    hs.p_p0 = pp0;
    hs.total_time = os.total_time;
    hs.record_density = true;
    if (law == ForceLaw::ehrenfest) {
        const int divider = 25;
        hs.dt = os.dt / divider;
        hs.stride = os.stride * divider;
    } else {
        hs.dt = os.dt;
        hs.stride = os.stride;
    }
    return hs;
}

void run_compare_kind(const ScenarioConfig& cfg, RunManifest& man) {
    OracleRun orun = run_oracle(cfg.oracle);
    const Hybrid1DScenario hs = matched_hybrid_scenario(cfg.oracle, orun, cfg.force_law);
    Hybrid1DRun hrun = run_hybrid_1d(hs, cfg.force_law);
    const ComparisonReport rep = compare_with_hybrid(orun, hrun);
    man.compare = rep;

    write_text_file(artifact(man, cfg.out_dir, "oracle_trajectory.csv"),
                    trajectory_csv("oracle", orun.record));
    write_text_file(artifact(man, cfg.out_dir, "hybrid_trajectory.csv"),
                    trajectory_csv("hybrid-1d", hrun.record));
    write_text_file(artifact(man, cfg.out_dir, "density_overlap.csv"),
                    csv_table("compare-overlap", {"t", "overlap"}, {"atu", "1"},
                              {rep.t, rep.density_overlap}));

    std::vector<double> t = rep.t, xo(t.size()), xh(t.size()), po(t.size()), ph(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        xo[i] = orun.record.r_p[i].x;
        xh[i] = hrun.record.r_p[i].x;
        po[i] = orun.record.P[i].x - orun.record.P[0].x;
        ph[i] = hrun.record.P[i].x - hrun.record.P[0].x;
    }
    write_svg(artifact(man, cfg.out_dir, "proton_contrast.svg"),
              timeseries_svg("Proton center: exact two-body vs hybrid", "t [atu]", "x_p [a0]",
                             {{"exact <x_p>", t, xo}, {"hybrid r_p", t, xh}}));
    write_svg(artifact(man, cfg.out_dir, "momentum_contrast.svg"),
              timeseries_svg("Total momentum drift: exact vs hybrid", "t [atu]", "P - P(0) [au]",
                             {{"exact", t, po}, {"hybrid", t, ph}}));

    add_check(man, "oracle_momentum_conservation", rep.oracle_momentum_drift, 1e-8);
    if (cfg.force_law == ForceLaw::adiabatic_gradient) {
        add_check(man, "hybrid_proton_motionless", rep.hybrid_proton_amplitude, 1e-12);
        add_check(man, "proton_discrepancy_ratio", rep.discrepancy_ratio, 10.0, '>');
    } else {
        add_check(man, "hybrid_momentum_conservation", rep.hybrid_momentum_drift, 1e-6);
    }
    man.derived.emplace_back("oracle_proton_amplitude", rep.oracle_proton_amplitude);
    man.derived.emplace_back("hybrid_proton_amplitude", rep.hybrid_proton_amplitude);
    man.derived.emplace_back("discrepancy_ratio", rep.discrepancy_ratio);
    man.derived.emplace_back("density_overlap_min", rep.overlap_min);
    man.derived.emplace_back("density_overlap_mean", rep.overlap_mean);

    // machine-readable verdict table mirroring the three comparison rows
    json tbl = json::array();
    for (const auto& row : rep.table) {
        tbl.push_back({{"quantity", row.quantity},
                       {"full_quantum", row.full_quantum},
                       {"hybrid", row.hybrid}});
    }
    json rj;
    rj["table"] = tbl;
    rj["proton_discrepancy_max"] = rep.proton_discrepancy_max;
    rj["proton_discrepancy_rms"] = rep.proton_discrepancy_rms;
    rj["oracle_proton_amplitude"] = rep.oracle_proton_amplitude;
    rj["hybrid_proton_amplitude"] = rep.hybrid_proton_amplitude;
    rj["discrepancy_ratio"] = rep.discrepancy_ratio;
    rj["oracle_momentum_drift"] = rep.oracle_momentum_drift;
    rj["hybrid_momentum_drift"] = rep.hybrid_momentum_drift;
    rj["oracle_momentum_conserved"] = rep.oracle_momentum_conserved;
    rj["hybrid_momentum_conserved"] = rep.hybrid_momentum_conserved;
    write_text_file(artifact(man, cfg.out_dir, "report.json"), rj.dump(2) + "\n");

    std::string txt = "comparison: full quantum dynamics vs hybrid (" +
                      to_string(cfg.force_law) + " law)\n";
    for (const auto& row : rep.table) {
        txt += "  " + row.quantity + ":\n    full quantum: " + row.full_quantum +
               "\n    hybrid:       " + row.hybrid + "\n";
    }
    write_text_file(artifact(man, cfg.out_dir, "compare_table.txt"), txt);
}

} // namespace

bool RunManifest::all_pass() const {
    for (const auto& c : invariants) {
        if (!c.pass) return false;
    }
    return complete;
}

std::string manifest_json(const RunManifest& m) {
    json j;
    j["version"] = std::string("hatom ") + m.version;
    j["kind"] = m.kind;
    j["units"] = m.units;
    j["config"] = json::parse(serialize_scenario(m.config));
    json d;
    for (const auto& [k, v] : m.derived) {
        if (std::isfinite(v)) {
            d[k] = v;
        } else {
            d[k] = nullptr;
        }
    }
    j["derived"] = d;
    json inv = json::array();
    for (const auto& c : m.invariants) {
        inv.push_back({{"name", c.name},
                       {"pass", c.pass},
                       {"measured", std::isfinite(c.measured) ? json(c.measured) : json(nullptr)},
                       {"tolerance", c.tolerance},
                       {"direction", std::string(1, c.direction)}});
    }
    j["invariants"] = inv;
    j["artifacts"] = m.artifacts;
    j["complete"] = m.complete;
    if (!m.error.empty()) j["error"] = m.error;
    if (m.compare) {
        json tbl = json::array();
        for (const auto& row : m.compare->table) {
            tbl.push_back({{"quantity", row.quantity},
                           {"full_quantum", row.full_quantum},
                           {"hybrid", row.hybrid}});
        }
        j["compare_table"] = tbl;
    }
    return j.dump(2) + "\n";
}

RunManifest run(const ScenarioConfig& config) {
    RunManifest man;
    man.version = kVersion;
    man.kind = to_string(config.kind);
    man.config = config;

    fs::create_directories(config.out_dir);
    const std::string manifest_path = (fs::path(config.out_dir) / "manifest.json").string();

    try {
        switch (config.kind) {
            case ExperimentKind::quantum_reference: run_quantum_reference(config, man); break;
            case ExperimentKind::hybrid: run_hybrid_kind(config, man); break;
            case ExperimentKind::oracle: run_oracle_kind(config, man); break;
            case ExperimentKind::compare: run_compare_kind(config, man); break;
        }
        man.complete = true;
    } catch (const std::exception& e) {
        man.complete = false;
        man.error = e.what();
        write_text_file(manifest_path, manifest_json(man));
        throw;
    }
    man.artifacts.push_back("manifest.json");
    write_text_file(manifest_path, manifest_json(man));
    return man;
}

std::string report_table(const std::vector<std::string>& run_dirs) {
    std::ostringstream out;
    out << "run directory | kind | complete | invariants (pass/total)\n";
    out << "--------------+------+----------+------------------------\n";
    std::vector<std::pair<std::string, json>> manifests;
    for (const auto& dir : run_dirs) {
        const auto path = fs::path(dir) / "manifest.json";
        std::ifstream f(path);
        if (!f) throw std::runtime_error("report: cannot open " + path.string());
        json j = json::parse(std::string(std::istreambuf_iterator<char>(f), {}));
        int pass = 0;
        int total = 0;
        for (const auto& c : j.at("invariants")) {
            ++total;
            if (c.at("pass").get<bool>()) ++pass;
        }
        out << dir << " | " << j.at("kind").get<std::string>() << " | "
            << (j.at("complete").get<bool>() ? "yes" : "NO") << " | " << pass << "/" << total
            << "\n";
        manifests.emplace_back(dir, std::move(j));
    }
    for (const auto& [dir, j] : manifests) {
        if (j.contains("compare_table")) {
            out << "\n" << dir << " comparison verdicts:\n";
            for (const auto& row : j.at("compare_table")) {
                out << "  " << row.at("quantity").get<std::string>() << "\n    full quantum: "
                    << row.at("full_quantum").get<std::string>() << "\n    hybrid:       "
                    << row.at("hybrid").get<std::string>() << "\n";
            }
        }
        if (j.contains("derived")) {
            out << "\n" << dir << " derived quantities:\n";
            for (auto it = j.at("derived").begin(); it != j.at("derived").end(); ++it) {
                out << "  " << it.key() << " = "
                    << (it.value().is_null() ? std::string("nan") : it.value().dump()) << "\n";
            }
        }
    }
    return out.str();
}

} // namespace hatom::io
