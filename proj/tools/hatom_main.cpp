// hatom: hydrogen-atom quantum vs quantum-classical hybrid dynamics lab.
//
//   hatom run <config.json>       execute a scenario, write artifacts + manifest
//   hatom validate <config.json>  parse + validate, echo the filled config
//   hatom report <run-dir>...     merge run manifests into one table

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>

#include "hatom/runner.hpp"
#include "hatom/scenario.hpp"
#include "hatom/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"hydrogen atom: full-quantum reference vs mean-field hybrid dynamics"};
    app.set_version_flag("--version", std::string("hatom ") + hatom::kVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    int stride = 0;
    std::vector<std::string> overrides;
    std::vector<std::string> run_dirs;

    auto* run_cmd = app.add_subcommand("run", "execute a scenario configuration");
    run_cmd->add_option("config", config_path, "JSON scenario file")->required();
    run_cmd->add_option("--out", out_dir, "output directory (overrides config out_dir)");
    run_cmd->add_option("--stride", stride, "sampling stride (overrides config)");
    run_cmd->add_option("--override", overrides,
                        "dotted-path config override, e.g. packet.n_bar=40 (repeatable)");

    auto* validate_cmd = app.add_subcommand("validate", "validate a scenario configuration");
    validate_cmd->add_option("config", config_path, "JSON scenario file")->required();
    validate_cmd->add_option("--override", overrides, "dotted-path config override (repeatable)");

    auto* report_cmd = app.add_subcommand("report", "merge run manifests into one table");
    report_cmd->add_option("dirs", run_dirs, "run directories containing manifest.json")
        ->required()
        ->expected(-1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed() || validate_cmd->parsed()) {
            hatom::io::ScenarioConfig cfg = hatom::io::load_scenario(config_path, overrides);
            if (!out_dir.empty()) cfg.out_dir = out_dir;
            if (stride > 0) cfg.stride = stride;

            if (validate_cmd->parsed()) {
                std::cout << hatom::io::serialize_scenario(cfg);
                return 0;
            }
            const hatom::io::RunManifest man = hatom::io::run(cfg);
            std::cout << "run complete: " << cfg.out_dir << "\n";
            int failed = 0;
            for (const auto& c : man.invariants) {
                std::printf("  [%s] %-32s measured %.6e %s %.6e\n", c.pass ? "pass" : "FAIL",
                            c.name.c_str(), c.measured, c.direction == '<' ? "<=" : ">=",
                            c.tolerance);
                if (!c.pass) ++failed;
            }
            if (man.compare) {
                std::cout << "comparison verdicts:\n";
                for (const auto& row : man.compare->table) {
                    std::cout << "  " << row.quantity << "\n    full quantum: " << row.full_quantum
                              << "\n    hybrid:       " << row.hybrid << "\n";
                }
            }
            if (failed > 0) {
                std::cerr << failed << " invariant check(s) failed\n";
                return 1;
            }
            return 0;
        }
        if (report_cmd->parsed()) {
            std::cout << hatom::io::report_table(run_dirs);
            return 0;
        }
    } catch (const hatom::io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const hatom::io::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
