// swlme: run shallow water moment simulations and the verification studies.
//
//   swlme run         --config cfg.txt --test=6 --order=2 --mode=implicit --cfl=2
//   swlme wellbalance --test=3
//   swlme convergence --test=4 --mode=implicit --cfl=2
//   swlme benchmark   --test=2_lowfroude
//
// Exit status: 0 on PASS, 1 when a check fails or a run breaks down, 2 on usage errors.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swlme/harness.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
    std::string config_path;
    std::string output_dir;
    std::map<std::string, std::optional<std::string>> overrides;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--config", opt.config_path, "flat key=value config file");
    cmd->add_option("--output-dir", opt.output_dir, "directory for CSV output (default: output_path key)");
    for (const auto& key : swlme::config_keys()) {
        opt.overrides[key];
        cmd->add_option("--" + key, opt.overrides[key], "override config key '" + key + "'");
    }
}

swlme::RunConfig resolve(const Options& opt, const std::string& default_test) {
    swlme::RunConfig cfg = swlme::default_config(default_test);
    if (!opt.config_path.empty()) cfg = swlme::read_config(opt.config_path, cfg);
    std::vector<std::pair<std::string, std::string>> kv;
    for (const auto& [k, v] : opt.overrides)
        if (v) kv.emplace_back(k, *v);
    return swlme::apply_config(cfg, kv);
}

std::filesystem::path output_dir(const Options& opt, const swlme::RunConfig& cfg) {
    return opt.output_dir.empty() ? std::filesystem::path(cfg.output_path) : std::filesystem::path(opt.output_dir);
}

void emit(const swlme::Table& table, const std::filesystem::path& dir, const std::string& name) {
    std::cout << table.format();
    std::filesystem::create_directories(dir);
    table.write_csv(dir / name);
    std::cout << "table written to " << (dir / name).string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Well-balanced shallow water moment solver"};
    app.require_subcommand(1);

    Options run_opt, wb_opt, conv_opt, bench_opt;
    auto* run_cmd = app.add_subcommand("run", "run one simulation and write CSV snapshots");
    auto* wb_cmd = app.add_subcommand("wellbalance", "check steady-state preservation for all four schemes");
    auto* conv_cmd = app.add_subcommand("convergence", "observed order against a fine self-reference");
    auto* bench_cmd = app.add_subcommand("benchmark", "explicit vs implicit wall-time speedup");
    add_common(run_cmd, run_opt);
    add_common(wb_cmd, wb_opt);
    add_common(conv_cmd, conv_opt);
    add_common(bench_cmd, bench_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (run_cmd->parsed()) {
            const auto cfg = resolve(run_opt, "1");
            const auto out = swlme::cmd_run(cfg, output_dir(run_opt, cfg));
            std::cout << out.summary << '\n';
            for (const auto& f : out.files) std::cout << "wrote " << f.string() << '\n';
            return kPass;
        }
        if (wb_cmd->parsed()) {
            const auto cfg = resolve(wb_opt, "1");
            const auto res = swlme::cmd_wellbalance(cfg);
            emit(res.table, output_dir(wb_opt, cfg), "wellbalance_test" + cfg.test + ".csv");
            std::cout << (res.pass ? "PASS" : "FAIL") << '\n';
            return res.pass ? kPass : kFail;
        }
        if (conv_cmd->parsed()) {
            const auto cfg = resolve(conv_opt, "4");
            const auto res = swlme::cmd_convergence(cfg);
            emit(res.table, output_dir(conv_opt, cfg),
                 "convergence_test" + cfg.test + "_" + swlme::to_string(cfg.mode) + ".csv");
            std::cout << (res.pass ? "PASS" : "FAIL") << '\n';
            return res.pass ? kPass : kFail;
        }
        if (bench_cmd->parsed()) {
            const auto cfg = resolve(bench_opt, "2_lowfroude");
            const auto res = swlme::cmd_benchmark(cfg);
            emit(res.table, output_dir(bench_opt, cfg), "benchmark_test" + cfg.test + ".csv");
            std::cout << (res.pass ? "PASS" : "FAIL") << '\n';
            return res.pass ? kPass : kFail;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
