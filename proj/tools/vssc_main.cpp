#include "vssc/commands.hpp"
#include "vssc/errors.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <sstream>

namespace {

vssc::RunConfig make_config(const std::string& config_path, const std::string& out_dir,
                            const std::string& suites) {
    vssc::RunConfig cfg;
    if (!config_path.empty()) cfg = vssc::load_config_file(config_path);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (!suites.empty()) {
        cfg.suites.clear();
        std::istringstream ss(suites);
        std::string s;
        while (std::getline(ss, s, ',')) cfg.suites.push_back(s);
    }
    return cfg;
}

std::vector<double> split_doubles(const std::string& s) {
    std::vector<double> out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

std::vector<int> split_ints(const std::string& s) {
    std::vector<int> out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vorticity small-scale creation simulator and verification suite"};
    app.require_subcommand(1);

    std::string config_path, out_dir, suites, resume, eps_list, n_list;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "configuration file");
        cmd->add_option("--out", out_dir, "output directory override");
    };

    CLI::App* verify = app.add_subcommand("verify", "run the t=0 invariant suites");
    add_common(verify);
    verify->add_option("--suite", suites, "comma-separated suite names");

    CLI::App* run = app.add_subcommand("run", "evolve the scenario");
    add_common(run);
    run->add_option("--resume", resume, "checkpoint to resume from");

    CLI::App* analyze = app.add_subcommand("analyze", "post-process a run directory");
    add_common(analyze);

    CLI::App* report = app.add_subcommand("report", "render summary and plots");
    add_common(report);

    CLI::App* sweep = app.add_subcommand("sweep", "parameter grid over epsilon and n");
    add_common(sweep);
    sweep->add_option("--epsilon", eps_list, "comma-separated epsilon values");
    sweep->add_option("--n", n_list, "comma-separated resolutions");

    CLI11_PARSE(app, argc, argv);

    try {
        const vssc::RunConfig cfg = make_config(config_path, out_dir, suites);
        if (verify->parsed()) return vssc::cmd_verify(cfg);
        if (run->parsed()) return vssc::cmd_run(cfg, resume);
        if (analyze->parsed()) return vssc::cmd_analyze(cfg);
        if (report->parsed()) return vssc::cmd_report(cfg);
        if (sweep->parsed())
            return vssc::cmd_sweep(cfg,
                                   eps_list.empty() ? std::vector<double>{}
                                                    : split_doubles(eps_list),
                                   n_list.empty() ? std::vector<int>{} : split_ints(n_list));
    } catch (const vssc::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
