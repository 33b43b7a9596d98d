#include "vssc/commands.hpp"

#include "vssc/audits.hpp"
#include "vssc/csvio.hpp"
#include "vssc/fits.hpp"
#include "vssc/keylemma.hpp"
#include "vssc/svg.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

namespace vssc {

namespace fs = std::filesystem;

DirLock::DirLock(const std::string& dir) : path_(dir + "/.lock") {
    fs::create_directories(dir);
    std::FILE* f = std::fopen(path_.c_str(), "wx");
    if (!f)
        throw LockError("output directory busy (lock file exists): " + path_);
    std::fclose(f);
}

DirLock::~DirLock() { std::remove(path_.c_str()); }

namespace {

void echo_config(const RunConfig& cfg) {
    std::ofstream os(cfg.out_dir + "/config_echo.cfg", std::ios::trunc);
    os << "# config_hash=" << config_hash(cfg) << "\n" << serialize_config(cfg);
}

std::string ckpt_name(std::uint64_t step) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "state_%08llu.vssc",
                  static_cast<unsigned long long>(step));
    return buf;
}

} // namespace

int cmd_verify(const RunConfig& cfg) {
    DirLock lock(cfg.out_dir);
    echo_config(cfg);
    const auto results = run_suites(cfg.params, cfg.suites);

    CsvWriter csv(cfg.out_dir + "/verify.csv", config_hash(cfg), kBuildId);
    csv.header({"suite", "check", "pass", "value", "threshold", "note"});
    int failures = 0;
    std::ofstream sum(cfg.out_dir + "/verify_summary.txt", std::ios::trunc);
    for (const auto& r : results) {
        csv.row_mixed({r.suite, r.name, r.pass ? "1" : "0", format_double(r.value),
                       format_double(r.threshold), r.note});
        sum << (r.pass ? "[PASS] " : "[FAIL] ") << r.suite << "/" << r.name
            << "  value=" << format_double(r.value)
            << " threshold=" << format_double(r.threshold)
            << (r.note.empty() ? "" : "  (" + r.note + ")") << "\n";
        std::printf("%s %s/%s value=%g threshold=%g\n", r.pass ? "[PASS]" : "[FAIL]",
                    r.suite.c_str(), r.name.c_str(), r.value, r.threshold);
        if (!r.pass) ++failures;
    }
    sum << (failures ? "FAILED" : "OK") << " (" << results.size() << " checks, "
        << failures << " failures)\n";
    std::printf("%s (%zu checks, %d failures)\n", failures ? "FAILED" : "OK",
                results.size(), failures);
    return failures ? 1 : 0;
}

int cmd_run(const RunConfig& cfg, const std::string& resume_path) {
    DirLock lock(cfg.out_dir);
    echo_config(cfg);
    fs::create_directories(cfg.out_dir + "/checkpoints");

    std::optional<ResumePoint> resume;
    if (!resume_path.empty()) {
        ResumePoint rp{read_checkpoint(resume_path), read_aux(resume_path + ".aux")};
        resume = std::move(rp);
    }

    CheckpointSink sink = [&](const Checkpoint& ck, const AuxState& aux,
                              std::uint64_t step) {
        const std::string base = cfg.out_dir + "/checkpoints/" + ckpt_name(step);
        write_checkpoint(base, ck);
        write_aux(base + ".aux", aux);
    };

    try {
        RunResult res = run_scenario(cfg.params, cfg.run_options(), sink, resume);
        write_growth_csv(cfg.out_dir + "/growth.csv", res.report, config_hash(cfg),
                         kBuildId);
        std::ofstream sum(cfg.out_dir + "/run_summary.txt", std::ios::trunc);
        sum << "samples = " << res.report.samples.size() << "\n";
        sum << "C1 = " << format_double(res.budget.C1) << "\n";
        sum << "K0 = " << format_double(res.budget.K0) << "\n";
        sum << "epsilon0 = " << format_double(res.budget.epsilon0) << "\n";
        sum << "gate = " << (res.budget.accepts(cfg.params.epsilon) ? "pass" : "fail")
            << "\n";
        sum << "bracket_collapsed = " << (res.bracket_collapsed ? "yes" : "no") << "\n";
        std::printf("run complete: %zu samples, K0=%g, epsilon0=%g, bracket_collapsed=%s\n",
                    res.report.samples.size(), res.budget.K0, res.budget.epsilon0,
                    res.bracket_collapsed ? "yes" : "no");
    } catch (const Error& e) {
        std::fprintf(stderr, "run failed: %s\n", e.what());
        return 1;
    }
    return 0;
}

int cmd_analyze(const RunConfig& cfg) {
    const std::string growth_path = cfg.out_dir + "/growth.csv";
    if (!fs::exists(growth_path)) {
        std::fprintf(stderr, "analyze: missing %s (run first)\n", growth_path.c_str());
        return 1;
    }
    GrowthReport report = read_growth_csv(growth_path);
    const SimParams& p = cfg.params;
    const std::string hash = config_hash(cfg);

    // fits
    {
        CsvWriter csv(cfg.out_dir + "/fits.csv", hash, kBuildId);
        csv.header({"fit", "rate", "prefactor", "rate_ci", "residual", "window0",
                    "window1", "n", "flag"});
        const double t1 = report.samples.empty() ? 0.0 : report.samples.back().t;
        const double t0 = std::min(2.0, t1 / 2);
        try {
            GrowthFit g = growth_fit(report, p.epsilon, t0, t1);
            csv.row_mixed({"exponential", format_double(g.exponential.rate),
                           format_double(g.exponential.prefactor),
                           format_double(g.exponential.rate_ci),
                           format_double(g.exponential.residual), format_double(t0),
                           format_double(t1), std::to_string(g.exponential.n),
                           g.exp_rate_ok ? "rate>=0.9eps" : "rate<0.9eps"});
            csv.row_mixed({"double_exponential", format_double(g.double_exponential.rate),
                           format_double(g.double_exponential.prefactor),
                           format_double(g.double_exponential.rate_ci),
                           format_double(g.double_exponential.residual),
                           format_double(t0), format_double(t1),
                           std::to_string(g.double_exponential.n), ""});
        } catch (const Error& e) {
            csv.row_mixed({"exponential", "nan", "nan", "nan", "nan", "0", "0", "0",
                           e.what()});
        }
        try {
            DiffIneqAudit a = diffineq_audit(report, p.epsilon);
            csv.row_mixed({"diffineq_C4", format_double(a.C4_fit),
                           format_double(a.floor_margin), "0",
                           format_double(a.regression.residual), "0", "0",
                           std::to_string(a.n),
                           a.floor_respected ? "floor_respected" : "floor_violated"});
        } catch (const Error& e) {
            csv.row_mixed({"diffineq_C4", "nan", "nan", "nan", "nan", "0", "0", "0",
                           e.what()});
        }
    }

    // conservation drifts
    {
        CsvWriter csv(cfg.out_dir + "/conservation.csv", hash, kBuildId);
        csv.header({"quantity", "initial", "max_drift"});
        for (const auto& r : conservation_audit(report))
            csv.row_mixed({r.quantity, format_double(r.initial),
                           format_double(r.max_drift)});
    }

    // key-lemma table and trapezoid verdicts from checkpoints
    {
        CsvWriter csv(cfg.out_dir + "/keylemma.csv", hash, kBuildId);
        csv.header({"t", "x1", "x2", "j", "u_j", "q", "B", "log_factor", "bound_rhs"});
        CsvWriter tz(cfg.out_dir + "/trapezoid.csv", hash, kBuildId);
        tz.header({"t", "a", "b", "cells", "violations", "fraction", "status"});

        std::vector<fs::path> ckpts;
        const std::string cdir = cfg.out_dir + "/checkpoints";
        if (fs::exists(cdir))
            for (const auto& e : fs::directory_iterator(cdir))
                if (e.path().extension() == ".vssc") ckpts.push_back(e.path());
        std::sort(ckpts.begin(), ckpts.end());

        std::mt19937_64 rng(p.seed + 7);
        for (const auto& path : ckpts) {
            Checkpoint ck = read_checkpoint(path.string());
            AuxState aux = read_aux(path.string() + ".aux");
            const TorusGrid& g = ck.field.grid();
            ck.field.set_parity(ParityClass{Parity::Odd, Parity::None});
            SpectralWorkspace ws(g.as_doubled());
            VectorField u = biot_savart(ck.field, ws);

            std::uniform_real_distribution<double> px(2.5 * g.h1(), 0.34);
            std::vector<KeyLemmaSample> samples;
            while (samples.size() < 40) {
                const double x1 = px(rng), x2 = px(rng);
                if (x1 * x1 + x2 * x2 >= 0.25) continue;
                samples.push_back(extract_B(ck.field, u, {x1, x2}, 1));
                samples.push_back(extract_B(ck.field, u, {x1, x2}, 2));
            }
            const double C1m = kinetic_energy(u) / (ck.epsilon * ck.epsilon);
            fit_remainder_constant(samples, C1m * ck.epsilon * ck.epsilon,
                                   ck.field.sup());
            for (const auto& s : samples)
                csv.row_mixed({format_double(ck.time), format_double(s.x[0]),
                               format_double(s.x[1]), std::to_string(s.j),
                               format_double(s.u_j), format_double(s.q),
                               format_double(s.B), format_double(s.log_factor),
                               format_double(s.bound_rhs)});

            try {
                TrapezoidVerdict v =
                    trapezoid_check(ck.field, aux.a, aux.b, ck.epsilon, p.omega_tol);
                tz.row_mixed({format_double(ck.time), format_double(aux.a),
                              format_double(aux.b), std::to_string(v.cells),
                              std::to_string(v.violations), format_double(v.fraction),
                              v.pass ? "pass" : "fail"});
            } catch (const EmptyRegion&) {
                tz.row_mixed({format_double(ck.time), format_double(aux.a),
                              format_double(aux.b), "0", "0", "0", "empty"});
            }
        }
    }
    std::printf("analyze complete: fits.csv conservation.csv keylemma.csv trapezoid.csv\n");
    return 0;
}

int cmd_report(const RunConfig& cfg) {
    const std::string growth_path = cfg.out_dir + "/growth.csv";
    if (!fs::exists(growth_path)) {
        std::fprintf(stderr, "report: missing %s\n", growth_path.c_str());
        return 1;
    }
    GrowthReport r = read_growth_csv(growth_path);
    fs::create_directories(cfg.out_dir + "/plots");

    auto series = [&](auto getter) {
        SvgSeries s;
        for (const auto& smp : r.samples) {
            s.t.push_back(smp.t);
            s.y.push_back(getter(smp));
        }
        return s;
    };
    SvgSeries grad = series([](const GrowthSample& s) { return s.grad_sup; });
    grad.name = "sup|grad omega|";
    write_svg_plot(cfg.out_dir + "/plots/grad_sup.svg", "gradient growth", {grad}, true);

    SvgSeries eta = series([](const GrowthSample& s) { return s.eta1; });
    eta.name = "eta1";
    SvgSeries bb = series([](const GrowthSample& s) { return s.b; });
    bb.name = "b";
    SvgSeries aa = series([](const GrowthSample& s) { return s.a; });
    aa.name = "a";
    write_svg_plot(cfg.out_dir + "/plots/decay.svg", "boundary tracer and bracket",
                   {eta, bb, aa}, true);

    SvgSeries lb = series([](const GrowthSample& s) { return s.log_b_over_a; });
    lb.name = "log(b/a)";
    write_svg_plot(cfg.out_dir + "/plots/log_b_over_a.svg", "bracket ratio", {lb}, false);

    std::ofstream sum(cfg.out_dir + "/summary.txt", std::ios::trunc);
    sum << "# build=" << kBuildId << " config_hash=" << config_hash(cfg) << "\n";
    sum << "samples = " << r.samples.size() << ", epsilon = " << format_double(r.epsilon)
        << ", stencil = " << format_double(r.stencil) << "\n";
    for (const auto& d : conservation_audit(r))
        sum << "drift " << d.quantity << " = " << format_double(d.max_drift) << "\n";
    if (!r.samples.empty()) {
        const auto& last = r.samples.back();
        sum << "final t = " << format_double(last.t)
            << ", sup|grad omega| = " << format_double(last.grad_sup)
            << ", eta1 = " << format_double(last.eta1)
            << ", b = " << format_double(last.b) << "\n";
    }
    if (fs::exists(cfg.out_dir + "/fits.csv")) {
        std::ifstream fits(cfg.out_dir + "/fits.csv");
        sum << "--- fits.csv ---\n" << fits.rdbuf();
    }
    std::printf("report complete: summary.txt + plots/\n");
    return 0;
}

int cmd_sweep(const RunConfig& cfg, const std::vector<double>& epsilons,
              const std::vector<int>& ns) {
    std::vector<RunConfig> jobs;
    for (double e : epsilons.empty() ? std::vector<double>{cfg.params.epsilon} : epsilons)
        for (int n : ns.empty() ? std::vector<int>{cfg.params.n1} : ns) {
            RunConfig c = cfg;
            c.params.epsilon = e;
            c.params.n1 = c.params.n2 = n;
            c.out_dir = cfg.out_dir + "/eps" + format_double(e) + "_n" + std::to_string(n);
            jobs.push_back(std::move(c));
        }
    std::vector<int> status(jobs.size(), 0);
    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(jobs.size())));
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= jobs.size()) return;
                status[k] = cmd_run(jobs[k]);
            }
        });
    for (auto& th : pool) th.join();
    int rc = 0;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        std::printf("sweep %s -> %s\n", jobs[k].out_dir.c_str(),
                    status[k] == 0 ? "ok" : "failed");
        if (status[k]) rc = 1;
    }
    return rc;
}

} // namespace vssc
