// SPDX-License-Identifier: Apache-2.0
//
// fdma-secrecy: secrecy-oriented design of frequency-diverse movable-antenna arrays
// Copyright (C) 2026 The fdma-secrecy authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Batch front-end.
//
//      fdma_cli beampattern --config run.cfg --kind FDMA_OPT2 --out out/bp
//      fdma_cli sweep-m     --config run.cfg --out out/m --threads 4
//      fdma_cli sweep-k     --config run.cfg --out out/k
//      fdma_cli optimize    --config run.cfg --method sa --out out/opt
//      fdma_cli compare     --config run.cfg --kind FDMA_OPT1 --against CPA --out out/cmp
//
// Exit status 0 means every output was written and every invariant check passed. Failures
// print one JSON error record on stderr. FDMA_LOG=quiet|info|debug sets the stderr verbosity.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fdma/config.hpp"
#include "fdma/errors.hpp"
#include "fdma/experiment.hpp"
#include "fdma/io.hpp"
#include "fdma/rng.hpp"

namespace fs = std::filesystem;
using namespace fdma;

namespace
{
    // A computed result broke a documented invariant
    class InvariantViolation : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    enum exit_code : int
    {
        exit_ok = 0,
        exit_failure = 1,
        exit_config = 2,
        exit_io = 3,
        exit_invariant = 4,
        exit_usage = 64
    };

    int log_level()
    {
        static const int level = []
        {
            const char *env = std::getenv("FDMA_LOG");
            const std::string v = env ? env : "info";
            if (v == "quiet" || v == "0" || v == "off")
                return 0;
            if (v == "debug" || v == "2" || v == "trace")
                return 2;
            return 1;
        }();
        return level;
    }

    template <typename... Args>
    void log(int level, fmt::format_string<Args...> f, Args &&...args)
    {
        if (level <= log_level())
            std::cerr << "[fdma] " << fmt::format(f, std::forward<Args>(args)...) << '\n';
    }

    std::string utc_now()
    {
        const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&t, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        return buf;
    }

    struct GlobalOptions
    {
        std::string config_path;
        std::optional<std::uint64_t> seed;
        std::string out_dir = "out";
        int threads = 0;
        std::string kind;
    };

    // Collects the files of one command and writes the manifest that references them
    class Run
    {
    public:
        Run(std::string command, const GlobalOptions &opts) : command_(std::move(command)), started_(utc_now())
        {
            cfg_ = opts.config_path.empty() ? RunConfig{} : load_config(opts.config_path);
            if (opts.seed)
                cfg_.seed = *opts.seed;
            cfg_.validate();
            out_ = ensure_directory(opts.out_dir);
            exec_.threads = opts.threads;
            log(1, "{}: config {}, seed {}, output {}", command_,
                opts.config_path.empty() ? "<defaults>" : opts.config_path, cfg_.seed, out_.string());
        }

        const RunConfig &cfg() const { return cfg_; }
        ExecutionConfig exec() const { return exec_; }

        void write(const std::string &name, const std::string &content)
        {
            write_text_file(out_ / name, content);
            outputs_.push_back(name);
            log(2, "wrote {}", (out_ / name).string());
        }

        void finish(const std::string &experiment_id)
        {
            json configuration = json::object();
            for (const auto &[k, v] : resolved_entries(cfg_))
                configuration[k] = v;
            json outputs = json::array();
            for (const auto &o : outputs_)
                outputs.push_back(o);

            // No wall-clock data here so that reruns give identical bytes; timestamps go to timing.txt
            json manifest;
            manifest["experiment_id"] = experiment_id;
            manifest["command"] = command_;
            manifest["tool_version"] = FDMA_VERSION;
            manifest["master_seed"] = cfg_.seed;
            manifest["configuration"] = std::move(configuration);
            manifest["outputs"] = std::move(outputs);
            write_text_file(out_ / "manifest.json", dump_json(manifest));
            write_text_file(out_ / "timing.txt", "start=" + started_ + "\nend=" + utc_now() + "\n");
            log(1, "{}: done ({} files)", command_, outputs_.size() + 1);
        }

    private:
        std::string command_;
        std::string started_;
        RunConfig cfg_;
        fs::path out_;
        ExecutionConfig exec_;
        std::vector<std::string> outputs_;
    };

    std::uint64_t item_seed(const RunConfig &cfg, const std::string &id) { return derive_seed(cfg.seed, id); }

    void check_sweep(const std::vector<SweepRecord> &records)
    {
        for (const auto &r : records)
            if (!(r.secrecy_rate >= 0.0 && r.secrecy_rate <= r.upper_bound * (1.0 + 1e-12)))
                throw InvariantViolation(fmt::format("secrecy rate {} outside [0, {}] for {} at {}", r.secrecy_rate,
                                                     r.upper_bound, to_string(r.configuration), r.sweep_value));
    }

    std::vector<ConfigurationKind> selected_kinds(const GlobalOptions &opts)
    {
        if (opts.kind.empty())
            return {all_configurations.begin(), all_configurations.end()};
        std::vector<ConfigurationKind> out;
        std::string_view rest = opts.kind;
        while (!rest.empty())
        {
            const auto comma = rest.find(',');
            out.push_back(parse_configuration_kind(rest.substr(0, comma)));
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
        return out;
    }

    // ---------------------------------------------------------------------------------------

    void cmd_beampattern(const GlobalOptions &opts)
    {
        Run run("beampattern", opts);
        const auto &cfg = run.cfg();
        const auto kind = parse_configuration_kind(opts.kind.empty() ? "CPA" : opts.kind);
        if (kind == ConfigurationKind::upper_bound)
            throw std::invalid_argument("beampattern: UPPER_BOUND has no array design");

        const Scenario sc = cfg.scenario();
        const std::string id = "beampattern/" + std::string(to_string(kind));
        const auto cd = design_for(kind, sc, cfg.M, cfg.setup, item_seed(cfg, id));
        log(1, "{}: J baseline {} -> {}", to_string(kind), cd.baseline_cost, cd.cost);

        const auto raster = raster_beampattern(sc, cd.design, cfg.grid, run.exec().threads);
        for (const auto &r : raster)
            if (r.normalized_power_db > 1e-6)
                throw InvariantViolation(fmt::format("raster power {} dB above 0 at ({}, {})", r.normalized_power_db,
                                                     r.x_m, r.y_m));
        run.write("raster.csv", raster_csv(raster));

        // Exact powers at the user positions, which rarely fall on grid cells
        std::string markers = "label,x_m,y_m,range_m,angle_rad,power_db\n";
        auto marker = [&](const std::string &label, const Placement &p)
        {
            const double pw = normalized_beampattern_power(cd.design, p, sc.bob, sc.c);
            markers += fmt::format("{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", label,
                                   p.range_m * std::cos(p.angle_rad), p.range_m * std::sin(p.angle_rad), p.range_m,
                                   p.angle_rad, pw > 0.0 ? linear_to_db(pw) : -300.0);
        };
        marker("BOB", sc.bob);
        for (std::size_t k = 0; k < sc.eves.size(); ++k)
            marker("E" + std::to_string(k + 1), sc.eves[k]);
        run.write("markers.csv", markers);

        json design = design_json(cd.design, cfg.setup.carrier);
        design["configuration"] = std::string(to_string(kind));
        design["baseline_cost"] = cd.baseline_cost;
        design["start_cost"] = cd.start_cost;
        design["final_cost"] = cd.cost;
        run.write("design.json", dump_json(design));
        run.finish(id);
    }

    void cmd_sweep_m(const GlobalOptions &opts)
    {
        Run run("sweep-m", opts);
        const auto &cfg = run.cfg();
        const auto records = sweep_vs_M(cfg.setup, cfg.sweep_m_values, selected_kinds(opts), cfg.seed, run.exec());
        check_sweep(records);
        run.write("sweep.csv", sweep_csv(records));
        run.finish("sweep-m");
    }

    void cmd_sweep_k(const GlobalOptions &opts)
    {
        Run run("sweep-k", opts);
        const auto &cfg = run.cfg();
        const auto kinds = selected_kinds(opts);
        for (auto M : cfg.sweep_k_m_values)
        {
            log(1, "sweep-k: M = {}, {} trials", M, cfg.trials);
            const auto records = sweep_vs_K(cfg.setup, cfg.sweep_k_values, {M}, kinds, cfg.seed, cfg.trials, run.exec());
            check_sweep(records);
            run.write(fmt::format("sweep_k_M{}.csv", M), sweep_csv(records));
            run.write(fmt::format("sweep_k_M{}_mean.csv", M), sweep_csv(mean_over_trials(records)));
        }
        run.finish("sweep-k");
    }

    void cmd_optimize(const GlobalOptions &opts, const std::string &method_opt)
    {
        Run run("optimize", opts);
        const auto &cfg = run.cfg();

        // --kind picks the variable set and implies the method; default is the joint FDMA problem
        ConfigurationKind kind = method_opt == "perturb" ? ConfigurationKind::fdma_opt2 : ConfigurationKind::fdma_opt1;
        if (!opts.kind.empty())
            kind = parse_configuration_kind(opts.kind);
        const bool sa_kind = kind == ConfigurationKind::ma_opt1 || kind == ConfigurationKind::fda_opt1 ||
                             kind == ConfigurationKind::fdma_opt1;
        const bool perturb_kind = kind == ConfigurationKind::ma_opt2 || kind == ConfigurationKind::fda_opt2 ||
                                  kind == ConfigurationKind::fdma_opt2;
        if (!sa_kind && !perturb_kind)
            throw std::invalid_argument("optimize: --kind must be one of the *_OPT1 / *_OPT2 configurations");
        if (!method_opt.empty() && (method_opt == "sa") != sa_kind)
            throw std::invalid_argument("optimize: --method " + method_opt + " conflicts with --kind " + opts.kind);
        const std::string method = sa_kind ? "sa" : "perturb";

        const Scenario sc = cfg.scenario();
        const auto params = cfg.setup.params(cfg.M);
        const std::string id = "optimize/" + std::string(to_string(kind));

        const ArrayDesign baseline = baseline_design(kind, cfg.M, cfg.setup);
        const double baseline_cost = cost(sc, baseline);
        // Differs from the baseline only when linear shifts leave the box (M > 21 by default)
        const double start_cost = cost(sc, starting_design(kind, cfg.M, cfg.setup));
        ArrayDesign result;
        double final_cost = 0.0;
        std::string trace;
        if (sa_kind)
        {
            const SaVariables vars = kind == ConfigurationKind::ma_opt1    ? SaVariables::positions
                                     : kind == ConfigurationKind::fda_opt1 ? SaVariables::freq_shifts
                                                                           : SaVariables::both;
            AnnealerConfig sa = cfg.setup.sa;
            sa.seed = item_seed(cfg, id);
            auto r = alternate_sa(sc, starting_design(kind, cfg.M, cfg.setup), params, sa, cfg.setup.alternation, vars,
                                  true);
            final_cost = r.final_cost;
            result = std::move(r.design);
            trace = sa_trace_csv(r.trace, baseline_cost, final_cost);
            log(1, "sa: {} rounds", r.rounds);
        }
        else
        {
            BaselineParams p = params;
            if (kind == ConfigurationKind::ma_opt2)
                p.uniform_freq_step = 0.0;
            PerturbConfig pc = cfg.setup.perturb;
            pc.optimize_positions = kind != ConfigurationKind::fda_opt2;
            pc.optimize_freq_shifts = kind != ConfigurationKind::ma_opt2;
            auto r = alternate_perturb(sc, baseline, p, pc);
            final_cost = r.final_cost;
            result = std::move(r.design);
            trace = perturb_trace_csv(r.trace, baseline_cost, final_cost);
        }
        log(1, "{}: J {} -> {}", to_string(kind), baseline_cost, final_cost);
        if (!(final_cost <= start_cost))
            throw InvariantViolation(fmt::format("optimized cost {} exceeds starting cost {}", final_cost, start_cost));

        json design = design_json(result, cfg.setup.carrier);
        design["method"] = method;
        design["configuration"] = std::string(to_string(kind));
        design["num_eavesdroppers"] = sc.num_eves();
        design["baseline_cost"] = baseline_cost;
        design["start_cost"] = start_cost;
        design["final_cost"] = final_cost;
        design["baseline_secrecy_rate"] = worst_case_secrecy_rate(sc, baseline);
        design["secrecy_rate"] = worst_case_secrecy_rate(sc, result);
        design["upper_bound"] = secrecy_upper_bound(sc, cfg.M);
        run.write("design.json", dump_json(design));
        run.write("trace.csv", trace);
        run.finish(id);
    }

    void cmd_compare(const GlobalOptions &opts, const std::string &against)
    {
        Run run("compare", opts);
        const auto &cfg = run.cfg();
        const auto kind_a = parse_configuration_kind(opts.kind.empty() ? "FDMA_OPT1" : opts.kind);
        const auto kind_b = parse_configuration_kind(against);
        const Scenario sc = cfg.scenario();
        auto design_of = [&](ConfigurationKind k)
        { return design_for(k, sc, cfg.M, cfg.setup, item_seed(cfg, "compare/" + std::string(to_string(k)))); };
        const auto a = design_of(kind_a);
        const auto b = design_of(kind_b);
        run.write("compare.csv", compare_csv(compare_designs(a.design, b.design, cfg.setup.carrier)));

        json designs;
        for (const auto *cd : {&a, &b})
        {
            json d = design_json(cd->design, cfg.setup.carrier);
            d["cost"] = cd->cost;
            d["secrecy_rate"] = worst_case_secrecy_rate(sc, cd->design);
            designs[std::string(to_string(cd->kind))] = std::move(d);
        }
        run.write("designs.json", dump_json(designs));
        run.finish("compare/" + std::string(to_string(kind_a)) + "/" + std::string(to_string(kind_b)));
    }

    void print_error(const std::string &type, const std::string &message, const std::string &key = {}, int line = 0)
    {
        json err;
        err["error"] = type;
        err["message"] = message;
        if (!key.empty())
            err["key"] = key;
        if (line > 0)
            err["line"] = line;
        std::cerr << err.dump() << std::endl;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Secrecy-oriented design of frequency-diverse movable-antenna arrays"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(FDMA_VERSION));

    GlobalOptions opts;
    app.add_option("--config", opts.config_path, "Key/value configuration file (built-in defaults if omitted)");
    app.add_option("--seed", opts.seed, "Master seed, overrides the config value");
    app.add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
    app.add_option("--threads", opts.threads, "Worker threads; 0 = OpenMP default, 1 = serial reference")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--kind", opts.kind, "Configuration kind (comma-separated list for sweeps)");

    auto *bp = app.add_subcommand("beampattern", "Raster of the normalized beampattern power");
    auto *sm = app.add_subcommand("sweep-m", "Worst-case secrecy rate versus M with the canonical eavesdroppers");
    auto *sk = app.add_subcommand("sweep-k", "Worst-case secrecy rate versus K with random eavesdroppers");
    auto *op = app.add_subcommand("optimize", "Optimize one design and write it with the iteration trace");
    std::string method;
    op->add_option("--method", method, "sa or perturb")->check(CLI::IsMember({"sa", "perturb"}));
    auto *cp = app.add_subcommand("compare", "Per-antenna comparison of two configurations");
    std::string against = "CPA";
    cp->add_option("--against", against, "Second configuration")->capture_default_str();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (bp->parsed())
            cmd_beampattern(opts);
        else if (sm->parsed())
            cmd_sweep_m(opts);
        else if (sk->parsed())
            cmd_sweep_k(opts);
        else if (op->parsed())
            cmd_optimize(opts, method);
        else if (cp->parsed())
            cmd_compare(opts, against);
        return exit_ok;
    }
    catch (const ConfigError &e)
    {
        print_error("config", e.what(), e.key(), e.line());
        return exit_config;
    }
    catch (const IoError &e)
    {
        print_error("io", e.what());
        return exit_io;
    }
    catch (const InvariantViolation &e)
    {
        print_error("invariant", e.what());
        return exit_invariant;
    }
    catch (const std::exception &e)
    {
        print_error("runtime", e.what());
        return exit_failure;
    }
}
