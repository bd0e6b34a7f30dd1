// shockscope: command line front end for the viscous-shock laboratory.

#include "shockscope/ancient_limits.hpp"
#include "shockscope/conservation_law.hpp"
#include "shockscope/entire_solution.hpp"
#include "shockscope/error.hpp"
#include "shockscope/io.hpp"
#include "shockscope/merger_lab.hpp"
#include "shockscope/parallel.hpp"
#include "shockscope/pde_solver.hpp"
#include "shockscope/selfcheck.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef SHOCKSCOPE_VERSION
#define SHOCKSCOPE_VERSION "dev"
#endif

namespace {

using namespace shockscope;
using json = nlohmann::ordered_json;

struct Common {
    std::string measure_file, flux_file, schedule_file, out, format = "csv";
    double t0 = 0.0, t1 = 1.0, x0 = -10.0, x1 = 10.0;
    int nt = 11, nx = 101;
};

RunManifest make_manifest(const std::string& command, int argc, char** argv) {
    RunManifest m;
    m.command = command;
    for (int i = 1; i < argc; ++i) m.arguments.emplace_back(argv[i]);
    m.threads = worker_count();
    m.version = SHOCKSCOPE_VERSION;
    return m;
}

json manifest_value(const RunManifest& m) { return json::parse(manifest_to_json(m)); }

// Writes text to --out, or stdout when no path was given.
void emit(const Common& c, const std::string& text) {
    if (c.out.empty())
        std::cout << text;
    else
        write_text_file(c.out, text);
}

// CSV goes to --out with the manifest beside it as <out>.manifest.json.
void emit_csv(const Common& c, const std::string& csv, const RunManifest& m) {
    emit(c, csv);
    if (!c.out.empty()) write_text_file(c.out + ".manifest.json", manifest_to_json(m));
}

Measure load_measure(const Common& c) {
    if (c.measure_file.empty()) throw InputError("--measure is required");
    return measure_from_json(read_text_file(c.measure_file));
}

Flux load_flux(const Common& c) {
    if (c.flux_file.empty()) return Flux::burgers();
    return flux_from_json(read_text_file(c.flux_file));
}

MergerSchedule load_schedule(const Common& c) {
    if (c.schedule_file.empty()) return MergerSchedule::standard();
    return schedule_from_json(read_text_file(c.schedule_file));
}

TxGridSpec grid_spec(const Common& c) {
    if (c.nt < 1 || c.nx < 1) throw InputError("--nt and --nx must be positive");
    return {c.t0, c.t1, c.x0, c.x1, c.nt, c.nx};
}

std::string samples_csv(const std::vector<TxSample>& s) {
    std::ostringstream os;
    write_tx_csv(os, s);
    return os.str();
}

json samples_json(const std::vector<TxSample>& s) {
    json arr = json::array();
    for (const auto& v : s) arr.push_back(json{{"t", v.t}, {"x", v.x}, {"u", v.u}});
    return arr;
}

std::vector<double> parse_numbers(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw InputError("not a number: '" + item + "'");
        }
        if (used != item.size()) throw InputError("not a number: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

// Initial data: step:L,R | tanh:A,k (-A tanh(k x)) | shock:alpha,beta | const:v
std::function<double(double)> initial_data(const std::string& spec, const Flux& flux) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("initial data spec needs the form kind:params");
    const std::string kind = spec.substr(0, colon);
    const auto p = parse_numbers(spec.substr(colon + 1));
    auto need = [&](std::size_t n) {
        if (p.size() != n) throw InputError("initial data '" + kind + "' takes " + std::to_string(n) + " parameters");
    };
    if (kind == "step") {
        need(2);
        const double l = p[0], r = p[1];
        return [l, r](double x) { return x < 0 ? l : (x > 0 ? r : 0.5 * (l + r)); };
    }
    if (kind == "tanh") {
        need(2);
        const double a = p[0], k = p[1];
        return [a, k](double x) { return -a * std::tanh(k * x); };
    }
    if (kind == "shock") {
        need(2);
        auto prof = std::make_shared<ShockProfile>(flux, p[0], p[1]);
        return [prof](double x) { return (*prof)(x); };
    }
    if (kind == "const") {
        need(1);
        const double v = p[0];
        return [v](double) { return v; };
    }
    throw InputError("unknown initial data kind '" + kind + "'");
}

int cmd_eval(const Common& c, const RunManifest& base) {
    const Measure mu = load_measure(c);
    RunManifest m = base;
    m.inputs["measure"] = measure_to_json(mu);
    const EntireSolution sol(mu);
    const auto samples = evaluate_grid([&](double t, double x) { return sol.u(t, x); }, grid_spec(c));
    if (c.format == "json") {
        json j{{"manifest", manifest_value(m)}, {"samples", samples_json(samples)}};
        emit(c, j.dump(2) + "\n");
    } else {
        emit_csv(c, samples_csv(samples), m);
    }
    return 0;
}

int cmd_ancient(const Common& c, const RunManifest& base, const std::string& speeds, const std::string& ladder,
                std::optional<double> fixed) {
    const Measure mu = load_measure(c);
    RunManifest m = base;
    m.inputs["measure"] = measure_to_json(mu);
    const auto ts = parse_numbers(ladder);
    for (double t : ts)
        if (!(t < 0.0)) throw InputError("ladder times must be negative");
    const WindowFn window = fixed ? fixed_window(*fixed) : power_window();
    json reports = json::array();
    for (double speed : parse_numbers(speeds)) {
        const AncientReport rep = ancient_report(mu, speed, ts, window);
        json r = json::parse(ancient_report_to_json(rep));
        reports.push_back(r);
        for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
    }
    json j{{"manifest", manifest_value(m)}, {"reports", reports}};
    emit(c, j.dump(2) + "\n");
    return 0;
}

int cmd_pde(const Common& c, const RunManifest& base, const std::string& u0_spec, double cadence,
            std::optional<double> alpha, std::optional<double> beta) {
    const Flux flux = load_flux(c);
    RunManifest m = base;
    m.inputs["flux"] = flux_to_json(flux);
    m.inputs["u0"] = u0_spec;
    if (c.nx < 3) throw InputError("--nx must be at least 3");
    const Grid u0 = Grid::sample(c.x0, c.x1, static_cast<std::size_t>(c.nx), initial_data(u0_spec, flux));
    SolverConfig cfg;
    cfg.output_interval = cadence;
    RunInfo info;
    const auto snaps = run_scl(flux, u0, c.t1, cfg, &info);
    for (const auto& w : info.warnings) std::cerr << "warning: " << w << "\n";
    if (c.format == "json") {
        const double a = alpha.value_or(u0.values.back()), b = beta.value_or(u0.values.front());
        json j{{"manifest", manifest_value(m)}, {"steps", info.steps}, {"warnings", info.warnings}};
        if (b > a) {
            const ShockProfile phi(flux, a, b);
            const auto trace = extract_shift(snaps, a, b);
            json tr = json::array();
            for (std::size_t k = 0; k < snaps.size(); ++k) {
                const auto& g = snaps[k];
                const double s = trace.samples[k].s;
                tr.push_back(json{{"t", g.time},
                                  {"s", s},
                                  {"shock_error", shock_error(g, [&](double y) { return phi(y); }, s)},
                                  {"sup_v", sup_norm(aux_v(g, flux, phi.speed(), phi.d()))}});
            }
            j["alpha"] = a;
            j["beta"] = b;
            j["speed"] = phi.speed();
            j["shift_trace"] = tr;
        }
        emit(c, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        write_grids_csv(os, snaps);
        emit_csv(c, os.str(), m);
    }
    return 0;
}

int cmd_merger(const Common& c, const RunManifest& base, double window) {
    const MergerSchedule schedule = load_schedule(c);
    RunManifest m = base;
    m.inputs["schedule"] = schedule_to_json(schedule);
    const MergerSolution sol(schedule);
    if (c.format == "json") {
        json merges = json::array(), repairs = json::array();
        for (int k = 2; k <= schedule.size(); ++k) {
            const auto d = merger_diag(sol, k, window);
            merges.push_back(json{{"k", k}, {"tau", d.time}, {"window", d.window}, {"sup_error", d.sup_error}});
        }
        for (int k = 1; k <= schedule.size(); ++k)
            for (double delta : {0.5, 1.0, 1.5}) {
                const auto d = repair_diag(sol, k, delta);
                repairs.push_back(json{{"k", k}, {"delta", delta}, {"time", d.time}, {"sup_error", d.sup_error}});
            }
        json j{{"manifest", manifest_value(m)}, {"merges", merges}, {"repairs", repairs}};
        emit(c, j.dump(2) + "\n");
    } else {
        const auto samples = evaluate_grid([&](double t, double x) { return sol.u(t, x); }, grid_spec(c));
        emit_csv(c, samples_csv(samples), m);
    }
    return 0;
}

// min f'' on [alpha, beta], or null when f'' vanishes somewhere in between.
json convexity_or_null(const Flux& flux, double alpha, double beta) {
    try {
        return flux.convexity(alpha, beta);
    } catch (const InputError&) {
        return nullptr;
    }
}

int cmd_shock(const Common& c, const RunManifest& base, double alpha, double beta) {
    const Flux flux = load_flux(c);
    RunManifest m = base;
    m.inputs["flux"] = flux_to_json(flux);
    const ShockProfile phi(flux, alpha, beta);
    std::vector<TxSample> samples;
    for (int j = 0; j < c.nx; ++j) {
        const double y = c.nx == 1 ? c.x0 : c.x0 + (c.x1 - c.x0) * j / (c.nx - 1);
        samples.push_back({0.0, y, phi(y)});
    }
    if (c.format == "json") {
        json j{{"manifest", manifest_value(m)},
               {"alpha", alpha},
               {"beta", beta},
               {"c", phi.speed()},
               {"d", phi.d()},
               {"convexity", convexity_or_null(flux, alpha, beta)},
               {"lambda_plus", phi.lambda_plus()},
               {"lambda_minus", phi.lambda_minus()},
               {"samples", samples_json(samples)}};
        emit(c, j.dump(2) + "\n");
    } else {
        emit_csv(c, samples_csv(samples), m);
    }
    return 0;
}

int cmd_selfcheck(const std::vector<int>& only) {
    bool ok = true;
    auto report = [&](const CheckResult& r) {
        std::cout << format_result(r) << std::endl;
        ok = ok && r.passed;
    };
    if (only.empty()) {
        run_acceptance(report);
    } else {
        for (int id : only) report(run_criterion(id));
    }
    std::cout << (ok ? "selfcheck: all criteria passed" : "selfcheck: some criteria FAILED") << std::endl;
    return ok ? 0 : 1;
}

void add_grid_flags(CLI::App* app, Common& c) {
    app->add_option("--t0", c.t0, "First time");
    app->add_option("--t1", c.t1, "Last time");
    app->add_option("--nt", c.nt, "Number of times");
    app->add_option("--x0", c.x0, "Left end of the x range");
    app->add_option("--x1", c.x1, "Right end of the x range");
    app->add_option("--nx", c.nx, "Number of x points");
}

void add_output_flags(CLI::App* app, Common& c) {
    app->add_option("--out", c.out, "Output file (default: stdout)");
    app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shockscope: viscous shocks and entire Burgers solutions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", SHOCKSCOPE_VERSION);
    Common c;

    auto* eval = app.add_subcommand("eval", "Evaluate the entire solution of a measure on a (t, x) grid");
    eval->add_option("--measure", c.measure_file, "Measure JSON file")->required();
    add_grid_flags(eval, c);
    add_output_flags(eval, c);

    std::string speeds = "0", ladder = "-100,-1000,-10000";
    std::optional<double> window;
    auto* ancient = app.add_subcommand("ancient", "Classify ancient limits along rays x = c t and measure errors");
    ancient->add_option("--measure", c.measure_file, "Measure JSON file")->required();
    ancient->add_option("--speeds", speeds, "Comma-separated frame speeds c");
    ancient->add_option("--ladder", ladder, "Comma-separated negative times");
    ancient->add_option("--window", window, "Fixed half-width of the x window (default |t|^0.9)");
    ancient->add_option("--out", c.out, "Output file (default: stdout)");

    std::string u0_spec = "tanh:1,2";
    double cadence = 0.0;
    std::optional<double> alpha_opt, beta_opt;
    auto* pde = app.add_subcommand("pde", "Solve u_t + f(u)_x = u_xx from initial data");
    pde->add_option("--flux", c.flux_file, "Flux JSON file (default: Burgers)");
    pde->add_option("--u0", u0_spec, "Initial data: step:L,R | tanh:A,k | shock:alpha,beta | const:v");
    pde->add_option("--cadence", cadence, "Snapshot spacing in time (default: final time only)");
    pde->add_option("--alpha", alpha_opt, "Right far-field state for shift tracking");
    pde->add_option("--beta", beta_opt, "Left far-field state for shift tracking");
    add_grid_flags(pde, c);
    add_output_flags(pde, c);

    double merge_window = 0.0;
    auto* merger = app.add_subcommand("merger", "Evaluate the merger construction or its diagnostics");
    merger->add_option("--schedule", c.schedule_file, "Schedule JSON file (default N=10, times 1,200,1e9)");
    merger->add_option("--window", merge_window, "Half-width for merger diagnostics (default t_k)");
    add_grid_flags(merger, c);
    add_output_flags(merger, c);

    double alpha = -1.0, beta = 1.0;
    auto* shock = app.add_subcommand("shock", "Tabulate the travelling-wave profile between two states");
    shock->add_option("--flux", c.flux_file, "Flux JSON file (default: Burgers)");
    shock->add_option("--alpha", alpha, "Right state");
    shock->add_option("--beta", beta, "Left state (> alpha)");
    add_grid_flags(shock, c);
    add_output_flags(shock, c);

    std::vector<int> only;
    auto* selfcheck = app.add_subcommand("selfcheck", "Run the acceptance criteria");
    selfcheck->add_option("--only", only, "Criterion ids to run (default: all)")->check(CLI::Range(1, kCriterionCount));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and --version exit 0; any other usage error is bad input.
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*selfcheck) return cmd_selfcheck(only);
        const std::string name = app.get_subcommands().front()->get_name();
        const RunManifest m = make_manifest(name, argc, argv);
        if (*eval) return cmd_eval(c, m);
        if (*ancient) return cmd_ancient(c, m, speeds, ladder, window);
        if (*pde) return cmd_pde(c, m, u0_spec, cadence, alpha_opt, beta_opt);
        if (*merger) return cmd_merger(c, m, merge_window);
        if (*shock) return cmd_shock(c, m, alpha, beta);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
