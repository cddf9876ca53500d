// coopctl: incentive design for cooperation on networks.
//
// Subcommands: classify (regime of the cost-minimizing reward/punishment
// mix), sweep (cost-vs-preference tables, closed form and Monte Carlo),
// ode (closed form vs integrated passage for one configuration), mc (one
// Monte Carlo grid cell), netgen (seeded network generation).

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coopctl/analytic.hpp"
#include "coopctl/config_json.hpp"
#include "coopctl/dynamics.hpp"
#include "coopctl/game.hpp"
#include "coopctl/mc.hpp"
#include "coopctl/network.hpp"

using nlohmann::json;
using namespace coopctl;

namespace {

constexpr const char* kVersion = "coopctl 0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitNoConvergence = 4;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct PGrid {
    double start = 0.0, stop = 1.0, step = 0.1;

    std::vector<double> values() const {
        if (!(step > 0.0) || stop < start)
            throw InvalidParams("p grid: need start <= stop and step > 0");
        if (start < -1e-12 || stop > 1.0 + 1e-12)
            throw InvalidParams("p grid: must lie within [0,1]");
        std::vector<double> v;
        const long count = std::lround((stop - start) / step);
        for (long i = 0; i <= count; ++i)
            v.push_back(start + static_cast<double>(i) * step);
        if (v.empty() || std::abs(v.back() - stop) > 1e-9)
            v.push_back(stop);
        for (double& p : v)
            p = std::min(std::max(p, 0.0), 1.0); // float drift only
        return v;
    }

    std::string str() const { return fmt(start) + ":" + fmt(stop) + ":" + fmt(step); }

    static PGrid parse(const std::string& text) {
        PGrid g;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &g.start, &g.stop, &g.step) != 3)
            throw InvalidParams("p grid: expected start:stop:step, got '" + text + "'");
        return g;
    }
};

struct ExperimentConfig {
    std::string mode = "analytic"; // analytic | mc
    NetworkSpec network{CompleteSpec{100}, 1};
    GameParams game{2.0, 1.0, -1.0, 0.5}; // u < 0 means "use the optimal 2c"
    BoundarySpec bounds{0.1, 0.1};
    std::string rule = "auto"; // auto | fermi | imitation
    double omega = 0.1;
    std::string p_grid; // empty: mode default
    int runs = 200;
    std::uint64_t seed = 42;
    long max_sweeps = 100000;
    double min_convergence = 0.5;
    std::string out;
    std::string format = "csv";

    double incentive() const { return game.u < 0.0 ? optimal_incentive(game.c) : game.u; }

    PGrid grid() const {
        if (!p_grid.empty())
            return PGrid::parse(p_grid);
        return mode == "mc" ? PGrid{0.0, 1.0, 0.1} : PGrid{0.0, 1.0, 0.02};
    }

    UpdateRule update_rule() const {
        const bool complete = std::holds_alternative<CompleteSpec>(network.model);
        if (rule == "imitation" || (rule == "auto" && complete))
            return ImitationRule{};
        if (rule == "fermi" || rule == "auto")
            return FermiRule{omega};
        throw InvalidParams("rule: expected auto, fermi, or imitation");
    }
};

void to_json(json& j, const ExperimentConfig& c) {
    j = json{{"mode", c.mode},
             {"network", c.network},
             {"game", json{{"b", c.game.b}, {"c", c.game.c}, {"u", c.incentive()}, {"p", c.game.p}}},
             {"bounds", c.bounds},
             {"rule", c.rule},
             {"omega", c.omega},
             {"p_grid", c.grid().str()},
             {"runs", c.runs},
             {"seed", c.seed},
             {"max_sweeps", c.max_sweeps},
             {"min_convergence", c.min_convergence},
             {"format", c.format}};
}

void from_json(const json& j, ExperimentConfig& c) {
    c.mode = j.value("mode", c.mode);
    if (j.contains("network"))
        c.network = j.at("network").get<NetworkSpec>();
    if (j.contains("game"))
        c.game = j.at("game").get<GameParams>();
    if (j.contains("bounds"))
        c.bounds = j.at("bounds").get<BoundarySpec>();
    c.rule = j.value("rule", c.rule);
    c.omega = j.value("omega", c.omega);
    c.p_grid = j.value("p_grid", c.p_grid);
    c.runs = j.value("runs", c.runs);
    c.seed = j.value("seed", c.seed);
    c.max_sweeps = j.value("max_sweeps", c.max_sweeps);
    c.min_convergence = j.value("min_convergence", c.min_convergence);
    c.out = j.value("out", c.out);
    c.format = j.value("format", c.format);
}

// The closed-form comparator for a network family: the lattice and the ring
// are degree-regular; heavy-tailed and uniform random families are matched
// by a regular network of the same mean degree.
StructureParams analytic_structure(const NetworkSpec& spec, const NetworkGraph& g, double omega) {
    return std::visit([&](const auto& m) -> StructureParams {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, CompleteSpec>) {
            return CompleteGraph{m.n};
        } else if constexpr (std::is_same_v<T, LatticeSpec>) {
            return RegularNetwork{m.l * m.l, 4, omega};
        } else if constexpr (std::is_same_v<T, WattsStrogatzSpec>) {
            return RegularNetwork{m.n, m.k, omega};
        } else {
            const int k = static_cast<int>(std::lround(g.mean_degree()));
            return RegularNetwork{g.n, std::max(k, 3), omega};
        }
    }, spec.model);
}

std::string regime_label(Regime r) {
    switch (r) {
    case Regime::SymmetricHalf: return "symmetric-half";
    case Regime::Interior: return "interior";
    case Regime::BoundaryPunishment: return "boundary-punishment";
    case Regime::BoundaryReward: return "boundary-reward";
    }
    return "?";
}

class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary); // binary: byte-stable newlines
            if (!file_)
                throw InvalidParams("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void write_provenance(std::ostream& os, const std::string& command, const json& config) {
    os << "# " << kVersion << " " << command << "\n";
    os << "# config: " << config.dump() << "\n";
}

// ---- classify ----

int cmd_classify(double x0, double delta, const std::string& out) {
    Output output(out);
    std::ostream& os = output.stream();
    write_provenance(os, "classify", json{{"x0", x0}, {"delta", delta}});

    const Region region = feasible_region(x0, delta);
    os << "x0: " << fmt(x0) << "\ndelta: " << fmt(delta) << "\n";
    if (region == Region::Infeasible) {
        os << "feasible: no\n";
        std::cerr << "classify: infeasible boundary data (need 0 < x0, delta and x0 + delta < 1)\n";
        return kExitInfeasible;
    }
    os << "feasible: yes\n";
    os << "case: "
       << (region == Region::Equal ? "x0 = delta"
                                   : (region == Region::X0Greater ? "x0 > delta" : "x0 < delta"))
       << "\n";

    // unit-scale coefficients: regime and p* are scale-free
    const StructureParams unit = CompleteGraph{3};
    const BoundarySpec bounds{x0, delta};
    const CostCoefficients cc = cost_coefficients(unit, bounds, 1.0);
    const RegimeClassification rc = optimal_preference(cc);
    const CostDifference cd = cost_difference(bounds, 1.0);

    os << "theta: " << fmt(rc.theta) << "\n";
    os << "g_over_vartheta: " << fmt(cd.g) << "\n";
    os << "g_sign: " << (cd.g > 0 ? "+" : (cd.g < 0 ? "-" : "0"))
       << (cd.g > 0 ? "  (pure punishment cheaper than pure reward)"
                    : (cd.g < 0 ? "  (pure reward cheaper than pure punishment)"
                                : "  (endpoints tie)"))
       << "\n";

    const double lhs = 2.0 * (1.0 - x0 - delta);
    os << "check_boundary_punishment: 2(1-x0-delta) = " << fmt(lhs)
       << (lhs >= std::log((1.0 - delta) / x0) ? " >= " : " < ")
       << "ln((1-delta)/x0) = " << fmt(std::log((1.0 - delta) / x0))
       << "  (boundary when >= and x0 > delta)\n";
    os << "check_boundary_reward: 2(1-x0-delta) = " << fmt(lhs)
       << (lhs >= std::log((1.0 - x0) / delta) ? " >= " : " < ")
       << "ln((1-x0)/delta) = " << fmt(std::log((1.0 - x0) / delta))
       << "  (boundary when >= and x0 < delta)\n";

    os << "regime: " << regime_label(rc.regime) << "\n";
    os << "p_star: " << fmt(rc.p_star) << "\n";
    return kExitOk;
}

// ---- sweep / mc ----

struct SweepRow {
    double p = 0.0;
    double j_analytic = 0.0;
    double j_analytic_normalized = 0.0;
    std::optional<double> j_mc_mean;
    std::optional<double> j_mc_stderr;
    std::optional<double> convergence_rate;
    std::string regime;
    std::string error;
};

void write_rows_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "p,J_analytic,J_analytic_normalized,J_mc_mean,J_mc_stderr,convergence_rate,regime,error\n";
    for (const SweepRow& r : rows) {
        os << fmt(r.p) << "," << fmt(r.j_analytic) << "," << fmt(r.j_analytic_normalized) << ",";
        os << (r.j_mc_mean ? fmt(*r.j_mc_mean) : "") << ",";
        os << (r.j_mc_stderr ? fmt(*r.j_mc_stderr) : "") << ",";
        os << (r.convergence_rate ? fmt(*r.convergence_rate) : "") << ",";
        os << r.regime << "," << r.error << "\n";
    }
}

json rows_to_json(const std::vector<SweepRow>& rows) {
    json arr = json::array();
    for (const SweepRow& r : rows) {
        json o{{"p", r.p},
               {"J_analytic", r.j_analytic},
               {"J_analytic_normalized", r.j_analytic_normalized},
               {"regime", r.regime}};
        if (r.j_mc_mean)
            o["J_mc_mean"] = *r.j_mc_mean;
        if (r.j_mc_stderr)
            o["J_mc_stderr"] = *r.j_mc_stderr;
        if (r.convergence_rate)
            o["convergence_rate"] = *r.convergence_rate;
        if (!r.error.empty())
            o["error"] = r.error;
        arr.push_back(o);
    }
    return arr;
}

int cmd_sweep(const ExperimentConfig& cfg, bool single_cell, const std::string& trace_path) {
    if (cfg.mode != "analytic" && cfg.mode != "mc")
        throw InvalidParams("sweep: mode must be analytic or mc");
    cfg.bounds.validate();
    const std::vector<double> grid = cfg.grid().values();

    GameParams game = cfg.game;
    game.u = cfg.incentive();

    // generate one graph up front: it defines the analytic comparator and
    // fails fast on a bad network spec
    const NetworkGraph probe = generate(cfg.network);
    const StructureParams structure = analytic_structure(cfg.network, probe, cfg.omega);
    const CostCoefficients coeffs = cost_coefficients(structure, cfg.bounds, game.c);
    const RegimeClassification regime = optimal_preference(coeffs);

    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (double p : grid) {
        SweepRow row;
        row.p = p;
        row.j_analytic = cumulative_cost(coeffs, p);
        row.j_analytic_normalized = row.j_analytic / coeffs.vartheta;
        row.regime = regime_label(regime.regime);
        rows.push_back(row);
    }

    json extra;
    bool converged_enough = true;
    if (cfg.mode == "mc") {
        McConfig mc;
        mc.game = game;
        mc.bounds = cfg.bounds;
        mc.rule = cfg.update_rule();
        mc.runs = cfg.runs;
        mc.seed = cfg.seed;
        mc.max_sweeps = cfg.max_sweeps;

        std::vector<CellStats> cells;
        try {
            cells = run_experiment(mc, cfg.network, grid);
        } catch (const std::exception& e) {
            for (SweepRow& row : rows)
                row.error = e.what();
            cells.clear();
        }
        if (!cells.empty()) {
            const double scale = calibration_scale(cells, coeffs);
            extra["calibration_scale"] = scale;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                rows[i].j_mc_mean = scale * cells[i].mean_j;
                rows[i].j_mc_stderr = scale * cells[i].stderr_j;
                rows[i].convergence_rate = cells[i].convergence_rate;
                if (cells[i].converged_runs == 0)
                    rows[i].error = "no converged runs";
                if (cells[i].convergence_rate < cfg.min_convergence)
                    converged_enough = false;
            }
        } else {
            converged_enough = false;
        }

        if (!trace_path.empty()) {
            // deterministic re-run of each replica with per-sweep logging
            Output tout(trace_path);
            write_provenance(tout.stream(), "mc-trace", json(cfg));
            tout.stream() << "p,run,sweep,fraction,J\n";
            const bool complete = std::holds_alternative<CompleteSpec>(cfg.network.model);
            for (std::size_t ip = 0; ip < grid.size(); ++ip) {
                for (int r = 0; r < mc.runs; ++r) {
                    std::vector<TraceRow> trace;
                    const NetworkGraph g = replica_graph(cfg.network, r);
                    run_replica(mc, g, complete, grid[ip], replica_seed(mc.seed, ip, r), &trace);
                    for (const TraceRow& t : trace)
                        tout.stream() << fmt(grid[ip]) << "," << r << "," << t.sweep << ","
                                      << fmt(t.fraction) << "," << fmt(t.j) << "\n";
                }
            }
        }
    }

    Output output(cfg.out);
    std::ostream& os = output.stream();
    const json config_echo = cfg;
    if (cfg.format == "json") {
        json doc{{"version", kVersion},
                 {"command", single_cell ? "mc" : "sweep"},
                 {"config", config_echo},
                 {"rows", rows_to_json(rows)}};
        if (!extra.is_null())
            doc["calibration"] = extra;
        os << doc.dump(2) << "\n";
    } else {
        write_provenance(os, single_cell ? "mc" : "sweep", config_echo);
        if (extra.contains("calibration_scale"))
            os << "# calibration_scale: " << fmt(extra["calibration_scale"].get<double>()) << "\n";
        write_rows_csv(os, rows);
    }
    return converged_enough ? kExitOk : kExitNoConvergence;
}

// ---- ode ----

int cmd_ode(const std::string& structure_name, int n, int k, double omega, double x0,
            double delta, double c, double u_in, double p, double step, const std::string& out) {
    StructureParams s;
    if (structure_name == "complete")
        s = CompleteGraph{n};
    else if (structure_name == "regular")
        s = RegularNetwork{n, k, omega};
    else
        throw InvalidParams("ode: structure must be complete or regular");

    const BoundarySpec bounds{x0, delta};
    bounds.validate();
    const double u = u_in < 0.0 ? optimal_incentive(c) : u_in;

    const double tf_closed = terminal_time(s, bounds, c);
    const auto run = integrate(s, x0, constant_incentive(u), c, step, StopAtState{bounds.target()});
    const double tf_num = *run.crossing_time;

    const double j_quad = cost_quadrature(s, bounds, p, constant_incentive(u), c, step);
    const CostCoefficients cc = cost_coefficients(s, bounds, c);
    const double j_closed = cumulative_cost(cc, p);

    Output output(out);
    std::ostream& os = output.stream();
    write_provenance(os, "ode",
                     json{{"structure", structure_name}, {"n", n}, {"k", k}, {"omega", omega},
                          {"x0", x0}, {"delta", delta}, {"c", c}, {"u", u}, {"p", p},
                          {"step", step}});
    os << "t_f_closed_form: " << fmt(tf_closed) << "\n";
    os << "t_f_integrated: " << fmt(tf_num) << "\n";
    os << "t_f_abs_diff: " << fmt(std::abs(tf_num - tf_closed)) << "\n";
    os << "J_quadrature: " << fmt(j_quad) << "\n";
    if (u == optimal_incentive(c)) {
        os << "J_closed_form: " << fmt(j_closed) << "\n";
        os << "J_rel_diff: " << fmt(std::abs(j_quad - j_closed) / j_closed) << "\n";
    } else {
        os << "J_closed_form: n/a (closed form holds at the optimal incentive)\n";
    }
    return kExitOk;
}

// ---- netgen ----

int cmd_netgen(const NetworkSpec& spec, const std::string& out, const std::string& format) {
    const NetworkGraph g = generate(spec);
    const ValidationReport rep = validate(g);
    if (!rep.pass())
        throw std::runtime_error("netgen: generated graph failed validation: " + rep.detail);

    Output output(out);
    std::ostream& os = output.stream();
    if (format == "json") {
        json doc = graph_to_json(spec, g);
        doc["version"] = kVersion;
        doc["validation"] = {{"min_degree", rep.min_degree},
                             {"max_degree", rep.max_degree},
                             {"mean_degree", rep.mean_degree}};
        os << doc.dump(2) << "\n";
    } else if (format == "edgelist") {
        const json config_echo = spec;
        write_edge_list(os, g, std::string(kVersion) + " netgen\nconfig: " + config_echo.dump());
    } else {
        throw InvalidParams("netgen: format must be edgelist or json");
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"incentive design for cooperation: closed forms, ODE checks, "
                 "and agent-based runs on networks"};
    app.require_subcommand(1);

    // classify
    double cl_x0 = 0.1, cl_delta = 0.1;
    std::string cl_out;
    CLI::App* classify = app.add_subcommand("classify", "regime of the cost-minimizing mix");
    classify->add_option("--x0", cl_x0, "initial cooperator share")->required();
    classify->add_option("--delta", cl_delta, "terminal gap (target is 1-delta)")->required();
    classify->add_option("--out", cl_out, "write the report to a file");

    // shared sweep/mc configuration
    ExperimentConfig cfg;
    std::string config_path, model = "complete", trace_path;
    int net_n = 100, net_l = 10, net_m0 = 6, net_m = 2, net_k = 4;
    double net_rewire = 0.1, net_mean_degree = 4.0;
    bool net_open_boundary = false;
    double flag_p = 0.5;

    auto add_common = [&](CLI::App* cmd, bool with_grid) {
        cmd->add_option("--config", config_path, "JSON config; flags override its values");
        cmd->add_option("--network,--model", model, "complete|lattice|ba|ws|er");
        cmd->add_option("--n", net_n, "agent count (complete, ba, ws, er)");
        cmd->add_option("--l", net_l, "lattice side length");
        cmd->add_flag("--open-boundary", net_open_boundary, "non-periodic lattice");
        cmd->add_option("--m0", net_m0, "preferential attachment: seed clique size");
        cmd->add_option("--m", net_m, "preferential attachment: edges per new node");
        cmd->add_option("--k", net_k, "ring base degree (ws)");
        cmd->add_option("--rewire", net_rewire, "ws rewiring probability");
        cmd->add_option("--mean-degree", net_mean_degree, "er target mean degree");
        cmd->add_option("--b", cfg.game.b, "benefit");
        cmd->add_option("--c", cfg.game.c, "cooperation cost");
        cmd->add_option("--u", cfg.game.u, "incentive magnitude (default: optimal 2c)");
        cmd->add_option("--x0", cfg.bounds.x0, "initial cooperator share");
        cmd->add_option("--delta", cfg.bounds.delta, "terminal gap");
        cmd->add_option("--rule", cfg.rule, "auto|fermi|imitation");
        cmd->add_option("--omega", cfg.omega, "selection strength for the fermi rule");
        cmd->add_option("--runs", cfg.runs, "replicas per grid cell");
        cmd->add_option("--seed", cfg.seed, "master seed");
        cmd->add_option("--max-sweeps", cfg.max_sweeps, "per-run sweep budget");
        cmd->add_option("--min-convergence", cfg.min_convergence,
                        "below this convergence rate the exit code is 4");
        cmd->add_option("--out", cfg.out, "output path (default: stdout)");
        cmd->add_option("--format", cfg.format, "csv|json");
        if (with_grid)
            cmd->add_option("--p-grid", cfg.p_grid, "start:stop:step over the rewarding preference");
        return cmd;
    };

    CLI::App* sweep =
        add_common(app.add_subcommand("sweep", "cost vs rewarding preference over a p grid"), true);
    std::string sweep_mode = "analytic";
    sweep->add_option("--mode", sweep_mode, "analytic|mc");

    CLI::App* mc = add_common(app.add_subcommand("mc", "one Monte Carlo grid cell"), false);
    mc->add_option("--p", flag_p, "rewarding preference of the cell");
    mc->add_option("--trace", trace_path, "write per-sweep traces of every run");

    // ode
    std::string ode_structure = "complete", ode_out;
    int ode_n = 100, ode_k = 4;
    double ode_omega = 0.1, ode_x0 = 0.1, ode_delta = 0.1, ode_c = 1.0, ode_u = -1.0,
           ode_p = 0.5, ode_step = 1e-4;
    CLI::App* ode = app.add_subcommand("ode", "closed form vs integrated passage");
    ode->add_option("--structure", ode_structure, "complete|regular");
    ode->add_option("--n", ode_n, "agent count");
    ode->add_option("--k", ode_k, "degree (regular)");
    ode->add_option("--omega", ode_omega, "selection strength (regular)");
    ode->add_option("--x0", ode_x0, "initial cooperator share");
    ode->add_option("--delta", ode_delta, "terminal gap");
    ode->add_option("--c", ode_c, "cooperation cost");
    ode->add_option("--u", ode_u, "incentive (default: optimal 2c)");
    ode->add_option("--p", ode_p, "rewarding preference");
    ode->add_option("--step", ode_step, "integrator step");
    ode->add_option("--out", ode_out, "output path");

    // netgen
    std::string gen_model = "lattice", gen_out, gen_format = "edgelist";
    int gen_n = 100, gen_l = 10, gen_m0 = 6, gen_m = 2, gen_k = 4;
    double gen_rewire = 0.1, gen_mean_degree = 4.0;
    bool gen_open_boundary = false;
    std::uint64_t gen_seed = 1;
    CLI::App* netgen = app.add_subcommand("netgen", "generate a seeded network");
    netgen->add_option("--model", gen_model, "complete|lattice|ba|ws|er")->required();
    netgen->add_option("--n", gen_n, "agent count");
    netgen->add_option("--l", gen_l, "lattice side length");
    netgen->add_flag("--open-boundary", gen_open_boundary, "non-periodic lattice");
    netgen->add_option("--m0", gen_m0, "seed clique size");
    netgen->add_option("--m", gen_m, "edges per new node");
    netgen->add_option("--k", gen_k, "ring base degree");
    netgen->add_option("--rewire", gen_rewire, "rewiring probability");
    netgen->add_option("--mean-degree", gen_mean_degree, "target mean degree");
    netgen->add_option("--seed", gen_seed, "generation seed");
    netgen->add_option("--out", gen_out, "output path");
    netgen->add_option("--format", gen_format, "edgelist|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInvalidConfig;
    }

    auto build_model = [](const std::string& name, int n, int l, bool open_boundary, int m0,
                          int m, int k, double rewire, double mean_degree) -> NetworkModel {
        if (name == "complete")
            return CompleteSpec{n};
        if (name == "lattice")
            return LatticeSpec{l, !open_boundary};
        if (name == "ba")
            return BarabasiAlbertSpec{n, m0, m};
        if (name == "ws")
            return WattsStrogatzSpec{n, k, rewire};
        if (name == "er")
            return ErdosRenyiSpec{n, mean_degree};
        throw InvalidParams("network model must be complete|lattice|ba|ws|er");
    };

    try {
        if (classify->parsed())
            return cmd_classify(cl_x0, cl_delta, cl_out);

        if (sweep->parsed() || mc->parsed()) {
            CLI::App* cmd = sweep->parsed() ? sweep : mc;
            if (!config_path.empty()) {
                // config file first, then re-apply any flags given on top of it
                std::ifstream in(config_path);
                if (!in)
                    throw InvalidParams("cannot read config file: " + config_path);
                ExperimentConfig flag_values = cfg;
                json j = json::parse(in);
                from_json(j, cfg);
                auto took = [&](const std::string& opt) { return cmd->count(opt) > 0; };
                if (took("--b")) cfg.game.b = flag_values.game.b;
                if (took("--c")) cfg.game.c = flag_values.game.c;
                if (took("--u")) cfg.game.u = flag_values.game.u;
                if (took("--x0")) cfg.bounds.x0 = flag_values.bounds.x0;
                if (took("--delta")) cfg.bounds.delta = flag_values.bounds.delta;
                if (took("--rule")) cfg.rule = flag_values.rule;
                if (took("--omega")) cfg.omega = flag_values.omega;
                if (took("--runs")) cfg.runs = flag_values.runs;
                if (took("--max-sweeps")) cfg.max_sweeps = flag_values.max_sweeps;
                if (took("--min-convergence")) cfg.min_convergence = flag_values.min_convergence;
                if (took("--out")) cfg.out = flag_values.out;
                if (took("--format")) cfg.format = flag_values.format;
                if (cmd == sweep && took("--p-grid")) cfg.p_grid = flag_values.p_grid;
                if (took("--network") || took("--model"))
                    cfg.network.model = build_model(model, net_n, net_l, net_open_boundary, net_m0,
                                                    net_m, net_k, net_rewire, net_mean_degree);
                if (took("--seed")) {
                    cfg.seed = flag_values.seed;
                    cfg.network.seed = flag_values.seed;
                }
            } else {
                cfg.network.model = build_model(model, net_n, net_l, net_open_boundary, net_m0,
                                                net_m, net_k, net_rewire, net_mean_degree);
                cfg.network.seed = cfg.seed;
            }

            if (mc->parsed()) {
                cfg.mode = "mc";
                cfg.p_grid = fmt(flag_p) + ":" + fmt(flag_p) + ":1";
            } else if (config_path.empty() || sweep->count("--mode") > 0) {
                cfg.mode = sweep_mode;
            }
            return cmd_sweep(cfg, mc->parsed(), trace_path);
        }

        if (ode->parsed())
            return cmd_ode(ode_structure, ode_n, ode_k, ode_omega, ode_x0, ode_delta, ode_c,
                           ode_u, ode_p, ode_step, ode_out);

        if (netgen->parsed())
            return cmd_netgen({build_model(gen_model, gen_n, gen_l, gen_open_boundary, gen_m0,
                                           gen_m, gen_k, gen_rewire, gen_mean_degree),
                               gen_seed},
                              gen_out, gen_format);
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const InfeasibleBounds& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const NoCrossing& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    }
    return kExitOk;
}
