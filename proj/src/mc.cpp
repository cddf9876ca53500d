#include "coopctl/mc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace coopctl {

void McConfig::validate() const {
    game.validate();
    bounds.validate();
    if (runs < 1)
        throw InvalidParams("McConfig: need runs >= 1");
    if (max_sweeps < 1)
        throw InvalidParams("McConfig: need max_sweeps >= 1");
    if (const auto* fermi = std::get_if<FermiRule>(&rule)) {
        if (!(fermi->omega > 0.0 && fermi->omega <= 1.0))
            throw InvalidParams("McConfig: Fermi rule needs omega in (0,1]");
    }
}

AgentPopulation init_population(const NetworkGraph& g, double x0, Rng& rng) {
    if (!(x0 > 0.0 && x0 < 1.0))
        throw InvalidParams("init_population: need x0 in (0,1)");
    const int n = g.n;
    const long n_coop = std::lround(n * x0);
    if (n_coop <= 0 || n_coop >= n)
        throw InvalidParams("init_population: round(n*x0) would start at an absorbing state");

    AgentPopulation pop;
    pop.graph = &g;
    pop.strategies.assign(n, Strategy::Defect);
    pop.coop_count = static_cast<int>(n_coop);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (long i = 0; i < n_coop; ++i) {
        const long j = i + static_cast<long>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(order[i], order[j]);
        pop.strategies[order[i]] = Strategy::Cooperate;
    }
    return pop;
}

double fermi_probability(double pi_i, double pi_j, double omega) {
    return 1.0 / (1.0 + std::exp(-omega * (pi_j - pi_i)));
}

double imitation_probability(double f_i, double f_j, double m_norm) {
    if (!(m_norm > 0.0))
        throw InvalidParams("imitation_probability: need M > 0");
    if (f_j <= f_i)
        return 0.0;
    const double q = (f_j - f_i) / m_norm;
    if (q > 1.0 + 1e-12)
        throw InvalidParams("imitation_probability: M smaller than an observed payoff difference");
    return std::min(q, 1.0);
}

McRuntime make_runtime(const McConfig& cfg, const NetworkGraph& g, bool complete_structure) {
    cfg.validate();
    McRuntime rt;
    rt.pay = pairwise_payoffs(cfg.game);
    rt.rule = cfg.rule;
    rt.mean_field = complete_structure;
    // Mean-field scores are convex combinations of the four entries, so their
    // span bounds any difference; accumulated scores add up to max_degree terms.
    rt.m_norm = rt.mean_field ? rt.pay.span() : g.max_degree() * rt.pay.span();
    rt.a_scale = complete_structure ? static_cast<double>(g.n) * (g.n - 1)
                                    : static_cast<double>(g.n) * g.mean_degree();
    rt.dt = 1.0 / g.n;
    rt.u = cfg.game.u;
    rt.p = cfg.game.p;
    rt.target_count = static_cast<int>(std::ceil(g.n * (1.0 - cfg.bounds.delta) - 1e-9));
    return rt;
}

namespace {

// Realized accumulated payoff of v against its actual neighbors.
double accumulated_payoff(const AgentPopulation& pop, const McRuntime& rt, int v) {
    const auto& nb = pop.graph->adj[v];
    int coop_neighbors = 0;
    for (int w : nb)
        coop_neighbors += pop.strategies[w] == Strategy::Cooperate ? 1 : 0;
    const int defect_neighbors = static_cast<int>(nb.size()) - coop_neighbors;
    if (pop.strategies[v] == Strategy::Cooperate)
        return coop_neighbors * rt.pay.pi_cc + defect_neighbors * rt.pay.pi_cd;
    return coop_neighbors * rt.pay.pi_dc + defect_neighbors * rt.pay.pi_dd;
}

inline void add_cost(const McRuntime& rt, int coop_count, int n, CostLedger& ledger) {
    // Quadrature convention: the integrand is evaluated at the midpoint of
    // the occupied state cell, (count + 1/2)/n, which removes the O(1/n)
    // first-passage bias of the left endpoint (the run starts exactly at x0
    // and is absorbed on first touch of the target).
    const double x = std::min(1.0, (coop_count + 0.5) / n);
    const double expenditure = rt.a_scale * rt.u * (rt.p * x + (1.0 - rt.p) * (1.0 - x));
    ledger.j += rt.dt * 0.5 * expenditure * expenditure;
    ledger.j_raw += rt.dt * expenditure;
}

} // namespace

SweepStatus sweep(AgentPopulation& pop, const McRuntime& rt, Rng& rng, CostLedger& ledger) {
    const int n = pop.size();
    ++ledger.sweeps;
    for (int step = 0; step < n; ++step) {
        const int i = rng.index(n);
        const auto& nb = pop.graph->adj[i];
        const int j = nb[rng.index(static_cast<int>(nb.size()))];

        if (pop.strategies[i] != pop.strategies[j]) {
            double f_i, f_j;
            if (rt.mean_field) {
                const double x = pop.fraction();
                const double y = 1.0 - x;
                const double f_c = rt.pay.pi_cc * x + rt.pay.pi_cd * y;
                const double f_d = rt.pay.pi_dc * x + rt.pay.pi_dd * y;
                f_i = pop.strategies[i] == Strategy::Cooperate ? f_c : f_d;
                f_j = pop.strategies[j] == Strategy::Cooperate ? f_c : f_d;
            } else {
                f_i = accumulated_payoff(pop, rt, i);
                f_j = accumulated_payoff(pop, rt, j);
            }
            const double prob = std::holds_alternative<FermiRule>(rt.rule)
                                    ? fermi_probability(f_i, f_j, std::get<FermiRule>(rt.rule).omega)
                                    : imitation_probability(f_i, f_j, rt.m_norm);
            if (prob > 0.0 && rng.bernoulli(prob)) {
                pop.coop_count += pop.strategies[j] == Strategy::Cooperate ? 1 : -1;
                pop.strategies[i] = pop.strategies[j];
            }
        }

        add_cost(rt, pop.coop_count, n, ledger);

        if (pop.coop_count >= rt.target_count) {
            ledger.converged = true;
            ledger.crossing_sweep = ledger.sweeps;
            return SweepStatus::Converged;
        }
        if (pop.coop_count == 0)
            return SweepStatus::Absorbed;
    }
    return SweepStatus::Running;
}

CostLedger run_replica(const McConfig& cfg, const NetworkGraph& g, bool complete_structure,
                       double p, std::uint64_t seed, std::vector<TraceRow>* trace) {
    McConfig local = cfg;
    local.game.p = p;
    const McRuntime rt = make_runtime(local, g, complete_structure);

    Rng rng(seed);
    AgentPopulation pop = init_population(g, cfg.bounds.x0, rng);
    CostLedger ledger;

    // A rounded initial placement can already sit on the target.
    if (pop.coop_count >= rt.target_count) {
        ledger.converged = true;
        ledger.crossing_sweep = 0;
        return ledger;
    }

    SweepStatus status = SweepStatus::Running;
    while (ledger.sweeps < cfg.max_sweeps && status == SweepStatus::Running) {
        status = sweep(pop, rt, rng, ledger);
        if (trace)
            trace->push_back({ledger.sweeps, pop.fraction(), ledger.j});
    }
    return ledger;
}

std::uint64_t replica_seed(std::uint64_t master_seed, std::size_t p_index, int replica) {
    return derive_seed(master_seed, 0x7265706cULL + p_index, static_cast<std::uint64_t>(replica));
}

NetworkGraph replica_graph(const NetworkSpec& spec, int replica) {
    if (std::holds_alternative<CompleteSpec>(spec.model) ||
        std::holds_alternative<LatticeSpec>(spec.model))
        return generate(spec);
    NetworkSpec replica_spec = spec;
    replica_spec.seed = derive_seed(spec.seed, 0x72657067ULL, static_cast<std::uint64_t>(replica));
    return generate(replica_spec);
}

std::vector<CellStats> run_experiment(const McConfig& cfg, const NetworkSpec& spec,
                                      std::span<const double> p_grid) {
    cfg.validate();
    for (double p : p_grid)
        if (!(p >= 0.0 && p <= 1.0))
            throw InvalidParams("run_experiment: p grid must lie in [0,1]");

    const bool complete_structure = std::holds_alternative<CompleteSpec>(spec.model);
    const bool fixed_graph = complete_structure || std::holds_alternative<LatticeSpec>(spec.model);

    // One graph per replica index, shared across the whole p grid.
    std::vector<NetworkGraph> graphs;
    graphs.reserve(fixed_graph ? 1 : cfg.runs);
    if (fixed_graph) {
        graphs.push_back(generate(spec));
    } else {
        for (int r = 0; r < cfg.runs; ++r)
            graphs.push_back(replica_graph(spec, r));
    }

    std::vector<CellStats> table;
    table.reserve(p_grid.size());
    for (std::size_t ip = 0; ip < p_grid.size(); ++ip) {
        CellStats cell;
        cell.p = p_grid[ip];
        cell.runs = cfg.runs;

        std::vector<double> js, js_raw;
        double sweep_sum = 0.0;
        js.reserve(cfg.runs);
        for (int r = 0; r < cfg.runs; ++r) {
            const NetworkGraph& g = graphs[fixed_graph ? 0 : r];
            const CostLedger led = run_replica(cfg, g, complete_structure, cell.p,
                                               replica_seed(cfg.seed, ip, r));
            if (led.converged) {
                ++cell.converged_runs;
                js.push_back(led.j);
                js_raw.push_back(led.j_raw);
                sweep_sum += static_cast<double>(led.crossing_sweep);
            } else if (led.sweeps < cfg.max_sweeps) {
                ++cell.defect_fixations;
            }
        }
        cell.convergence_rate = static_cast<double>(cell.converged_runs) / cfg.runs;
        auto mean_stderr = [](const std::vector<double>& v, double& mean, double& se) {
            if (v.empty()) {
                mean = se = 0.0;
                return;
            }
            mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
            if (v.size() > 1) {
                double ss = 0.0;
                for (double x : v)
                    ss += (x - mean) * (x - mean);
                se = std::sqrt(ss / (v.size() - 1)) / std::sqrt(static_cast<double>(v.size()));
            } else {
                se = 0.0;
            }
        };
        mean_stderr(js, cell.mean_j, cell.stderr_j);
        mean_stderr(js_raw, cell.mean_j_raw, cell.stderr_j_raw);
        cell.mean_crossing_sweeps =
            cell.converged_runs > 0 ? sweep_sum / cell.converged_runs : 0.0;
        table.push_back(cell);
    }
    return table;
}

double calibration_scale(std::span<const CellStats> cells, const CostCoefficients& coeffs) {
    const CellStats* best = nullptr;
    for (const auto& c : cells)
        if (c.converged_runs > 0 && c.mean_j > 0.0 &&
            (!best || std::abs(c.p - 0.5) < std::abs(best->p - 0.5)))
            best = &c;
    if (!best)
        return 1.0;
    return cumulative_cost(coeffs, best->p) / best->mean_j;
}

} // namespace coopctl
