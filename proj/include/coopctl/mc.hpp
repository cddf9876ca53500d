#ifndef COOPCTL_MC_HPP
#define COOPCTL_MC_HPP

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "coopctl/analytic.hpp"
#include "coopctl/game.hpp"
#include "coopctl/network.hpp"
#include "coopctl/rng.hpp"

namespace coopctl {

// Agent-based Monte Carlo of the incentivized game on a generated network:
// imitation dynamics, institutional cost accounting, first-passage stop at
// the target cooperation level, and multi-run aggregation per grid p.

enum class Strategy : std::uint8_t { Defect = 0, Cooperate = 1 };

struct AgentPopulation {
    const NetworkGraph* graph = nullptr;
    std::vector<Strategy> strategies;
    int coop_count = 0;

    int size() const { return static_cast<int>(strategies.size()); }
    double fraction() const { return static_cast<double>(coop_count) / size(); }
};

// Pairwise-comparison rule: adopt the model's strategy with probability
// 1/(1 + exp(-omega * payoff advantage)).
struct FermiRule {
    double omega = 0.1;
};

// Proportional rule: adopt only advantageous strategies, with probability
// (f_j - f_i) / M; M must bound the largest possible payoff difference.
struct ImitationRule {};

using UpdateRule = std::variant<FermiRule, ImitationRule>;

struct McConfig {
    GameParams game;
    BoundarySpec bounds;
    UpdateRule rule = ImitationRule{};
    int runs = 200;
    std::uint64_t seed = 1;
    long max_sweeps = 100000;

    void validate() const;
};

struct CostLedger {
    double j = 0.0;      // time integral of the squared institutional expenditure
    double j_raw = 0.0;  // time integral of the raw expenditure
    long sweeps = 0;
    bool converged = false;
    long crossing_sweep = -1;
};

// Exactly lround(n * x0) cooperators placed uniformly without replacement.
// Rejects placements that would start at an absorbing state.
AgentPopulation init_population(const NetworkGraph& g, double x0, Rng& rng);

double fermi_probability(double pi_i, double pi_j, double omega);

// Zero unless f_j > f_i; throws InvalidParams when the normalization is too
// small for the observed difference.
double imitation_probability(double f_i, double f_j, double m_norm);

// Everything about a configuration that elementary updates look up.
struct McRuntime {
    PairwisePayoffs pay;
    UpdateRule rule;
    double m_norm;       // imitation normalization (payoff-entry span, scaled by max degree for accumulated payoffs)
    double a_scale;      // expenditure prefactor: n(n-1) on complete graphs, n * mean degree otherwise
    bool mean_field;     // complete graphs score agents by expected payoff at the current share
    double dt;           // 1/n: one sweep of n elementary updates spans one unit of time
    double u, p;
    int target_count;    // converged once coop_count reaches this
};

McRuntime make_runtime(const McConfig& cfg, const NetworkGraph& g, bool complete_structure);

enum class SweepStatus { Running, Converged, Absorbed };

// One Monte Carlo sweep: n elementary updates (uniform focal agent, uniform
// neighbor as model, imitation per the configured rule), each followed by a
// cost-ledger increment. Returns early when the population crosses the
// target or hits all-defect.
SweepStatus sweep(AgentPopulation& pop, const McRuntime& rt, Rng& rng, CostLedger& ledger);

struct TraceRow {
    long sweep;
    double fraction;
    double j;
};

CostLedger run_replica(const McConfig& cfg, const NetworkGraph& g, bool complete_structure,
                       double p, std::uint64_t seed, std::vector<TraceRow>* trace = nullptr);

// Sub-seed of a replica's update stream: a pure function of the master seed
// and the (p index, replica index) coordinates.
std::uint64_t replica_seed(std::uint64_t master_seed, std::size_t p_index, int replica);

// The graph a replica plays on. Deterministic families share one
// realization; random families draw one per replica index (the same one for
// every p, so grid cells are compared on the same 200-graph ensemble).
NetworkGraph replica_graph(const NetworkSpec& spec, int replica);

struct CellStats {
    double p = 0.0;
    int runs = 0;
    int converged_runs = 0;
    int defect_fixations = 0;
    double convergence_rate = 0.0;
    double mean_j = 0.0;        // over converged runs
    double stderr_j = 0.0;
    double mean_j_raw = 0.0;
    double stderr_j_raw = 0.0;
    double mean_crossing_sweeps = 0.0;
};

// Independent replicas for every p in the grid. Replica RNG streams are a
// pure function of (config seed, p index, replica index); random network
// families draw one graph per replica index, shared across the grid.
std::vector<CellStats> run_experiment(const McConfig& cfg, const NetworkSpec& spec,
                                      std::span<const double> p_grid);

// Single global time-scale factor mapping Monte Carlo cost to the analytic
// scale: the ratio at the grid point nearest p = 0.5, frozen for all p.
double calibration_scale(std::span<const CellStats> cells, const CostCoefficients& coeffs);

} // namespace coopctl

#endif
