#ifndef COOPCTL_GAME_HPP
#define COOPCTL_GAME_HPP

#include <utility>
#include <variant>

#include "coopctl/errors.hpp"

namespace coopctl {

// Donation-game parameters plus the institutional incentive. The institution
// rewards each cooperator pu per interaction and fines each defector (1-p)u
// per interaction; reward and punishment share the magnitude u, but the
// payoff formulas keep separate p and (1-p) factors so unequal magnitudes
// could be reintroduced without touching call sites.
struct GameParams {
    double b = 2.0;  // benefit conferred on the partner
    double c = 1.0;  // cost of cooperating, 0 < c < b
    double u = 0.0;  // per-interaction incentive magnitude, u >= 0
    double p = 0.5;  // rewarding preference in [0,1]; 1 = pure reward, 0 = pure punishment

    void validate() const {
        if (!(c > 0.0) || !(b > c))
            throw InvalidParams("GameParams: need 0 < c < b");
        if (!(u >= 0.0))
            throw InvalidParams("GameParams: need u >= 0");
        if (!(p >= 0.0 && p <= 1.0))
            throw InvalidParams("GameParams: need p in [0,1]");
    }
};

// Population structure: a well-mixed population (complete graph) or a
// degree-regular network under weak selection omega.
struct CompleteGraph {
    int n = 100;
};

struct RegularNetwork {
    int n = 100;
    int k = 4;          // degree, 2 < k < n
    double omega = 0.1; // selection strength in (0,1]
};

using StructureParams = std::variant<CompleteGraph, RegularNetwork>;

void validate(const StructureParams& s);
int agent_count(const StructureParams& s);

// Multiplier of x(1-x)(u-c) in the cooperator-share dynamics:
// 1 for complete graphs, omega*k*(k-2)/(2(k-1)) for regular networks.
double rate_factor(const StructureParams& s);

// Scale A of the institutional expenditure A*u*[p*x + (1-p)(1-x)]:
// n(n-1) for complete graphs, n*k for regular networks.
double incentive_scale(const StructureParams& s);

// Boundary-value data: start the population at cooperator share x0 and stop
// at 1-delta. Feasibility requires the target to exceed the start.
struct BoundarySpec {
    double x0 = 0.1;
    double delta = 0.1;
    double t0 = 0.0;

    double target() const { return 1.0 - delta; }
    bool feasible() const {
        return x0 > 0.0 && x0 < 1.0 && delta > 0.0 && delta < 1.0 && x0 + delta < 1.0;
    }
    void validate() const {
        if (!feasible())
            throw InfeasibleBounds("BoundarySpec: need 0 < x0 < 1, 0 < delta < 1, x0 + delta < 1");
    }
};

// The four per-interaction payoffs of the incentivized game.
struct PairwisePayoffs {
    double pi_cc; // cooperator meeting a cooperator
    double pi_cd; // cooperator meeting a defector
    double pi_dc; // defector meeting a cooperator
    double pi_dd; // defector meeting a defector

    double max() const;
    double min() const;
    double span() const { return max() - min(); } // normalization bound for imitation rules
};

PairwisePayoffs pairwise_payoffs(const GameParams& g);

// Expected payoffs (f_C, f_D) of cooperators and defectors in a well-mixed
// population at cooperator share x. f_C - f_D == u - c for every x.
std::pair<double, double> mean_field_payoffs(const GameParams& g, double x);

// Expected accumulated payoffs (Pi_C, Pi_D) of a cooperator/defector on a
// degree-k regular network, in the pair-approximation configuration where
// the focal agent faces one opposite-strategy partner and k-1 neighbors
// drawn with the given conditional cooperator probabilities.
std::pair<double, double> accumulated_payoffs(const GameParams& g, int k,
                                              double x_c_given_c, double x_c_given_d);

// Which part of the feasible region a boundary pair falls in. Classification
// uses exact comparisons: x0 == delta is its own case.
enum class Region { Infeasible, Equal, X0Greater, X0Less };

Region feasible_region(double x0, double delta);

} // namespace coopctl

#endif
