#ifndef COOPCTL_ANALYTIC_HPP
#define COOPCTL_ANALYTIC_HPP

#include "coopctl/game.hpp"

namespace coopctl {

// Closed-form results for the cost-optimal combined incentive u* = 2c:
// logistic trajectories, the terminal time, the quadratic-in-p cumulative
// cost J*(p) = alpha p^2 + 2 beta p(1-p) + gamma (1-p)^2, and the regime
// classification of its minimizer over [0,1].

struct CostCoefficients {
    double vartheta; // structure scale: 2 n^2 (n-1)^2 c, or 4 n^2 k (k-1) c / (omega (k-2))
    double alpha;    // cost of pure reward (p = 1)
    double beta;     // cross term
    double gamma;    // cost of pure punishment (p = 0)
    double x0 = 0.0; // boundary data the coefficients were built from
    double delta = 0.0;
};

enum class Regime {
    SymmetricHalf,      // x0 == delta: minimizer is exactly 1/2
    Interior,           // strict interior minimizer (gamma-beta)/(alpha-2beta+gamma)
    BoundaryPunishment, // J* nondecreasing on [0,1]: minimizer p = 0
    BoundaryReward,     // J* nonincreasing on [0,1]: minimizer p = 1
};

struct RegimeClassification {
    Regime regime;
    double p_star; // the minimizer of J* over [0,1] in every case
    double theta;  // (x0 - delta)(1 - x0 - delta); same sign as g_diff
    double g_diff; // J*(1) - J*(0) = vartheta * ln[x0(1-x0) / (delta(1-delta))]
};

// The cost-minimizing incentive magnitude; identical for both structures
// and independent of p.
double optimal_incentive(double c);

// Cooperator share at time t under u = 2c: the logistic curve through x0
// with rate rate_factor(structure) * c.
double trajectory(const StructureParams& s, double x0, double c, double t);

// Time for the u = 2c trajectory to go from x0 to 1 - delta.
double terminal_time(const StructureParams& s, const BoundarySpec& bounds, double c);

CostCoefficients cost_coefficients(const StructureParams& s, const BoundarySpec& bounds, double c);

// J*(p) for p in [0,1].
double cumulative_cost(const CostCoefficients& coeffs, double p);

// Minimizer of J*(p) over [0,1] with its regime label. Dispatch: exact
// x0 == delta is SymmetricHalf; otherwise the boundary cases trigger when
// the quadratic is monotone on [0,1], else the interior stationary point.
RegimeClassification optimal_preference(const CostCoefficients& coeffs);

struct CostDifference {
    double g;     // J*(1) - J*(0)
    double theta; // (x0 - delta)(1 - x0 - delta)
};

CostDifference cost_difference(const BoundarySpec& bounds, double vartheta);

} // namespace coopctl

#endif
