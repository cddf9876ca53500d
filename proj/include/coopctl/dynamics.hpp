#ifndef COOPCTL_DYNAMICS_HPP
#define COOPCTL_DYNAMICS_HPP

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "coopctl/game.hpp"

namespace coopctl {

// Numerical side of the model: the cooperator-share ODE, fixed-step RK4 with
// target-crossing refinement, equilibrium stability, Simpson quadrature of
// the cost functional along integrated trajectories (the independent check
// of the closed forms in analytic.hpp), a brute-force scan over constant
// incentives, and the two-variable pair-approximation system.

struct OdeState {
    double t;
    double x;
};

using IncentiveSchedule = std::function<double(double)>; // u(t)

inline IncentiveSchedule constant_incentive(double u) {
    return [u](double) { return u; };
}

struct StopAtTime {
    double t_end;
};
struct StopAtState {
    double x_target;
};
using StopRule = std::variant<StopAtTime, StopAtState>;

struct IntegrationResult {
    std::vector<OdeState> series;
    std::optional<double> crossing_time; // set when a StopAtState target was reached
};

// dx/dt at (x, u): rate_factor(s) * x(1-x)(u-c).
double rhs(const StructureParams& s, double x, double u, double c);

// Classical RK4 at fixed step. For StopAtState the crossing step is refined
// by bisection on the RK4 sub-step to 1e-10 absolute in time, and the series
// ends at the refined crossing point. Throws NoCrossing when the target is
// not reached within max_time (default: 100x the u=2c analytic passage time).
IntegrationResult integrate(const StructureParams& s, double x0, const IncentiveSchedule& u,
                            double c, double step, const StopRule& stop, double max_time = -1.0);

enum class EquilibriumType { Stable, Unstable, Degenerate };

struct StabilityReport {
    EquilibriumType at_zero;
    EquilibriumType at_one;
};

// Signs of d(rhs)/dx at the equilibria x*=0 and x*=1; u == c degenerates both.
StabilityReport stability(const StructureParams& s, double u, double c);

// Institutional cost integrand (1/2) {A u [p x + (1-p)(1-x)]}^2 with
// A = incentive_scale(s).
double cost_integrand(const StructureParams& s, double x, double u, double p);

// Composite-Simpson integral of the cost integrand along the integrated
// trajectory from t0 to the crossing of 1 - delta. The node count is the
// smallest even number giving sub-steps <= step.
double cost_quadrature(const StructureParams& s, const BoundarySpec& bounds, double p,
                       const IncentiveSchedule& u, double c, double step);

struct CostScan {
    double best_u;
    std::vector<std::pair<double, double>> curve; // (u, cost)
};

// Evaluates the passage cost for each constant incentive in u_grid (all
// entries must exceed c) and returns the grid argmin. Quadrature resolution
// is steps_per_run nodes per passage, so accuracy is uniform in u even
// though the passage time diverges as u -> c.
CostScan constant_u_cost_scan(const StructureParams& s, const BoundarySpec& bounds, double p,
                              double c, std::span<const double> u_grid, int steps_per_run = 4000);

// ---- pair approximation on degree-k regular networks ----

struct PairState {
    double x_c;  // cooperator share
    double x_cc; // conditional probability that a cooperator's neighbor cooperates
};

struct PairDerivative {
    double dx_c;
    double dx_cc;
};

// Leading-order pair dynamics: dx_c/dt = omega * Psi, dx_cc/dt = Phi.
// The state (1, 1) is terminal; both derivatives are defined as 0 there.
PairDerivative pair_rhs(const PairState& s, const GameParams& g, int k, double omega);

// The slow manifold x_cc = 1/(k-1) + (k-2) x_c / (k-1), on which the pair
// dynamics reduce to the regular-network replicator flow.
double manifold(double x_c, int k);

struct PairPoint {
    double t;
    PairState s;
};

// RK4 on the two-variable pair system up to t_end.
std::vector<PairPoint> integrate_pair(PairState s0, const GameParams& g, int k, double omega,
                                      double step, double t_end);

} // namespace coopctl

#endif
