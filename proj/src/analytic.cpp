#include "coopctl/analytic.hpp"

#include <cmath>

namespace coopctl {

double optimal_incentive(double c) {
    if (!(c > 0.0))
        throw InvalidParams("optimal_incentive: need c > 0");
    return 2.0 * c;
}

double trajectory(const StructureParams& s, double x0, double c, double t) {
    if (!(x0 > 0.0 && x0 < 1.0))
        throw InvalidParams("trajectory: need x0 in (0,1)");
    if (!(c > 0.0))
        throw InvalidParams("trajectory: need c > 0");
    const double r = rate_factor(s) * c;
    return 1.0 / (1.0 + (1.0 - x0) / x0 * std::exp(-r * t));
}

double terminal_time(const StructureParams& s, const BoundarySpec& bounds, double c) {
    bounds.validate();
    if (!(c > 0.0))
        throw InvalidParams("terminal_time: need c > 0");
    const double r = rate_factor(s) * c;
    return std::log((1.0 - bounds.x0) * (1.0 - bounds.delta) / (bounds.x0 * bounds.delta)) / r;
}

CostCoefficients cost_coefficients(const StructureParams& s, const BoundarySpec& bounds, double c) {
    bounds.validate();
    if (!(c > 0.0))
        throw InvalidParams("cost_coefficients: need c > 0");
    const double x0 = bounds.x0, d = bounds.delta;
    // vartheta = 2 A^2 c^2 / rate, which specializes to 2 n^2 (n-1)^2 c on
    // complete graphs and 4 n^2 k (k-1) c / (omega (k-2)) on regular networks.
    const double a_scale = incentive_scale(s);
    const double vartheta = 2.0 * a_scale * a_scale * c * c / (rate_factor(s) * c);
    const double shared = x0 - 1.0 + d;
    return {
        vartheta,
        vartheta * (shared + std::log((1.0 - x0) / d)),
        vartheta * (1.0 - x0 - d),
        vartheta * (shared + std::log((1.0 - d) / x0)),
        x0,
        d,
    };
}

double cumulative_cost(const CostCoefficients& coeffs, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidParams("cumulative_cost: need p in [0,1]");
    const double q = 1.0 - p;
    return coeffs.alpha * p * p + 2.0 * coeffs.beta * p * q + coeffs.gamma * q * q;
}

RegimeClassification optimal_preference(const CostCoefficients& coeffs) {
    if (!(coeffs.vartheta > 0.0))
        throw InfeasibleBounds("optimal_preference: coefficients not built from a feasible problem");
    const double theta = (coeffs.x0 - coeffs.delta) * (1.0 - coeffs.x0 - coeffs.delta);
    const double g_diff = coeffs.alpha - coeffs.gamma;

    if (coeffs.x0 == coeffs.delta)
        return {Regime::SymmetricHalf, 0.5, theta, g_diff};

    const double curvature = coeffs.alpha - 2.0 * coeffs.beta + coeffs.gamma;
    if (coeffs.x0 > coeffs.delta) {
        if (coeffs.beta >= coeffs.gamma)
            return {Regime::BoundaryPunishment, 0.0, theta, g_diff};
    } else {
        if (coeffs.beta >= coeffs.alpha)
            return {Regime::BoundaryReward, 1.0, theta, g_diff};
    }

    if (curvature == 0.0) {
        // Degenerate quadratic: J* is linear with slope 2(beta - gamma);
        // minimize at the boundary the slope points away from, ties at p = 0.
        const double slope = coeffs.beta - coeffs.gamma;
        if (slope < 0.0)
            return {Regime::BoundaryReward, 1.0, theta, g_diff};
        return {Regime::BoundaryPunishment, 0.0, theta, g_diff};
    }

    const double p_star = (coeffs.gamma - coeffs.beta) / curvature;
    if (p_star <= 0.0)
        return {Regime::BoundaryPunishment, 0.0, theta, g_diff};
    if (p_star >= 1.0)
        return {Regime::BoundaryReward, 1.0, theta, g_diff};
    return {Regime::Interior, p_star, theta, g_diff};
}

CostDifference cost_difference(const BoundarySpec& bounds, double vartheta) {
    bounds.validate();
    const double x0 = bounds.x0, d = bounds.delta;
    return {
        vartheta * std::log(x0 * (1.0 - x0) / (d * (1.0 - d))),
        (x0 - d) * (1.0 - x0 - d),
    };
}

} // namespace coopctl
