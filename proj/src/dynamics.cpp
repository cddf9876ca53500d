#include "coopctl/dynamics.hpp"

#include <cmath>

namespace coopctl {

double rhs(const StructureParams& s, double x, double u, double c) {
    if (!(x >= 0.0 && x <= 1.0))
        throw InvalidParams("rhs: need x in [0,1]");
    return rate_factor(s) * x * (1.0 - x) * (u - c);
}

namespace {

double rk4_step(const StructureParams& s, double t, double x, double h,
                const IncentiveSchedule& u, double c) {
    const double m = rate_factor(s);
    auto f = [&](double tt, double xx) { return m * xx * (1.0 - xx) * (u(tt) - c); };
    const double k1 = f(t, x);
    const double k2 = f(t + 0.5 * h, x + 0.5 * h * k1);
    const double k3 = f(t + 0.5 * h, x + 0.5 * h * k2);
    const double k4 = f(t + h, x + h * k3);
    return x + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double default_horizon(const StructureParams& s, double x0, double target, double c) {
    // 100x the passage time between x0 and the target at drift |u - c| = c
    // (the optimal-incentive rate); direction-symmetric.
    const double xt = (target > 0.0 && target < 1.0 && target != x0) ? target : 1.0 - x0 / 2.0;
    const double r = rate_factor(s) * c;
    return 100.0 * std::abs(std::log((1.0 - x0) * xt / (x0 * (1.0 - xt)))) / r;
}

} // namespace

IntegrationResult integrate(const StructureParams& s, double x0, const IncentiveSchedule& u,
                            double c, double step, const StopRule& stop, double max_time) {
    if (!(x0 > 0.0 && x0 < 1.0))
        throw InvalidParams("integrate: need x0 in (0,1)");
    if (!(step > 0.0))
        throw InvalidParams("integrate: need step > 0");
    if (!(c > 0.0))
        throw InvalidParams("integrate: need c > 0");
    validate(s);

    IntegrationResult out;
    out.series.push_back({0.0, x0});

    if (const auto* at_time = std::get_if<StopAtTime>(&stop)) {
        const double t_end = at_time->t_end;
        double t = 0.0, x = x0;
        while (t < t_end - 1e-15) {
            const double h = std::min(step, t_end - t);
            x = rk4_step(s, t, x, h, u, c);
            t += h;
            out.series.push_back({t, x});
        }
        return out;
    }

    const double target = std::get<StopAtState>(stop).x_target;
    const double horizon = max_time > 0.0 ? max_time : default_horizon(s, x0, target, c);
    const bool upward = target >= x0;

    double t = 0.0, x = x0;
    while (t < horizon) {
        const double x_next = rk4_step(s, t, x, step, u, c);
        const bool crossed = upward ? (x_next >= target) : (x_next <= target);
        if (crossed) {
            // Bisection on the RK4 sub-step from (t, x): the interpolant is
            // the integrator itself evaluated at partial steps.
            double lo = 0.0, hi = step;
            while (hi - lo > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                const double xm = rk4_step(s, t, x, mid, u, c);
                const bool hit = upward ? (xm >= target) : (xm <= target);
                (hit ? hi : lo) = mid;
            }
            const double tc = t + hi;
            out.series.push_back({tc, rk4_step(s, t, x, hi, u, c)});
            out.crossing_time = tc;
            return out;
        }
        x = x_next;
        t += step;
        out.series.push_back({t, x});
    }
    throw NoCrossing("integrate: target state not reached within the horizon");
}

StabilityReport stability(const StructureParams& s, double u, double c) {
    if (!(u >= 0.0) || !(c > 0.0))
        throw InvalidParams("stability: need u >= 0 and c > 0");
    // d(rhs)/dx = rate_factor * (1-2x)(u-c): +(u-c)*m at x*=0, -(u-c)*m at x*=1.
    const double m = rate_factor(s);
    const double d0 = m * (u - c);
    if (d0 == 0.0)
        return {EquilibriumType::Degenerate, EquilibriumType::Degenerate};
    if (d0 > 0.0)
        return {EquilibriumType::Unstable, EquilibriumType::Stable};
    return {EquilibriumType::Stable, EquilibriumType::Unstable};
}

double cost_integrand(const StructureParams& s, double x, double u, double p) {
    const double expenditure = incentive_scale(s) * u * (p * x + (1.0 - p) * (1.0 - x));
    return 0.5 * expenditure * expenditure;
}

double cost_quadrature(const StructureParams& s, const BoundarySpec& bounds, double p,
                       const IncentiveSchedule& u, double c, double step) {
    bounds.validate();
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidParams("cost_quadrature: need p in [0,1]");

    const double target = bounds.target();
    if (bounds.x0 >= target)
        return 0.0; // empty interval (only reachable through rounding at the feasibility edge)

    const auto passage = integrate(s, bounds.x0, u, c, step, StopAtState{target});
    const double t_cross = *passage.crossing_time;

    // Re-integrate on an exactly uniform grid so composite Simpson applies
    // without a ragged tail.
    long n_sub = static_cast<long>(std::ceil(t_cross / step));
    if (n_sub < 2)
        n_sub = 2;
    if (n_sub % 2 != 0)
        ++n_sub;
    const double h = t_cross / static_cast<double>(n_sub);

    double x = bounds.x0;
    double sum = cost_integrand(s, x, u(0.0), p);
    for (long i = 1; i <= n_sub; ++i) {
        const double t_prev = h * static_cast<double>(i - 1);
        x = rk4_step(s, t_prev, x, h, u, c);
        const double w = (i == n_sub) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        sum += w * cost_integrand(s, x, u(h * static_cast<double>(i)), p);
    }
    return sum * h / 3.0;
}

CostScan constant_u_cost_scan(const StructureParams& s, const BoundarySpec& bounds, double p,
                              double c, std::span<const double> u_grid, int steps_per_run) {
    bounds.validate();
    if (u_grid.empty())
        throw InvalidParams("constant_u_cost_scan: empty grid");
    for (double u : u_grid)
        if (!(u > c))
            throw InvalidParams("constant_u_cost_scan: grid entries must exceed c "
                                "(the target is unreachable otherwise)");

    const double log_gap =
        std::log((1.0 - bounds.x0) * (1.0 - bounds.delta) / (bounds.x0 * bounds.delta));
    const double m = rate_factor(s);

    CostScan scan;
    scan.curve.reserve(u_grid.size());
    scan.best_u = u_grid.front();
    double best_cost = 0.0;
    for (double u : u_grid) {
        const double t_passage = log_gap / (m * (u - c));
        const double step = t_passage / static_cast<double>(steps_per_run);
        const double cost = cost_quadrature(s, bounds, p, constant_incentive(u), c, step);
        scan.curve.emplace_back(u, cost);
        if (scan.curve.size() == 1 || cost < best_cost) {
            best_cost = cost;
            scan.best_u = u;
        }
    }
    return scan;
}

PairDerivative pair_rhs(const PairState& st, const GameParams& g, int k, double omega) {
    g.validate();
    if (k <= 2)
        throw InvalidParams("pair_rhs: need k > 2");
    if (!(st.x_c >= 0.0 && st.x_c <= 1.0) || !(st.x_cc >= 0.0 && st.x_cc <= 1.0))
        throw InvalidParams("pair_rhs: state components must be in [0,1]");
    if (st.x_c == 1.0)
        return {0.0, 0.0}; // all-cooperator state is terminal

    const double ratio = (st.x_cc - st.x_c) / (1.0 - st.x_c);
    const double psi = 0.5 * st.x_c * (1.0 - st.x_cc) *
                       ((k - 1) * g.b * ratio + k * (g.u - g.c) - g.b);
    const double phi = (1.0 - st.x_cc) / k * (1.0 - (k - 1) * ratio);
    return {omega * psi, phi};
}

double manifold(double x_c, int k) {
    return 1.0 / (k - 1) + (k - 2) * x_c / static_cast<double>(k - 1);
}

std::vector<PairPoint> integrate_pair(PairState s0, const GameParams& g, int k, double omega,
                                      double step, double t_end) {
    if (!(step > 0.0) || !(t_end > 0.0))
        throw InvalidParams("integrate_pair: need step > 0 and t_end > 0");

    auto f = [&](const PairState& st) { return pair_rhs(st, g, k, omega); };
    std::vector<PairPoint> out;
    out.reserve(static_cast<std::size_t>(t_end / step) + 2);
    out.push_back({0.0, s0});

    double t = 0.0;
    PairState s = s0;
    while (t < t_end - 1e-15) {
        const double h = std::min(step, t_end - t);
        const PairDerivative k1 = f(s);
        const PairDerivative k2 = f({s.x_c + 0.5 * h * k1.dx_c, s.x_cc + 0.5 * h * k1.dx_cc});
        const PairDerivative k3 = f({s.x_c + 0.5 * h * k2.dx_c, s.x_cc + 0.5 * h * k2.dx_cc});
        const PairDerivative k4 = f({s.x_c + h * k3.dx_c, s.x_cc + h * k3.dx_cc});
        s.x_c += h / 6.0 * (k1.dx_c + 2.0 * k2.dx_c + 2.0 * k3.dx_c + k4.dx_c);
        s.x_cc += h / 6.0 * (k1.dx_cc + 2.0 * k2.dx_cc + 2.0 * k3.dx_cc + k4.dx_cc);
        t += h;
        out.push_back({t, s});
    }
    return out;
}

} // namespace coopctl
