#include "coopctl/game.hpp"

#include <algorithm>

namespace coopctl {

void validate(const StructureParams& s) {
    std::visit([](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CompleteGraph>) {
            if (v.n < 3)
                throw InvalidParams("CompleteGraph: need n >= 3");
        } else {
            if (v.n < 3)
                throw InvalidParams("RegularNetwork: need n >= 3");
            if (!(v.k > 2 && v.k < v.n))
                throw InvalidParams("RegularNetwork: need 2 < k < n");
            if (!(v.omega > 0.0 && v.omega <= 1.0))
                throw InvalidParams("RegularNetwork: need omega in (0,1]");
        }
    }, s);
}

int agent_count(const StructureParams& s) {
    return std::visit([](const auto& v) { return v.n; }, s);
}

double rate_factor(const StructureParams& s) {
    validate(s);
    if (std::holds_alternative<CompleteGraph>(s))
        return 1.0;
    const auto& r = std::get<RegularNetwork>(s);
    return r.omega * r.k * (r.k - 2) / (2.0 * (r.k - 1));
}

double incentive_scale(const StructureParams& s) {
    validate(s);
    if (const auto* cg = std::get_if<CompleteGraph>(&s))
        return static_cast<double>(cg->n) * (cg->n - 1);
    const auto& r = std::get<RegularNetwork>(s);
    return static_cast<double>(r.n) * r.k;
}

double PairwisePayoffs::max() const {
    return std::max({pi_cc, pi_cd, pi_dc, pi_dd});
}

double PairwisePayoffs::min() const {
    return std::min({pi_cc, pi_cd, pi_dc, pi_dd});
}

PairwisePayoffs pairwise_payoffs(const GameParams& g) {
    g.validate();
    return {
        g.b - g.c + g.p * g.u,       // helped and rewarded
        -g.c + g.p * g.u,            // exploited but rewarded
        g.b - (1.0 - g.p) * g.u,     // free-rides, fined
        -(1.0 - g.p) * g.u,          // mutual defection, fined
    };
}

std::pair<double, double> mean_field_payoffs(const GameParams& g, double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw InvalidParams("mean_field_payoffs: need x in [0,1]");
    const PairwisePayoffs pi = pairwise_payoffs(g);
    const double y = 1.0 - x;
    return {pi.pi_cc * x + pi.pi_cd * y, pi.pi_dc * x + pi.pi_dd * y};
}

std::pair<double, double> accumulated_payoffs(const GameParams& g, int k,
                                              double x_c_given_c, double x_c_given_d) {
    g.validate();
    if (k <= 2)
        throw InvalidParams("accumulated_payoffs: need k > 2");
    if (!(x_c_given_c >= 0.0 && x_c_given_c <= 1.0) ||
        !(x_c_given_d >= 0.0 && x_c_given_d <= 1.0))
        throw InvalidParams("accumulated_payoffs: conditional probabilities must be in [0,1]");
    // Binomial sums over the k-1 free neighbors collapse to these linear forms.
    const double pi_c = (k - 1) * x_c_given_c * g.b + k * (g.p * g.u - g.c);
    const double pi_d = ((k - 1) * x_c_given_d + 1.0) * g.b - k * (1.0 - g.p) * g.u;
    return {pi_c, pi_d};
}

Region feasible_region(double x0, double delta) {
    if (!(x0 > 0.0 && x0 < 1.0) || !(delta > 0.0 && delta < 1.0) || !(x0 + delta < 1.0))
        return Region::Infeasible;
    if (x0 == delta)
        return Region::Equal;
    return x0 > delta ? Region::X0Greater : Region::X0Less;
}

} // namespace coopctl
