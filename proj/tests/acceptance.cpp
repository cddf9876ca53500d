// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 7-9 are Monte Carlo and take a few minutes total; every
// run is seeded and reproduces byte-identically.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coopctl/analytic.hpp"
#include "coopctl/dynamics.hpp"
#include "coopctl/game.hpp"
#include "coopctl/mc.hpp"
#include "coopctl/network.hpp"
#include "oracles.hpp"

using namespace coopctl;

namespace {

int g_subfail = 0;

bool sub(bool ok, const std::string& detail) {
    if (!ok)
        ++g_subfail;
    std::printf("    %-6s %s\n", ok ? "ok" : "FAIL", detail.c_str());
    return ok;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

const StructureParams kComplete = CompleteGraph{100};
const StructureParams kRegular = RegularNetwork{100, 4, 0.1};

const std::vector<BoundarySpec> kColumns = {
    {0.1, 0.1}, {0.15, 0.1}, {0.3, 0.1}, {0.1, 0.15}, {0.1, 0.3}};

// ---- criterion 1 ----
bool criterion_optimal_protocol() {
    bool ok = true;
    std::vector<double> grid;
    for (int i = 101; i <= 400; ++i)
        grid.push_back(i / 100.0);
    for (const auto& [name, s] : {std::pair<std::string, StructureParams>{"complete", kComplete},
                                  {"regular", kRegular}}) {
        for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const CostScan scan = constant_u_cost_scan(s, {0.1, 0.1}, p, 1.0, grid);
            ok &= sub(std::abs(scan.best_u - 2.0) <= 0.01 + 1e-12,
                      name + " p=" + num(p) + ": scan argmin u = " + num(scan.best_u));
        }
    }
    return ok;
}

// ---- criterion 2 ----
bool criterion_trajectory() {
    bool ok = true;
    for (const auto& [name, s] : {std::pair<std::string, StructureParams>{"complete", kComplete},
                                  {"regular", kRegular}}) {
        double worst = 0.0;
        for (double x0 : {0.1, 0.15, 0.3}) {
            for (double d : {0.1, 0.15, 0.3}) {
                const BoundarySpec bounds{x0, d};
                const double tf = terminal_time(s, bounds, 1.0);
                const auto run =
                    integrate(s, x0, constant_incentive(2.0), 1.0, 1e-3, StopAtTime{tf});
                for (const auto& st : run.series)
                    worst = std::max(worst, std::abs(st.x - trajectory(s, x0, 1.0, st.t)));
            }
        }
        ok &= sub(worst < 1e-8, name + ": sup-norm RK4 vs closed form = " + num(worst));
    }
    return ok;
}

// ---- criterion 3 ----
bool criterion_cost_oracle() {
    bool ok = true;
    for (const auto& [name, s] : {std::pair<std::string, StructureParams>{"complete", kComplete},
                                  {"regular", kRegular}}) {
        double worst = 0.0;
        for (const BoundarySpec& bounds : kColumns) {
            const CostCoefficients cc = cost_coefficients(s, bounds, 1.0);
            for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                const double q = cost_quadrature(s, bounds, p, constant_incentive(2.0), 1.0, 1e-4);
                worst = std::max(worst,
                                 std::abs(q - cumulative_cost(cc, p)) / cumulative_cost(cc, p));
            }
        }
        ok &= sub(worst < 1e-6, name + ": worst |quadrature-closed|/closed = " + num(worst));
    }
    return ok;
}

// ---- criterion 4 ----
bool criterion_regime_table() {
    // Note: this artifact pins the interior constants to the full-precision
    // minimizers of the quadratic cost (0.3131052194551188 and its mirror).
    // Their correct 5-digit roundings are 0.31311 / 0.68689.
    bool ok = true;
    struct Expect {
        BoundarySpec bounds;
        Regime regime;
        double p_star;
    };
    const std::vector<Expect> table = {
        {{0.1, 0.1}, Regime::SymmetricHalf, 0.5},
        {{0.15, 0.1}, Regime::Interior, 0.3131052194551188},
        {{0.3, 0.1}, Regime::BoundaryPunishment, 0.0},
        {{0.1, 0.15}, Regime::Interior, 0.6868947805448812},
        {{0.1, 0.3}, Regime::BoundaryReward, 1.0},
    };
    for (const Expect& e : table) {
        const CostCoefficients cc = cost_coefficients(kComplete, e.bounds, 1.0);
        const RegimeClassification rc = optimal_preference(cc);
        const double brute =
            oracles::argmin_unit_grid([&](double p) { return cumulative_cost(cc, p); }, 1e-6);
        const std::string label = "(" + num(e.bounds.x0) + "," + num(e.bounds.delta) + ")";
        bool exact_ok = e.regime == Regime::SymmetricHalf ? rc.p_star == 0.5
                        : e.regime == Regime::Interior ? std::abs(rc.p_star - e.p_star) <= 1e-5
                                                       : rc.p_star == e.p_star;
        ok &= sub(rc.regime == e.regime && exact_ok,
                  label + ": p* = " + num(rc.p_star) + " expected " + num(e.p_star));
        ok &= sub(std::abs(rc.p_star - brute) <= 1e-6 + 1e-12,
                  label + ": brute-force minimizer at 1e-6 resolution = " + num(brute));
    }
    return ok;
}

// ---- criterion 5 ----
bool criterion_coefficient_orderings() {
    int violations = 0;
    int checked = 0;
    for (int i = 1; i <= 50; ++i) {
        for (int j = 1; j <= 50; ++j) {
            const double x0 = i / 51.0, d = j / 51.0;
            if (!(x0 + d < 1.0))
                continue;
            const CostCoefficients cc = cost_coefficients(kComplete, {x0, d}, 1.0);
            ++checked;
            if (i == j) {
                if (!(cc.beta < cc.gamma))
                    ++violations; // reward/punishment cross term below the endpoint cost
                if (std::abs(cc.alpha - cc.gamma) > 1e-9 * cc.gamma)
                    ++violations; // endpoint costs tie on the diagonal
            } else if (x0 > d) {
                if (!(cc.alpha > cc.beta))
                    ++violations;
                if (!(cc.alpha > cc.gamma))
                    ++violations;
            } else {
                if (!(cc.beta < cc.gamma))
                    ++violations;
                if (!(cc.alpha < cc.gamma))
                    ++violations;
            }
        }
    }
    return sub(violations == 0, "coefficient inequalities on " + std::to_string(checked) +
                                    " grid points: " + std::to_string(violations) + " violations");
}

// ---- criterion 6 ----
bool criterion_pair_reduction() {
    const GameParams g{2, 1, 2, 0.5};
    const int k = 4;
    const double omega = 1e-3;
    const double x_start = 0.1;
    const auto path =
        integrate_pair({x_start, manifold(x_start, k) + 0.2}, g, k, omega, 0.01, 4500.0);

    std::size_t hit = path.size();
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (std::abs(path[i].s.x_cc - manifold(path[i].s.x_c, k)) < 1e-3) {
            hit = i;
            break;
        }
    }
    if (hit == path.size())
        return sub(false, "trajectory never came within 1e-3 of the slow manifold");

    const double moved = std::abs(path[hit].s.x_c - x_start);
    bool ok = sub(moved < 0.01, "slow variable moved " + num(moved) +
                                    " before the manifold residual fell below 1e-3");

    const StructureParams reduced = RegularNetwork{100, k, omega};
    const double t_hit = path[hit].t;
    const double x_hit = path[hit].s.x_c;
    double worst = 0.0;
    for (std::size_t i = hit; i < path.size(); ++i)
        worst = std::max(worst, std::abs(path[i].s.x_c -
                                         trajectory(reduced, x_hit, g.c, path[i].t - t_hit)));
    ok &= sub(worst < 1e-2, "sup-norm vs reduced flow after the collapse = " + num(worst));
    ok &= sub(path.back().s.x_c > 0.95, "slow variable crossed 0.95 within the horizon");
    return ok;
}

// ---- criteria 7 and 8 ----

struct CurveChecks {
    double argmin_p = 0.0;
    double correlation = 0.0;
    double min_convergence = 1.0;
    std::vector<CellStats> cells;
};

CurveChecks run_curve(const NetworkSpec& net, const BoundarySpec& bounds, const UpdateRule& rule,
                      const StructureParams& comparator) {
    McConfig cfg;
    cfg.game = {2, 1, 2, 0.5};
    cfg.bounds = bounds;
    cfg.rule = rule;
    cfg.runs = 200;
    cfg.seed = 42;

    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i)
        grid.push_back(i / 10.0);

    CurveChecks out;
    out.cells = run_experiment(cfg, net, grid);
    const CostCoefficients cc = cost_coefficients(comparator, bounds, cfg.game.c);

    std::vector<double> mc, an;
    std::size_t best = 0;
    for (std::size_t i = 0; i < out.cells.size(); ++i) {
        mc.push_back(out.cells[i].mean_j);
        an.push_back(cumulative_cost(cc, grid[i]));
        out.min_convergence = std::min(out.min_convergence, out.cells[i].convergence_rate);
        if (out.cells[i].mean_j < out.cells[best].mean_j)
            best = i;
    }
    out.argmin_p = grid[best];
    out.correlation = oracles::correlation(mc, an);
    return out;
}

bool column_checks(const std::string& name, const std::vector<CurveChecks>& cols) {
    // columns: {x0=d}, {x0>d interior}, {x0>d boundary}, {x0<d interior}, {x0<d boundary}
    bool ok = true;
    ok &= sub(std::abs(cols[0].argmin_p - 0.5) <= 0.1 + 1e-9,
              name + " column 1: argmin " + num(cols[0].argmin_p) + " (want 0.5 +- 0.1)");
    ok &= sub(std::abs(cols[1].argmin_p - 0.3131052194551188) <= 0.1 + 1e-9,
              name + " column 2: argmin " + num(cols[1].argmin_p) + " (want p* = 0.3131 +- 0.1)");
    ok &= sub(cols[2].argmin_p == 0.0,
              name + " column 3: argmin " + num(cols[2].argmin_p) + " (want boundary p = 0)");
    ok &= sub(std::abs(cols[3].argmin_p - 0.6868947805448812) <= 0.1 + 1e-9,
              name + " column 4: argmin " + num(cols[3].argmin_p) + " (want p* = 0.6869 +- 0.1)");
    ok &= sub(cols[4].argmin_p == 1.0,
              name + " column 5: argmin " + num(cols[4].argmin_p) + " (want boundary p = 1)");
    return ok;
}

bool criterion_mc_complete() {
    std::vector<CurveChecks> cols;
    for (const BoundarySpec& bounds : kColumns)
        cols.push_back(run_curve({CompleteSpec{100}, 42}, bounds, ImitationRule{}, kComplete));

    bool ok = column_checks("complete", cols);

    const CellStats& j0 = cols[0].cells.front();
    const CellStats& j1 = cols[0].cells.back();
    const double diff = std::abs(j0.mean_j - j1.mean_j);
    const double pooled = std::sqrt(j0.stderr_j * j0.stderr_j + j1.stderr_j * j1.stderr_j);
    ok &= sub(diff <= 2.0 * pooled, "column 1: |J(0)-J(1)| = " + num(diff) +
                                        " vs 2 pooled SE = " + num(2.0 * pooled));
    for (std::size_t i = 0; i < cols.size(); ++i)
        ok &= sub(cols[i].correlation >= 0.98, "column " + std::to_string(i + 1) +
                                                   ": curve correlation = " +
                                                   num(cols[i].correlation));
    return ok;
}

bool criterion_mc_networks() {
    struct Family {
        std::string name;
        NetworkSpec spec;
        StructureParams comparator;
    };
    const std::vector<Family> families = {
        {"lattice", {LatticeSpec{10, true}, 42}, RegularNetwork{100, 4, 0.1}},
        {"ba", {BarabasiAlbertSpec{100, 6, 2}, 42}, RegularNetwork{100, 4, 0.1}},
        {"ws", {WattsStrogatzSpec{100, 4, 0.1}, 42}, RegularNetwork{100, 4, 0.1}},
        {"er", {ErdosRenyiSpec{100, 4.0}, 42}, RegularNetwork{100, 4, 0.1}},
    };

    bool ok = true;
    for (const Family& fam : families) {
        std::vector<CurveChecks> cols;
        for (const BoundarySpec& bounds : kColumns)
            cols.push_back(run_curve(fam.spec, bounds, FermiRule{0.1}, fam.comparator));
        ok &= column_checks(fam.name, cols);
        std::printf("           %s convergence >= %s on all columns\n", fam.name.c_str(),
                    num(std::min({cols[0].min_convergence, cols[1].min_convergence,
                                  cols[2].min_convergence, cols[3].min_convergence,
                                  cols[4].min_convergence}))
                        .c_str());
    }

    // informational: the interior-column shift at n=100 is a finite-size
    // effect; near the theory's infinite-regular-network regime the argmin
    // recovers the closed-form minimizer
    const CurveChecks big = run_curve({WattsStrogatzSpec{960, 4, 0.1}, 42}, {0.15, 0.1},
                                      FermiRule{0.1}, RegularNetwork{960, 4, 0.1});
    std::printf("           info: ws n=960 column 2 argmin = %s (p* = 0.3131)\n",
                num(big.argmin_p).c_str());
    return ok;
}

// ---- criterion 9 ----
bool criterion_stability_realization() {
    bool ok = true;
    {
        McConfig cfg;
        cfg.game = {2, 1, 0.5, 0.5};
        cfg.bounds = {0.5, 0.1};
        cfg.rule = ImitationRule{};
        cfg.runs = 200;
        cfg.seed = 42;
        const auto table = run_experiment(cfg, {CompleteSpec{100}, 42}, std::vector<double>{0.5});
        const double rate = static_cast<double>(table[0].defect_fixations) / cfg.runs;
        ok &= sub(rate >= 0.95, "u=0.5 < c: all-defect fixation rate = " + num(rate));
    }
    {
        McConfig cfg;
        cfg.game = {2, 1, 2, 0.5};
        cfg.bounds = {0.1, 0.1};
        cfg.rule = ImitationRule{};
        cfg.runs = 200;
        cfg.seed = 42;
        const auto table = run_experiment(cfg, {CompleteSpec{100}, 42}, std::vector<double>{0.5});
        ok &= sub(table[0].convergence_rate >= 0.99,
                  "u=2 > c: rate of reaching x >= 0.9 = " + num(table[0].convergence_rate));
    }
    return ok;
}

// ---- criterion 10 ----
std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool criterion_determinism() {
#ifndef COOPCTL_BIN
    return sub(false, "CLI binary path not provided at build time");
#else
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "coopctl-acceptance";
    std::filesystem::create_directories(dir);

    const std::vector<std::pair<std::string, std::string>> jobs = {
        {"netgen-ba", "netgen --model ba --n 100 --m0 6 --m 2 --seed 7 --format edgelist"},
        {"netgen-ws-json", "netgen --model ws --n 100 --k 4 --rewire 0.1 --seed 3 --format json"},
        {"mc-complete", "mc --network complete --n 100 --runs 50 --p 0.5 --seed 42"},
        {"sweep-mc-lattice",
         "sweep --mode mc --network lattice --l 10 --runs 20 --seed 9 --p-grid 0:1:0.25"},
        {"sweep-analytic", "sweep --mode analytic --network complete --x0 0.15 --delta 0.1"},
    };

    bool ok = true;
    for (const auto& [name, args] : jobs) {
        const auto f1 = dir / (name + ".a");
        const auto f2 = dir / (name + ".b");
        const std::string base = std::string(COOPCTL_BIN) + " " + args;
        const int rc1 = std::system((base + " --out " + f1.string()).c_str());
        const int rc2 = std::system((base + " --out " + f2.string()).c_str());
        const bool same = rc1 == 0 && rc2 == 0 && slurp(f1) == slurp(f2) && !slurp(f1).empty();
        ok &= sub(same, name + ": two runs byte-identical");
    }

    std::filesystem::remove_all(dir);
    return ok;
#endif
}

struct Criterion {
    const char* label;
    bool (*fn)();
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1. optimal protocol: constant-incentive scan argmin = 2c +- 0.01", criterion_optimal_protocol},
        {"2. closed-form trajectory: RK4 sup-norm < 1e-8 at step 1e-3", criterion_trajectory},
        {"3. cost oracle: quadrature matches closed form to 1e-6", criterion_cost_oracle},
        {"4. regime table: five reference columns vs brute-force minimization", criterion_regime_table},
        {"5. coefficient orderings: endpoint and cross-term inequalities on a 50x50 grid", criterion_coefficient_orderings},
        {"6. pair approximation: manifold collapse and reduced-flow tracking", criterion_pair_reduction},
        {"7. Monte Carlo on the complete graph: five-column reproduction", criterion_mc_complete},
        {"8. Monte Carlo network robustness: lattice, ba, ws, er", criterion_mc_networks},
        {"9. stability realization: fixation rates match the equilibria", criterion_stability_realization},
        {"10. determinism: identical seeds give byte-identical files", criterion_determinism},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        g_subfail = 0;
        Timer timer;
        std::printf("--- %s\n", c.label);
        std::fflush(stdout);
        bool ok = false;
        try {
            ok = c.fn() && g_subfail == 0;
        } catch (const std::exception& e) {
            sub(false, std::string("exception: ") + e.what());
        }
        std::printf("[%s] %s  (%.1fs)\n", ok ? "PASS" : "FAIL", c.label, timer.seconds());
        std::fflush(stdout);
        if (!ok)
            ++failed;
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failed,
                criteria.size());
    return failed;
}
