#ifndef COOPCTL_TESTS_ORACLES_HPP
#define COOPCTL_TESTS_ORACLES_HPP

// Test-only oracles, independent of the library code paths they check.

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracles {

// Brute-force minimizer of f over [0,1] on a uniform grid of the given
// resolution. Ties resolve to the smallest abscissa.
inline double argmin_unit_grid(const std::function<double(double)>& f, double resolution) {
    const long n = std::lround(1.0 / resolution);
    double best_p = 0.0;
    double best_v = f(0.0);
    for (long i = 1; i <= n; ++i) {
        const double p = static_cast<double>(i) / static_cast<double>(n);
        const double v = f(p);
        if (v < best_v) {
            best_v = v;
            best_p = p;
        }
    }
    return best_p;
}

// Pearson correlation.
inline double correlation(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = a.size();
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    return sab / std::sqrt(saa * sbb);
}

} // namespace oracles

#endif
