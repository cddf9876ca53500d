#ifndef COOPCTL_RNG_HPP
#define COOPCTL_RNG_HPP

#include <cstdint>
#include <random>

namespace coopctl {

// splitmix64 finalizer; used for sub-seed derivation so streams are a pure
// function of (master seed, indices) and independent of execution order.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t s = master;
    std::uint64_t h = splitmix64(s);
    s ^= a * 0xff51afd7ed558ccdULL;
    h ^= splitmix64(s);
    s ^= b * 0xc4ceb9fe1a85ec53ULL;
    h ^= splitmix64(s);
    return h;
}

// mt19937_64 with hand-rolled bounded draws. std::uniform_*_distribution is
// implementation-defined, which would break byte-identical outputs across
// toolchains; these mappings are pinned.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // uniform in [0, n) by rejection (Lemire-style masking would also do;
    // rejection keeps the mapping obvious)
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
        std::uint64_t v;
        do { v = eng_(); } while (v >= limit);
        return v % n;
    }

    int index(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    // uniform in [0, 1) with 53-bit resolution
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

  private:
    std::mt19937_64 eng_;
};

} // namespace coopctl

#endif
