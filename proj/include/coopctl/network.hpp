#ifndef COOPCTL_NETWORK_HPP
#define COOPCTL_NETWORK_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "coopctl/errors.hpp"

namespace coopctl {

// Seeded, deterministic generators for the five interaction topologies used
// by the Monte Carlo engine. Generated graphs are simple, undirected, and
// connected (random families regenerate with derived sub-seeds, then fail).

struct CompleteSpec {
    int n = 100;
};

// Two-dimensional square lattice of l x l nodes, degree 4 when periodic.
struct LatticeSpec {
    int l = 10;
    bool periodic = true;
};

// Preferential attachment from a complete seed clique of m0 nodes; each new
// node attaches m edges without replacement.
struct BarabasiAlbertSpec {
    int n = 100;
    int m0 = 6;
    int m = 2;
};

// Ring lattice of even base degree k, each edge's far endpoint rewired with
// the given probability to a uniform non-neighbor.
struct WattsStrogatzSpec {
    int n = 100;
    int k = 4;
    double rewire = 0.1;
};

// G(n, M) with M = round(n * mean_degree / 2) edges sampled uniformly
// without replacement.
struct ErdosRenyiSpec {
    int n = 100;
    double mean_degree = 4.0;
};

using NetworkModel =
    std::variant<CompleteSpec, LatticeSpec, BarabasiAlbertSpec, WattsStrogatzSpec, ErdosRenyiSpec>;

struct NetworkSpec {
    NetworkModel model;
    std::uint64_t seed = 1;
};

struct NetworkGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;     // sorted neighbor lists
    std::vector<std::pair<int, int>> edges; // u < v, lexicographic

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    double mean_degree() const { return n > 0 ? 2.0 * edge_count() / n : 0.0; }
    int min_degree() const;
    int max_degree() const;
};

std::string model_name(const NetworkModel& m);

// Deterministic given (spec, seed). Throws InvalidParams on a bad spec and
// NoCrossing-free: connectivity failures after 100 derived-seed retries
// surface as std::runtime_error.
NetworkGraph generate(const NetworkSpec& spec);

struct ValidationReport {
    bool symmetric = false;
    bool simple = false;
    bool connected = false;
    int min_degree = 0;
    int max_degree = 0;
    double mean_degree = 0.0;
    std::string detail;

    bool pass() const { return symmetric && simple && connected; }
};

ValidationReport validate(const NetworkGraph& g);

// Plain-text edge list: optional '#' provenance comments, a header line
// "n <count>", then one "u v" pair per line, 0-indexed.
void write_edge_list(std::ostream& os, const NetworkGraph& g, const std::string& provenance = "");
NetworkGraph read_edge_list(std::istream& is);

} // namespace coopctl

#endif
