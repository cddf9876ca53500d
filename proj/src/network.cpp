#include "coopctl/network.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "coopctl/rng.hpp"

namespace coopctl {

namespace {

NetworkGraph from_edges(int n, std::vector<std::pair<int, int>> edges) {
    NetworkGraph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto& [u, v] : edges) {
        if (u > v)
            std::swap(u, v);
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj)
        std::sort(nb.begin(), nb.end());
    std::sort(edges.begin(), edges.end());
    g.edges = std::move(edges);
    return g;
}

bool is_connected(const NetworkGraph& g) {
    if (g.n == 0)
        return false;
    std::vector<char> seen(g.n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    std::size_t head = 0;
    int reached = 1;
    while (head < queue.size()) {
        const int v = queue[head++];
        for (int w : g.adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == g.n;
}

NetworkGraph gen_complete(const CompleteSpec& s) {
    if (s.n < 3)
        throw InvalidParams("complete: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(s.n) * (s.n - 1) / 2);
    for (int u = 0; u < s.n; ++u)
        for (int v = u + 1; v < s.n; ++v)
            edges.emplace_back(u, v);
    return from_edges(s.n, std::move(edges));
}

NetworkGraph gen_lattice(const LatticeSpec& s) {
    if (s.l < 3)
        throw InvalidParams("lattice: need l >= 3 (l = 2 with periodic boundaries "
                            "would create duplicate edges)");
    const int l = s.l, n = l * l;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(2) * n);
    auto id = [l](int i, int j) { return i * l + j; };
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) {
            if (s.periodic || i + 1 < l)
                edges.emplace_back(id(i, j), id((i + 1) % l, j));
            if (s.periodic || j + 1 < l)
                edges.emplace_back(id(i, j), id(i, (j + 1) % l));
        }
    }
    return from_edges(n, std::move(edges));
}

NetworkGraph gen_ba(const BarabasiAlbertSpec& s, Rng& rng) {
    if (!(s.m >= 1 && s.m <= s.m0 && s.m0 < s.n))
        throw InvalidParams("barabasi-albert: need 1 <= m <= m0 < n");
    std::vector<std::pair<int, int>> edges;
    std::vector<int> endpoints; // one entry per edge endpoint: degrees as multiplicities
    for (int u = 0; u < s.m0; ++u) {
        for (int v = u + 1; v < s.m0; ++v) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }
    std::set<int> targets;
    for (int v = s.m0; v < s.n; ++v) {
        targets.clear();
        while (static_cast<int>(targets.size()) < s.m) {
            const int t = endpoints[rng.index(static_cast<int>(endpoints.size()))];
            if (t != v)
                targets.insert(t);
        }
        for (int t : targets) {
            edges.emplace_back(t, v);
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return from_edges(s.n, std::move(edges));
}

NetworkGraph gen_ws(const WattsStrogatzSpec& s, Rng& rng) {
    if (s.k < 2 || s.k % 2 != 0 || s.k >= s.n)
        throw InvalidParams("watts-strogatz: need even k with 2 <= k < n");
    if (!(s.rewire >= 0.0 && s.rewire <= 1.0))
        throw InvalidParams("watts-strogatz: need rewire probability in [0,1]");

    std::vector<std::set<int>> nb(s.n);
    for (int u = 0; u < s.n; ++u) {
        for (int off = 1; off <= s.k / 2; ++off) {
            const int v = (u + off) % s.n;
            nb[u].insert(v);
            nb[v].insert(u);
        }
    }
    // Visit ring edges in construction order; replacing the far endpoint
    // keeps every node's ring-origin stubs, so the edge count is conserved.
    for (int u = 0; u < s.n; ++u) {
        for (int off = 1; off <= s.k / 2; ++off) {
            const int v = (u + off) % s.n;
            if (!nb[u].count(v))
                continue; // already rewired away by an earlier visit
            if (!rng.bernoulli(s.rewire))
                continue;
            if (static_cast<int>(nb[u].size()) >= s.n - 1)
                continue; // u is saturated, nothing to rewire to
            int w;
            do {
                w = rng.index(s.n);
            } while (w == u || nb[u].count(w));
            nb[u].erase(v);
            nb[v].erase(u);
            nb[u].insert(w);
            nb[w].insert(u);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < s.n; ++u)
        for (int v : nb[u])
            if (u < v)
                edges.emplace_back(u, v);
    return from_edges(s.n, std::move(edges));
}

NetworkGraph gen_er(const ErdosRenyiSpec& s, Rng& rng) {
    if (s.n < 3 || !(s.mean_degree > 0.0))
        throw InvalidParams("erdos-renyi: need n >= 3 and mean_degree > 0");
    const long m_target = std::lround(s.n * s.mean_degree / 2.0);
    const long m_max = static_cast<long>(s.n) * (s.n - 1) / 2;
    if (m_target < s.n - 1 || m_target > m_max)
        throw InvalidParams("erdos-renyi: edge count out of range for a connected simple graph");
    std::set<std::pair<int, int>> chosen;
    while (static_cast<long>(chosen.size()) < m_target) {
        int u = rng.index(s.n);
        int v = rng.index(s.n);
        if (u == v)
            continue;
        if (u > v)
            std::swap(u, v);
        chosen.insert({u, v});
    }
    return from_edges(s.n, {chosen.begin(), chosen.end()});
}

} // namespace

int NetworkGraph::min_degree() const {
    int d = n > 0 ? degree(0) : 0;
    for (int v = 1; v < n; ++v)
        d = std::min(d, degree(v));
    return d;
}

int NetworkGraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v)
        d = std::max(d, degree(v));
    return d;
}

std::string model_name(const NetworkModel& m) {
    return std::visit([](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CompleteSpec>) return "complete";
        else if constexpr (std::is_same_v<T, LatticeSpec>) return "lattice";
        else if constexpr (std::is_same_v<T, BarabasiAlbertSpec>) return "ba";
        else if constexpr (std::is_same_v<T, WattsStrogatzSpec>) return "ws";
        else return "er";
    }, m);
}

NetworkGraph generate(const NetworkSpec& spec) {
    const bool randomized = !std::holds_alternative<CompleteSpec>(spec.model) &&
                            !std::holds_alternative<LatticeSpec>(spec.model);
    const int attempts = randomized ? 100 : 1;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Rng rng(derive_seed(spec.seed, 0x67726170, static_cast<std::uint64_t>(attempt)));
        NetworkGraph g = std::visit([&](const auto& v) -> NetworkGraph {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CompleteSpec>) return gen_complete(v);
            else if constexpr (std::is_same_v<T, LatticeSpec>) return gen_lattice(v);
            else if constexpr (std::is_same_v<T, BarabasiAlbertSpec>) return gen_ba(v, rng);
            else if constexpr (std::is_same_v<T, WattsStrogatzSpec>) return gen_ws(v, rng);
            else return gen_er(v, rng);
        }, spec.model);
        if (is_connected(g))
            return g;
    }
    throw std::runtime_error("generate(" + model_name(spec.model) +
                             "): no connected realization within the retry budget");
}

ValidationReport validate(const NetworkGraph& g) {
    ValidationReport rep;
    std::ostringstream detail;

    rep.symmetric = true;
    rep.simple = true;
    for (int v = 0; v < g.n && (rep.symmetric || rep.simple); ++v) {
        int prev = -1;
        for (int w : g.adj[v]) {
            if (w == v) {
                rep.simple = false;
                detail << "self-loop at " << v << "; ";
            }
            if (w == prev) {
                rep.simple = false;
                detail << "duplicate edge " << v << "-" << w << "; ";
            }
            prev = w;
            if (w < 0 || w >= g.n ||
                !std::binary_search(g.adj[w].begin(), g.adj[w].end(), v)) {
                rep.symmetric = false;
                detail << "asymmetric edge " << v << "->" << w << "; ";
            }
        }
    }
    rep.connected = is_connected(g);
    if (!rep.connected)
        detail << "disconnected; ";
    rep.min_degree = g.min_degree();
    rep.max_degree = g.max_degree();
    rep.mean_degree = g.mean_degree();
    rep.detail = detail.str();
    return rep;
}

void write_edge_list(std::ostream& os, const NetworkGraph& g, const std::string& provenance) {
    if (!provenance.empty()) {
        std::istringstream lines(provenance);
        std::string line;
        while (std::getline(lines, line))
            os << "# " << line << "\n";
    }
    os << "n " << g.n << "\n";
    for (const auto& [u, v] : g.edges)
        os << u << " " << v << "\n";
}

NetworkGraph read_edge_list(std::istream& is) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream row(line);
        if (n < 0) {
            std::string tag;
            row >> tag >> n;
            if (tag != "n" || n <= 0)
                throw InvalidParams("edge list: expected header 'n <count>'");
            continue;
        }
        int u, v;
        if (!(row >> u >> v))
            throw InvalidParams("edge list: malformed edge line: " + line);
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw InvalidParams("edge list: edge endpoints out of range: " + line);
        edges.emplace_back(u, v);
    }
    if (n < 0)
        throw InvalidParams("edge list: missing header");
    return from_edges(n, std::move(edges));
}

} // namespace coopctl
