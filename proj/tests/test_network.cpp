#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>

#include "coopctl/config_json.hpp"
#include "coopctl/network.hpp"

using namespace coopctl;

TEST_CASE("complete graph") {
    const NetworkGraph g = generate({CompleteSpec{8}, 1});
    CHECK(g.n == 8);
    CHECK(g.edge_count() == 28);
    CHECK(g.min_degree() == 7);
    CHECK(g.max_degree() == 7);
    const ValidationReport rep = validate(g);
    CHECK(rep.pass());
    CHECK(rep.mean_degree == doctest::Approx(7.0));
}

TEST_CASE("periodic lattice") {
    const NetworkGraph g = generate({LatticeSpec{10, true}, 1});
    CHECK(g.n == 100);
    CHECK(g.edge_count() == 200);
    CHECK(g.min_degree() == 4);
    CHECK(g.max_degree() == 4);
    CHECK(validate(g).pass());

    CHECK_THROWS_AS(generate({LatticeSpec{2, true}, 1}), InvalidParams);

    const NetworkGraph open = generate({LatticeSpec{5, false}, 1});
    CHECK(open.min_degree() == 2);
    CHECK(open.max_degree() == 4);
    CHECK(validate(open).pass());
}

TEST_CASE("preferential attachment edge budget") {
    const NetworkGraph g = generate({BarabasiAlbertSpec{100, 6, 2}, 9});
    CHECK(g.n == 100);
    CHECK(g.edge_count() == 15 + 2 * 94); // seed clique plus m per added node
    CHECK(validate(g).pass());
    CHECK(g.min_degree() >= 2);
}

TEST_CASE("preferential attachment grows heavy tails") {
    // pooled log2-bucket histogram over 100 seeds decreases across buckets,
    // and each realization has a hub several times the mean degree
    std::map<int, long> buckets;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const NetworkGraph g = generate({BarabasiAlbertSpec{1000, 6, 2}, seed});
        CHECK(g.max_degree() > 3.0 * g.mean_degree());
        for (int v = 0; v < g.n; ++v) {
            int b = 0, d = g.degree(v);
            while (d >>= 1)
                ++b;
            ++buckets[b];
        }
    }
    long prev = -1;
    for (const auto& [b, count] : buckets) {
        if (prev >= 0)
            CHECK(count < prev);
        prev = count;
    }
}

TEST_CASE("ring rewiring preserves the edge budget") {
    for (std::uint64_t seed : {1ULL, 7ULL, 42ULL}) {
        const NetworkGraph g = generate({WattsStrogatzSpec{100, 4, 0.1}, seed});
        CHECK(g.n == 100);
        CHECK(g.edge_count() == 200);
        CHECK(validate(g).pass());
    }
    const NetworkGraph ring = generate({WattsStrogatzSpec{100, 4, 0.0}, 5});
    CHECK(ring.min_degree() == 4);
    CHECK(ring.max_degree() == 4);
    CHECK(validate(ring).pass());
}

TEST_CASE("uniform random graph hits the requested density") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const NetworkGraph g = generate({ErdosRenyiSpec{100, 4.0}, seed});
        CHECK(g.edge_count() == 200); // fixed-M construction
        CHECK(g.mean_degree() == doctest::Approx(4.0).epsilon(0.1));
        CHECK(validate(g).pass());
    }
    // too few edges to ever span the graph
    CHECK_THROWS_AS(generate({ErdosRenyiSpec{100, 0.5}, 1}), InvalidParams);
}

TEST_CASE("generation is deterministic in the seed") {
    for (const NetworkModel& model :
         {NetworkModel{BarabasiAlbertSpec{200, 6, 2}}, NetworkModel{WattsStrogatzSpec{120, 4, 0.3}},
          NetworkModel{ErdosRenyiSpec{150, 4.0}}}) {
        const NetworkGraph a = generate({model, 1234});
        const NetworkGraph b = generate({model, 1234});
        const NetworkGraph c = generate({model, 1235});
        CHECK(a.edges == b.edges);
        CHECK(a.edges != c.edges);

        std::ostringstream sa, sb;
        write_edge_list(sa, a);
        write_edge_list(sb, b);
        CHECK(sa.str() == sb.str());
    }
}

TEST_CASE("disconnected graphs fail validation") {
    NetworkGraph g;
    g.n = 4;
    g.adj = {{1}, {0}, {3}, {2}};
    g.edges = {{0, 1}, {2, 3}};
    const ValidationReport rep = validate(g);
    CHECK_FALSE(rep.connected);
    CHECK_FALSE(rep.pass());
    CHECK(rep.detail.find("disconnected") != std::string::npos);
}

TEST_CASE("edge list round trip") {
    const NetworkGraph g = generate({BarabasiAlbertSpec{50, 6, 2}, 77});
    std::ostringstream os;
    write_edge_list(os, g, "model ba seed 77");
    CHECK(os.str().rfind("# model ba seed 77\nn 50\n", 0) == 0);

    std::istringstream is(os.str());
    const NetworkGraph back = read_edge_list(is);
    CHECK(back.n == g.n);
    CHECK(back.edges == g.edges);
    CHECK(back.adj == g.adj);

    std::istringstream bad("x 5\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(bad), InvalidParams);
}

TEST_CASE("spec serialization round trip") {
    for (const NetworkModel& model :
         {NetworkModel{CompleteSpec{64}}, NetworkModel{LatticeSpec{7, false}},
          NetworkModel{BarabasiAlbertSpec{120, 5, 3}}, NetworkModel{WattsStrogatzSpec{80, 6, 0.25}},
          NetworkModel{ErdosRenyiSpec{90, 5.5}}}) {
        const NetworkSpec original{model, 99};
        const nlohmann::json j = original;
        const NetworkSpec back = j.get<NetworkSpec>();
        CHECK(nlohmann::json(back).dump() == j.dump());
    }

    const NetworkSpec spec{WattsStrogatzSpec{100, 4, 0.1}, 99};
    const nlohmann::json j = spec;
    CHECK(j["model"] == "ws");
    CHECK(j["rewire"] == doctest::Approx(0.1));
    const NetworkSpec back = j.get<NetworkSpec>();
    CHECK(back.seed == 99);
    CHECK(std::get<WattsStrogatzSpec>(back.model).k == 4);

    const NetworkGraph g = generate(spec);
    const nlohmann::json jr = graph_to_json(spec, g);
    CHECK(jr["n"] == 100);
    CHECK(jr["edges"].size() == 200);
    CHECK(jr["spec"]["model"] == "ws");
}

TEST_CASE("bad specs are rejected") {
    CHECK_THROWS_AS(generate({BarabasiAlbertSpec{100, 6, 7}, 1}), InvalidParams);  // m > m0
    CHECK_THROWS_AS(generate({BarabasiAlbertSpec{5, 6, 2}, 1}), InvalidParams);    // m0 >= n
    CHECK_THROWS_AS(generate({WattsStrogatzSpec{100, 3, 0.1}, 1}), InvalidParams); // odd k
    CHECK_THROWS_AS(generate({WattsStrogatzSpec{100, 4, 1.5}, 1}), InvalidParams);
    CHECK_THROWS_AS(generate({CompleteSpec{2}, 1}), InvalidParams);
}
