#include "doctest.h"

#include <cmath>

#include "vnge/generators.hpp"
#include "test_util.hpp"

using namespace vnge;
using namespace vnge::testutil;

namespace {

std::size_t degree(const Graph& g, NodeId v) {
    std::size_t d = 0;
    for (const auto& [key, w] : g.edges()) {
        auto [a, b] = edge_endpoints(key);
        if (a == v || b == v)
            ++d;
    }
    return d;
}

std::size_t max_degree(const Graph& g) {
    std::unordered_map<NodeId, std::size_t> deg;
    for (const auto& [key, w] : g.edges()) {
        auto [a, b] = edge_endpoints(key);
        ++deg[a];
        ++deg[b];
    }
    std::size_t best = 0;
    for (const auto& [v, d] : deg)
        best = std::max(best, d);
    return best;
}

} // namespace

TEST_CASE("same seed reproduces the graph bit for bit") {
    for (Model model : {Model::er, Model::ba, Model::ws}) {
        ModelSpec spec{model, 200, 6.0, 0.3, 424242};
        const Graph a = generate(spec);
        const Graph b = generate(spec);
        CHECK(a == b);
        spec.seed = 424243;
        const Graph c = generate(spec);
        CHECK_FALSE(a == c);
    }
}

TEST_CASE("er model") {
    SUBCASE("p = 1 gives the complete graph") {
        const Graph g = generate({Model::er, 100, 99.0, 0.0, 5});
        CHECK(g.edge_count() == 4950);
        CHECK(g.node_count() == 100);
    }
    SUBCASE("mean degree concentrates near the target") {
        double mean = 0.0;
        const std::uint64_t seeds = 10;
        for (std::uint64_t s = 0; s < seeds; ++s) {
            const Graph g = generate({Model::er, 2000, 50.0, 0.0, 100 + s});
            mean += 2.0 * static_cast<double>(g.edge_count()) / 2000.0;
        }
        mean /= static_cast<double>(seeds);
        CHECK(std::abs(mean - 50.0) / 50.0 < 0.05);
    }
    SUBCASE("edge count within 4 binomial standard deviations") {
        const std::uint32_t n = 500;
        const double p = 10.0 / 499.0;
        const double pairs = 0.5 * n * (n - 1);
        const double sigma = std::sqrt(pairs * p * (1.0 - p));
        for (std::uint64_t s = 0; s < 5; ++s) {
            const Graph g = generate({Model::er, n, 10.0, 0.0, 200 + s});
            CHECK(std::abs(static_cast<double>(g.edge_count()) - pairs * p) < 4.0 * sigma);
        }
    }
}

TEST_CASE("ws model") {
    SUBCASE("no rewiring leaves the exact ring lattice") {
        const Graph g = generate({Model::ws, 1000, 6.0, 0.0, 1});
        CHECK(g.edge_count() == 3000);
        for (NodeId v : {NodeId{0}, NodeId{17}, NodeId{999}})
            CHECK(degree(g, v) == 6);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(0, 997)); // wraps around
    }
    SUBCASE("rewiring preserves the edge count") {
        const Graph g = generate({Model::ws, 400, 8.0, 0.5, 6});
        CHECK(g.edge_count() == 1600);
    }
    SUBCASE("odd lattice degree is rejected") {
        CHECK_THROWS_AS(generate({Model::ws, 100, 5.0, 0.1, 1}), InvalidSpec);
    }
}

TEST_CASE("ba model grows heavy tails") {
    std::size_t small = 0, large = 0;
    for (std::uint64_t s = 0; s < 3; ++s) {
        small += max_degree(generate({Model::ba, 500, 10.0, 0.0, 300 + s}));
        large += max_degree(generate({Model::ba, 2000, 10.0, 0.0, 300 + s}));
    }
    CHECK(large > small);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(generate({Model::er, 2, 1.0, 0.0, 1}), InvalidSpec);
    CHECK_THROWS_AS(generate({Model::er, 100, 0.5, 0.0, 1}), InvalidSpec);
    CHECK_THROWS_AS(generate({Model::er, 100, 100.0, 0.0, 1}), InvalidSpec);
    CHECK_THROWS_AS(generate({Model::ws, 100, 6.0, 1.5, 1}), InvalidSpec);
}

TEST_CASE("dos injection") {
    SUBCASE("x = 100 turns the target into a full hub") {
        const Graph g = generate({Model::er, 50, 2.0, 0.0, 9});
        const DosInjection inj = inject_dos(g, 100.0, 31);
        CHECK(degree(inj.graph, inj.target) == 49);
    }
    SUBCASE("tiny x still adds at least one edge") {
        Graph g;
        for (NodeId v = 0; v < 20; ++v)
            g.add_node(v);
        g.add_edge(0, 1, 1.0);
        const DosInjection inj = inject_dos(g, 0.0001, 32);
        CHECK(inj.edges_added >= 1);
    }
    SUBCASE("attacker count bookkeeping at x = 10 on n = 500") {
        const Graph g = generate({Model::er, 500, 10.0, 0.0, 33});
        const DosInjection inj = inject_dos(g, 10.0, 34);
        // 50 attackers selected; added edges = 50 minus pre-existing ones.
        CHECK(inj.edges_added <= 50);
        CHECK(inj.edges_added >= 30);
        CHECK(inj.graph.edge_count() == g.edge_count() + inj.edges_added);
        CHECK(degree(inj.graph, inj.target) == degree(g, inj.target) + inj.edges_added);
    }
    SUBCASE("same seed, same injection") {
        const Graph g = generate({Model::er, 100, 4.0, 0.0, 35});
        const DosInjection a = inject_dos(g, 5.0, 77);
        const DosInjection b = inject_dos(g, 5.0, 77);
        CHECK(a.target == b.target);
        CHECK(a.graph == b.graph);
    }
    SUBCASE("x outside (0, 100] is rejected") {
        const Graph g = complete_graph(5);
        CHECK_THROWS_AS(inject_dos(g, 0.0, 1), InvalidSpec);
        CHECK_THROWS_AS(inject_dos(g, 101.0, 1), InvalidSpec);
    }
}
