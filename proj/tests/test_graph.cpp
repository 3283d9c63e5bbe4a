#include "hered/graph.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hered;

namespace {

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

TEST(Graph, CompleteGraphEdgeCounts) {
    EXPECT_EQ(complete_graph(0).order(), 0);
    EXPECT_EQ(complete_graph(0).edge_count(), 0);
    EXPECT_EQ(complete_graph(3).edge_count(), 3);
    EXPECT_EQ(complete_graph(5).edge_count(), 10);
    EXPECT_TRUE(is_clique(complete_graph(5)));
}

TEST(Graph, CompleteMultipartite) {
    Graph c4 = complete_multipartite({2, 2});
    EXPECT_EQ(c4.edge_count(), 4);
    EXPECT_TRUE(oracle::isomorphic(c4, cycle_graph(4)));
    EXPECT_TRUE(oracle::isomorphic(complete_multipartite({1, 1, 1}), complete_graph(3)));
    Graph e3 = complete_multipartite({3});
    EXPECT_EQ(e3.order(), 3);
    EXPECT_EQ(e3.edge_count(), 0);
}

TEST(Graph, TuranGraphExamples) {
    Graph t25 = turan_graph(2, 5);
    EXPECT_EQ(t25.edge_count(), 6);
    EXPECT_TRUE(oracle::isomorphic(t25, complete_multipartite({2, 3})));
    Graph t36 = turan_graph(3, 6);
    EXPECT_EQ(t36.edge_count(), 12);
    EXPECT_TRUE(oracle::isomorphic(t36, complete_multipartite({2, 2, 2})));
    Graph t14 = turan_graph(1, 4);
    EXPECT_EQ(t14.order(), 4);
    EXPECT_EQ(t14.edge_count(), 0);
}

TEST(Graph, TuranEdgeFormulasAgree) {
    for (int r = 1; r <= 8; ++r)
        for (int n = 0; n <= 20; ++n) {
            // C(n,2) - sum C(n_i,2) over the balanced parts
            const int q = n / r, s = n % r;
            std::int64_t by_parts = choose2(n) - s * choose2(q + 1) - (r - s) * choose2(q);
            // (1 - 1/r) n^2 / 2 minus the rounding correction s(r-s)/(2r)
            std::int64_t numer = static_cast<std::int64_t>(r - 1) * n * n - static_cast<std::int64_t>(s) * (r - s);
            ASSERT_EQ(numer % (2 * r), 0);
            EXPECT_EQ(turan_graph(r, n).edge_count(), by_parts) << "r=" << r << " n=" << n;
            EXPECT_EQ(by_parts, numer / (2 * r)) << "r=" << r << " n=" << n;
        }
}

TEST(Graph, TuranCliqueNumberIsMinOfRAndN) {
    for (int r = 1; r <= 6; ++r)
        for (int n = 0; n <= 12; ++n) EXPECT_EQ(clique_number(turan_graph(r, n)), std::min(r, n));
}

TEST(Graph, TuranRejectsZeroParts) {
    EXPECT_THROW(turan_graph(0, 3), GraphError);
    EXPECT_EQ(turan_graph(0, 0).order(), 0);
}

TEST(Graph, CliqueNumberExamples) {
    EXPECT_EQ(clique_number(cycle_graph(5)), 2);
    EXPECT_EQ(clique_number(complete_graph(6)), 6);
    Graph t39 = turan_graph(3, 9);
    EXPECT_EQ(clique_number(t39), 3);
    EXPECT_EQ(oracle::clique_number(t39), 3);
    EXPECT_EQ(clique_number(Graph(0)), 0);
    EXPECT_EQ(clique_number(Graph(4)), 1);
}

TEST(Graph, CliqueNumberMatchesSubsetOracle) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        double p = 0.2 + 0.6 * (rng() % 100) / 100.0;
        Graph g = oracle::random_graph(n, p, rng);
        VertexSet best = maximum_clique(g);
        EXPECT_TRUE(is_clique(g, best));
        EXPECT_EQ(std::popcount(best), oracle::clique_number(g));
    }
}

TEST(Graph, MaximalCliquesAreMaximalAndComplete) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 10), 0.5, rng);
        std::set<VertexSet> seen;
        for_each_maximal_clique(g, [&](VertexSet c) {
            EXPECT_TRUE(is_clique(g, c));
            for (int v = 0; v < g.order(); ++v)
                if (!(c & bit(v))) EXPECT_FALSE(is_clique(g, c | bit(v)));
            EXPECT_TRUE(seen.insert(c).second);
            return true;
        });
        // every vertex sits in some maximal clique
        VertexSet covered = 0;
        for (VertexSet c : seen) covered |= c;
        EXPECT_EQ(covered, g.vertices());
    }
}

TEST(Graph, ComplementAndComponents) {
    EXPECT_TRUE(oracle::isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
    EXPECT_TRUE(is_clique(complete_graph(4)));
    EXPECT_FALSE(is_clique(cycle_graph(4)));
    // vertices {0,1} and {2,3} form the two parts of K_{2,2}
    auto comps = connected_components(complement(complete_multipartite({2, 2})));
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0], bit(0) | bit(1));
    EXPECT_EQ(comps[1], bit(2) | bit(3));
}

TEST(Graph, AdjacencyIsSymmetricWithoutLoops) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 20), 0.4, rng);
        int ones = 0;
        for (int u = 0; u < g.order(); ++u) {
            EXPECT_FALSE(g.adjacent(u, u));
            for (int v = 0; v < g.order(); ++v) {
                EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
                ones += g.adjacent(u, v);
            }
        }
        EXPECT_EQ(g.edge_count() * 2, ones);
    }
}

TEST(Graph, EditsReturnNewValues) {
    Graph g = path_graph(3);
    Graph h = g.with_edge(0, 2);
    EXPECT_EQ(g.edge_count(), 2);
    EXPECT_EQ(h.edge_count(), 3);
    EXPECT_EQ(h.without_edge(0, 2), g);
    EXPECT_EQ(g.with_edge_toggled(0, 1).edge_count(), 1);
    Graph k = g.with_vertex(bit(0) | bit(2));
    EXPECT_EQ(k.order(), 4);
    EXPECT_TRUE(oracle::isomorphic(k, cycle_graph(4)));
    EXPECT_EQ(k.without_vertex(3), g);
}

TEST(Graph, RejectsMalformedInput) {
    EXPECT_THROW(Graph(kMaxVertices + 1), GraphError);
    EXPECT_THROW(Graph(-1), GraphError);
    EXPECT_NO_THROW(Graph(kMaxVertices));
    EXPECT_THROW(Graph(3).with_edge(1, 1), GraphError);
    EXPECT_THROW(Graph(3).with_edge(0, 3), GraphError);
    std::vector<VertexSet> asym = {bit(1), 0};
    EXPECT_THROW(Graph::from_rows(2, asym), GraphError);
    std::vector<VertexSet> loop = {bit(0), 0};
    EXPECT_THROW(Graph::from_rows(2, loop), GraphError);
    Graph full(kMaxVertices);
    EXPECT_THROW(full.with_vertex(0), GraphError);
}

TEST(Graph, MultipartitePartCount) {
    EXPECT_EQ(multipartite_part_count(complete_graph(3)), 3);
    EXPECT_EQ(multipartite_part_count(cycle_graph(4)), 2);
    EXPECT_EQ(multipartite_part_count(Graph(3)), 1);
    EXPECT_EQ(multipartite_part_count(cycle_graph(5)), 0);
    EXPECT_EQ(multipartite_part_count(path_graph(4)), 0);
    EXPECT_EQ(multipartite_part_count(complete_multipartite({3, 3})), 2);
}

TEST(Graph, PermutedIsIsomorphic) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracle::random_graph(6, 0.5, rng);
        auto p = oracle::random_permutation(6, rng);
        EXPECT_TRUE(oracle::isomorphic(g, g.permuted(p)));
        EXPECT_TRUE(oracle::isomorphic(g, g.relabelled(p)));
    }
}
