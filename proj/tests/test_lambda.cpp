#include "hered/extremal.hpp"
#include "hered/lambda.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace hered;

namespace {

const std::vector<Graph> &small_graphs() {
    static const std::vector<Graph> all = [] {
        std::vector<Graph> out;
        for (int n = 1; n <= 6; ++n) {
            auto level = enumerate_property(GraphFamily{}, n);
            out.insert(out.end(), level.begin(), level.end());
        }
        return out;
    }();
    return all;
}

double clique_closed_form(int n, double alpha) { return (n - 1) * std::pow(static_cast<double>(n), 1.0 - 2.0 / alpha); }

// Crude independent maximiser: random nonnegative starts followed by
// plain fixed-step gradient ascent on the alpha-sphere.
double random_search(const Graph &g, double alpha, int starts, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int n = g.order();
    double best = 0.0;
    for (int s = 0; s < starts; ++s) {
        std::vector<double> x(n);
        for (double &v : x) v = u(rng);
        for (int it = 0; it < 400; ++it) {
            std::vector<double> grad(n, 0.0);
            for (auto [a, b] : g.edges()) {
                grad[a] += x[b];
                grad[b] += x[a];
            }
            for (int i = 0; i < n; ++i) x[i] = std::max(0.0, x[i] + 0.05 * grad[i]);
            double norm = 0.0;
            for (double v : x) norm += std::pow(v, alpha);
            norm = std::pow(norm, 1.0 / alpha);
            for (double &v : x) v /= norm;
        }
        best = std::max(best, oracle::objective(g, x, alpha));
    }
    return best;
}

}  // namespace

TEST(Lambda, K2AtAlphaTwoIsOne) {
    auto r = lambda_alpha(complete_graph(2), 2.0);
    EXPECT_NEAR(r.value, 1.0, 1e-12);
    EXPECT_NEAR(oracle::largest_eigenvalue(complete_graph(2)), 1.0, 1e-12);
}

TEST(Lambda, CliqueClosedForm) {
    for (int n = 2; n <= 6; ++n)
        for (double a : {1.25, 1.5, 2.0, 3.0}) {
            Graph k = complete_graph(n);
            // the uniform vector is a symmetric KKT point: A x = f x^(alpha-1)
            std::vector<double> x(n, std::pow(static_cast<double>(n), -1.0 / a));
            double f = oracle::objective(k, x, a);
            EXPECT_NEAR(f, clique_closed_form(n, a), 1e-12);
            for (int i = 0; i < n; ++i) EXPECT_NEAR((n - 1) * x[0], f * std::pow(x[i], a - 1.0), 1e-12);
            EXPECT_NEAR(lambda_alpha(k, a).value, clique_closed_form(n, a), 1e-8) << "n=" << n << " a=" << a;
        }
}

TEST(Lambda, CliqueClosedFormNotBeatenByRandomSearch) {
    for (int n = 2; n <= 4; ++n)
        for (double a : {1.25, 1.5, 2.0, 3.0}) {
            double found = random_search(complete_graph(n), a, 1000, 100 + n);
            EXPECT_LE(found, clique_closed_form(n, a) + 1e-9);
            EXPECT_GE(found, clique_closed_form(n, a) - 1e-3);
        }
}

TEST(Lambda, EdgelessIsZero) {
    for (double a : {1.0, 1.5, 2.0, 4.0}) {
        auto r = lambda_alpha(Graph(5), a);
        EXPECT_EQ(r.value, 0.0);
        EXPECT_TRUE(r.converged);
    }
}

TEST(Lambda, CycleAtAlphaTwo) {
    EXPECT_NEAR(lambda_alpha(cycle_graph(5), 2.0).value, 2.0, 1e-9);
    EXPECT_NEAR(oracle::largest_eigenvalue(cycle_graph(5)), 2.0, 1e-12);
}

TEST(LambdaOne, Examples) {
    auto k3 = lambda_one(complete_graph(3));
    ASSERT_TRUE(k3.exact);
    EXPECT_EQ(*k3.exact, Rational(2, 3));
    for (double v : k3.vector) EXPECT_DOUBLE_EQ(v, 1.0 / 3.0);
    EXPECT_EQ(*lambda_one(cycle_graph(5)).exact, Rational(1, 2));
    Graph t39 = turan_graph(3, 9);
    EXPECT_EQ(oracle::clique_number(t39), 3);
    EXPECT_EQ(*lambda_one(t39).exact, Rational(2, 3));
    EXPECT_EQ(*lambda_one(Graph(4)).exact, Rational(0));
    EXPECT_EQ(*lambda_alpha(complete_graph(4), 1.0).exact, Rational(3, 4));
}

TEST(LambdaOne, EqualsOneMinusInverseCliqueNumber) {
    for (const auto &g : small_graphs()) {
        auto r = lambda_one(g);
        int w = oracle::clique_number(g);
        EXPECT_EQ(*r.exact, Rational(1) - Rational(1, w));
        EXPECT_NEAR(r.value, r.exact->to_double(), 1e-12);
    }
}

TEST(LowerBound, Examples) {
    EXPECT_DOUBLE_EQ(lambda_lower_bound(complete_graph(2), 2.0), 1.0);
    EXPECT_DOUBLE_EQ(lambda_lower_bound(cycle_graph(5), 2.0), 2.0);
    Graph p3 = path_graph(3);
    EXPECT_NEAR(lambda_lower_bound(p3, 2.0), 4.0 / 3.0, 1e-15);
    EXPECT_NEAR(oracle::largest_eigenvalue(p3), std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(lambda_alpha(p3, 2.0).value, std::sqrt(2.0), 1e-9);
}

TEST(SpectralRadius, Examples) {
    EXPECT_NEAR(spectral_radius(complete_graph(4)), 3.0, 1e-9);
    EXPECT_NEAR(spectral_radius(cycle_graph(6)), 2.0, 1e-9);
    Graph star = star_graph(4);
    // characteristic polynomial x^3 (x^2 - 4) vanishes at 2
    Eigen::MatrixXd m = 2.0 * Eigen::MatrixXd::Identity(5, 5) - oracle::adjacency(star);
    EXPECT_NEAR(m.determinant(), 0.0, 1e-9);
    EXPECT_NEAR(oracle::largest_eigenvalue(star), 2.0, 1e-12);
    EXPECT_NEAR(spectral_radius(star), 2.0, 1e-9);
    EXPECT_EQ(spectral_radius(Graph(3)), 0.0);
}

TEST(SpectralRadius, MatchesEigensolver) {
    for (const auto &g : small_graphs()) EXPECT_NEAR(spectral_radius(g), oracle::largest_eigenvalue(g), 1e-8);
}

TEST(Lambda, ResultInvariants) {
    for (double a : {1.25, 1.5, 2.0, 3.0, 10.0})
        for (const auto &g : small_graphs()) {
            auto r = lambda_alpha(g, a);
            ASSERT_EQ(static_cast<int>(r.vector.size()), g.order());
            double norm = 0.0;
            for (double v : r.vector) {
                EXPECT_GE(v, 0.0);
                norm += std::pow(v, a);
            }
            EXPECT_NEAR(norm, 1.0, 1e-12);
            double twice_edges = 0.0;
            for (auto [u, v] : g.edges()) twice_edges += 2.0 * r.vector[u] * r.vector[v];
            EXPECT_NEAR(r.value, twice_edges, 1e-10);
            if (r.converged) EXPECT_LE(r.kkt_residual, 1e-8);
            EXPECT_TRUE(r.converged) << to_graph6(g) << " a=" << a;
        }
}

TEST(Lambda, AlphaTwoMatchesEigensolver) {
    for (const auto &g : small_graphs())
        EXPECT_NEAR(lambda_alpha(g, 2.0).value, oracle::largest_eigenvalue(g), 1e-6) << to_graph6(g);
}

TEST(Lambda, ContinuityNearAlphaOne) {
    for (const auto &g : small_graphs())
        EXPECT_NEAR(lambda_alpha(g, 1.0 + 1e-4).value, lambda_one(g).value, 1e-2) << to_graph6(g);
}

TEST(Lambda, MonotoneUnderEdgeAddition) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 150; ++t) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = oracle::random_graph(n, 0.4, rng);
        Graph h = complement(g);
        if (h.edge_count() == 0) continue;
        auto missing = h.edges();
        auto [u, v] = missing[rng() % missing.size()];
        for (double a : {1.25, 2.0, 3.0})
            EXPECT_GE(lambda_alpha(g.with_edge(u, v), a).value, lambda_alpha(g, a).value - 1e-9);
    }
}

TEST(Lambda, NeverBelowUniformVector) {
    for (double a : {1.0, 1.25, 1.5, 2.0, 3.0, 10.0})
        for (const auto &g : small_graphs()) EXPECT_GE(lambda_alpha(g, a).value, lambda_lower_bound(g, a) - 1e-9);
}

TEST(Lambda, GradientVanishesOnSupport) {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 60; ++t) {
        Graph g = oracle::random_graph(3 + static_cast<int>(rng() % 5), 0.6, rng);
        if (g.edge_count() == 0) continue;
        for (double a : {1.5, 2.0, 3.0}) {
            auto r = lambda_alpha(g, a);
            const auto &x = r.vector;
            double proj2 = 0.0;
            for (int i = 0; i < g.order(); ++i) {
                if (x[i] <= 1e-6) continue;
                const double h = 1e-6;
                auto xp = x, xm = x;
                xp[i] += h;
                xm[i] -= h;
                double fd = (oracle::objective(g, xp, a) - oracle::objective(g, xm, a)) / (2 * h);
                double ax = 0.0;
                for_each_vertex(g.neighbors(i), [&](int j) { ax += x[j]; });
                double analytic = 2.0 * ax - 2.0 * r.value * std::pow(x[i], a - 1.0);
                EXPECT_NEAR(fd, analytic, 1e-6);
                proj2 += analytic * analytic;
            }
            EXPECT_LE(std::sqrt(proj2), 1e-8 * 10) << to_graph6(g) << " a=" << a;
            EXPECT_LE(r.kkt_residual, 1e-8);
        }
    }
}

TEST(Lambda, RegularGraphsAndUniformVector) {
    struct Case {
        Graph g;
        int degree;
        bool exact_at_all_alpha;
    };
    std::vector<Case> cases = {{complete_graph(5), 4, true},
                               {complete_multipartite({2, 2, 2}), 4, true},
                               {complete_multipartite({3, 3}), 3, true},
                               {cycle_graph(6), 2, false},
                               {cycle_graph(7), 2, false}};
    for (const auto &c : cases)
        for (double a : {1.25, 1.5, 2.0, 3.0}) {
            const double n = c.g.order();
            double uniform = c.degree * std::pow(n, 1.0 - 2.0 / a);
            double value = lambda_alpha(c.g, a).value;
            EXPECT_GE(value, uniform - 1e-9);
            if (c.exact_at_all_alpha || a == 2.0) EXPECT_NEAR(value, uniform, 1e-8) << to_graph6(c.g) << " a=" << a;
        }
}

TEST(Lambda, DisconnectedComponentsCombine) {
    Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    for (double a : {1.5, 2.0})
        EXPECT_NEAR(lambda_alpha(two_triangles, a).value, clique_closed_form(3, a), 1e-8);
    // above 2 the mass splits evenly, which is the uniform vector on all six vertices
    for (double a : {3.0, 5.0})
        EXPECT_NEAR(lambda_alpha(two_triangles, a).value, 12.0 * std::pow(6.0, -2.0 / a), 1e-8);
    // an isolated vertex never carries weight
    Graph k3_plus = complete_graph(3).with_vertex(0);
    auto r = lambda_alpha(k3_plus, 1.5);
    EXPECT_EQ(r.vector[3], 0.0);
    EXPECT_NEAR(r.value, clique_closed_form(3, 1.5), 1e-8);
}

TEST(Lambda, DeterministicForFixedSeed) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        Graph g = oracle::random_graph(7, 0.5, rng);
        auto a = lambda_alpha(g, 1.3), b = lambda_alpha(g, 1.3);
        EXPECT_EQ(a.value, b.value);
        EXPECT_EQ(a.vector, b.vector);
    }
}

TEST(Lambda, RejectsBadAlphaAndNullGraph) {
    EXPECT_THROW(lambda_alpha(complete_graph(3), 0.5), std::invalid_argument);
    EXPECT_THROW(lambda_alpha(complete_graph(3), std::nan("")), std::invalid_argument);
    EXPECT_THROW(lambda_alpha(complete_graph(3), INFINITY), std::invalid_argument);
    EXPECT_THROW(lambda_lower_bound(Graph(0), 2.0), std::invalid_argument);
    EXPECT_THROW(lambda_lower_bound(complete_graph(2), 0.99), std::invalid_argument);
    EXPECT_EQ(lambda_alpha(Graph(0), 2.0).value, 0.0);
}

TEST(Lambda, AlphaNearTwoSnapsToTwo) {
    Graph g = path_graph(4);
    EXPECT_EQ(lambda_alpha(g, 2.0 + 1e-10).alpha, 2.0);
    EXPECT_EQ(lambda_alpha(g, 1.0 + 1e-10).alpha, 1.0);
    EXPECT_TRUE(lambda_alpha(g, 1.0 + 1e-10).exact.has_value());
}
