#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "genergy/spectral.hpp"

using namespace genergy;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<double> sorted_desc(std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

void check_close(const std::vector<double>& got,
                 const std::vector<double>& want, double tol) {
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i)
        CHECK(std::abs(got[i] - want[i]) <= tol);
}

Graph random_graph(std::mt19937& rng, int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % 2) g.add_edge(u, v);
    return g;
}
}  // namespace

TEST_CASE("matrix construction") {
    const SymmetricMatrix a = adjacency_matrix(Graph::complete(2));
    CHECK(a.at(0, 0) == 0.0);
    CHECK(a.at(0, 1) == 1.0);

    const SymmetricMatrix l = laplacian_matrix(Graph::complete(2));
    CHECK(l.at(0, 0) == 1.0);
    CHECK(l.at(0, 1) == -1.0);

    const SymmetricMatrix q = signless_laplacian_matrix(Graph::complete(2));
    CHECK(q.at(0, 0) == 1.0);
    CHECK(q.at(0, 1) == 1.0);

    const SymmetricMatrix p3 = adjacency_matrix(Graph::path(3));
    CHECK(p3.at(0, 1) == 1.0);
    CHECK(p3.at(1, 2) == 1.0);
    CHECK(p3.at(0, 2) == 0.0);
}

TEST_CASE("small exact spectra") {
    check_close(graph_spectrum(Graph::path(3), MatrixKind::Adjacency).values,
                {std::sqrt(2.0), 0.0, -std::sqrt(2.0)}, 1e-12);
    check_close(graph_spectrum(Graph::complete(5), MatrixKind::Adjacency).values,
                {4.0, -1.0, -1.0, -1.0, -1.0}, 1e-12);
    check_close(graph_spectrum(Graph(1), MatrixKind::Laplacian).values, {0.0},
                1e-15);
}

TEST_CASE("trace identities on random graphs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 10);
        const Graph g = random_graph(rng, n);
        const double two_m = 2.0 * g.edge_count();

        double sum_a = 0.0, sum_a2 = 0.0;
        for (double v : graph_spectrum(g, MatrixKind::Adjacency).values) {
            sum_a += v;
            sum_a2 += v * v;
        }
        CHECK(std::abs(sum_a) <= 1e-9);
        CHECK(std::abs(sum_a2 - two_m) <= 1e-9);

        const auto mu = graph_spectrum(g, MatrixKind::Laplacian).values;
        double sum_l = 0.0;
        for (double v : mu) {
            CHECK(v >= -1e-9);
            sum_l += v;
        }
        CHECK(std::abs(sum_l - two_m) <= 1e-9);
        CHECK(std::abs(mu.back()) <= 1e-9);

        double sum_q = 0.0;
        for (double v : graph_spectrum(g, MatrixKind::SignlessLaplacian).values) {
            CHECK(v >= -1e-9);
            sum_q += v;
        }
        CHECK(std::abs(sum_q - two_m) <= 1e-9);
    }
}

TEST_CASE("bipartite graphs: L and Q spectra agree") {
    std::vector<Graph> graphs;
    for (int n = 2; n <= 12; ++n) graphs.push_back(Graph::path(n));
    for (int n = 4; n <= 12; n += 2) graphs.push_back(Graph::cycle(n));
    for (const Graph& g : graphs) {
        const auto mu = graph_spectrum(g, MatrixKind::Laplacian).values;
        const auto q = graph_spectrum(g, MatrixKind::SignlessLaplacian).values;
        check_close(mu, q, 1e-9);
    }
}

TEST_CASE("closed-form eigenvalue families for n = 2..50") {
    for (int n = 2; n <= 50; ++n) {
        std::vector<double> want;
        for (int j = 1; j <= n; ++j) want.push_back(2.0 * std::cos(kPi * j / (n + 1)));
        check_close(graph_spectrum(Graph::path(n), MatrixKind::Adjacency).values,
                    sorted_desc(want), 1e-9);

        want.clear();
        for (int j = 1; j <= n; ++j) want.push_back(2.0 + 2.0 * std::cos(kPi * j / n));
        check_close(
            graph_spectrum(Graph::path(n), MatrixKind::SignlessLaplacian).values,
            sorted_desc(want), 1e-9);

        if (n < 3) continue;
        want.clear();
        for (int j = 0; j < n; ++j) want.push_back(2.0 * std::cos(2.0 * kPi * j / n));
        check_close(graph_spectrum(Graph::cycle(n), MatrixKind::Adjacency).values,
                    sorted_desc(want), 1e-9);

        want.clear();
        for (int j = 0; j < n; ++j) want.push_back(2.0 - 2.0 * std::cos(2.0 * kPi * j / n));
        check_close(graph_spectrum(Graph::cycle(n), MatrixKind::Laplacian).values,
                    sorted_desc(want), 1e-9);

        want.clear();
        for (int j = 0; j < n; ++j) want.push_back(2.0 + 2.0 * std::cos(2.0 * kPi * j / n));
        check_close(
            graph_spectrum(Graph::cycle(n), MatrixKind::SignlessLaplacian).values,
            sorted_desc(want), 1e-9);
    }
}
