#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "genergy/energy.hpp"

using namespace genergy;

namespace {
constexpr double kPi = std::numbers::pi;
double cot(double x) { return std::cos(x) / std::sin(x); }
}  // namespace

TEST_CASE("adjacency energy") {
    CHECK(energy(graph_spectrum(Graph::complete(5), MatrixKind::Adjacency)) ==
          doctest::Approx(8.0).epsilon(1e-10));
    CHECK(energy(graph_spectrum(Graph(1), MatrixKind::Adjacency)) ==
          doctest::Approx(0.0));
    CHECK(energy(graph_spectrum(Graph::path(4), MatrixKind::Adjacency)) ==
          doctest::Approx(2.0 * std::sqrt(5.0)).epsilon(1e-10));
}

TEST_CASE("Laplacian energy") {
    CHECK(laplacian_energy(graph_spectrum(Graph::complete(2), MatrixKind::Laplacian),
                           2, 1) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(laplacian_energy(graph_spectrum(Graph(1), MatrixKind::Laplacian), 1, 0) ==
          doctest::Approx(0.0));
    CHECK(laplacian_energy(graph_spectrum(Graph::cycle(4), MatrixKind::Laplacian),
                           4, 4) == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("LEL") {
    CHECK(lel(graph_spectrum(Graph::complete(2), MatrixKind::Laplacian)) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(lel(graph_spectrum(Graph::cycle(4), MatrixKind::Laplacian)) ==
          doctest::Approx(2.0 * cot(kPi / 8.0)).epsilon(1e-10));
    CHECK(lel(graph_spectrum(Graph(1), MatrixKind::Laplacian)) ==
          doctest::Approx(0.0));
}

TEST_CASE("incidence energy") {
    CHECK(incidence_energy(
              graph_spectrum(Graph::path(2), MatrixKind::SignlessLaplacian)) ==
          doctest::Approx(-1.0 + cot(kPi / 8.0)).epsilon(1e-10));
    CHECK(incidence_energy(
              graph_spectrum(Graph(1), MatrixKind::SignlessLaplacian)) ==
          doctest::Approx(0.0));
    // odd cycle: IE = 2csc(pi/2n)
    CHECK(incidence_energy(
              graph_spectrum(Graph::cycle(5), MatrixKind::SignlessLaplacian)) ==
          doctest::Approx(2.0 / std::sin(kPi / 10.0)).epsilon(1e-10));
}

TEST_CASE("pi and pi*") {
    CHECK(pi_sum(degree_sequence(Graph::path(5))) ==
          doctest::Approx(2.0 + 3.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(pi_star_sum(conjugate_degree_sequence(
              degree_sequence(Graph::cycle(9)))) == doctest::Approx(6.0));
    CHECK(pi_star_sum(conjugate_degree_sequence(
              degree_sequence(Graph::complete(4)))) == doctest::Approx(6.0));
}

TEST_CASE("wrong spectrum kind is rejected") {
    const Spectrum lap = graph_spectrum(Graph::path(3), MatrixKind::Laplacian);
    CHECK_THROWS_AS(energy(lap), std::invalid_argument);
    const Spectrum adj = graph_spectrum(Graph::path(3), MatrixKind::Adjacency);
    CHECK_THROWS_AS(lel(adj), std::invalid_argument);
    CHECK_THROWS_AS(incidence_energy(adj), std::invalid_argument);
    CHECK_THROWS_AS(laplacian_energy(adj, 3, 2), std::invalid_argument);
}

TEST_CASE("profiles of small graphs") {
    const EnergyProfile k1 = profile(Graph(1));
    CHECK(k1.energy == doctest::Approx(0.0));
    CHECK(k1.laplacian_energy == doctest::Approx(0.0));
    CHECK(k1.lel == doctest::Approx(0.0));
    CHECK(k1.incidence_energy == doctest::Approx(0.0));
    CHECK(k1.pi == doctest::Approx(0.0));
    CHECK(k1.pi_star == doctest::Approx(0.0));

    const EnergyProfile k2 = profile(Graph::complete(2));
    CHECK(k2.energy == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(k2.laplacian_energy == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(k2.lel == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(k2.incidence_energy == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(k2.pi == doctest::Approx(2.0));
    CHECK(k2.pi_star == doctest::Approx(std::sqrt(2.0)));

    const EnergyProfile c5 = profile(Graph::cycle(5));
    CHECK(c5.energy == doctest::Approx(2.0 / std::sin(kPi / 10.0)).epsilon(1e-10));
    CHECK(c5.energy == doctest::Approx(c5.incidence_energy).epsilon(1e-10));
}

TEST_CASE("threshold graphs satisfy pi* = LEL") {
    std::vector<Graph> thresholds;
    thresholds.push_back(Graph::complete(5));
    Graph star(6);
    for (int v = 1; v < 6; ++v) star.add_edge(0, v);
    thresholds.push_back(star);
    for (const Graph& g : thresholds) {
        REQUIRE(is_threshold(g));
        const EnergyProfile p = profile(g);
        CHECK(std::abs(p.pi_star - p.lel) <= 1e-9);
    }
}

TEST_CASE("profile is invariant under relabeling") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);

        const EnergyProfile a = profile(g);
        const EnergyProfile b = profile(g.relabeled(perm));
        CHECK(std::abs(a.energy - b.energy) <= 1e-9);
        CHECK(std::abs(a.laplacian_energy - b.laplacian_energy) <= 1e-9);
        CHECK(std::abs(a.lel - b.lel) <= 1e-9);
        CHECK(std::abs(a.incidence_energy - b.incidence_energy) <= 1e-9);
        CHECK(std::abs(a.pi - b.pi) <= 1e-9);
        CHECK(std::abs(a.pi_star - b.pi_star) <= 1e-9);
    }
}
