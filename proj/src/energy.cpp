#include "genergy/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace genergy {

namespace {

void require_kind(const Spectrum& s, MatrixKind want, const char* who) {
    if (s.kind != want)
        throw std::invalid_argument(std::string(who) + ": wrong spectrum kind");
}

// Eigenvalues within 1e-10 of 0 are clamped to 0 before the square root.
double sqrt_clamped(double x) {
    if (std::abs(x) <= 1e-10) return 0.0;
    return x > 0.0 ? std::sqrt(x) : 0.0;
}

}  // namespace

double energy(const Spectrum& adjacency) {
    require_kind(adjacency, MatrixKind::Adjacency, "energy");
    double s = 0.0;
    for (double v : adjacency.values) s += std::abs(v);
    return s;
}

double laplacian_energy(const Spectrum& laplacian, int n, int m) {
    require_kind(laplacian, MatrixKind::Laplacian, "laplacian_energy");
    const double mean = 2.0 * m / n;
    double s = 0.0;
    for (double v : laplacian.values) s += std::abs(v - mean);
    return s;
}

double lel(const Spectrum& laplacian) {
    require_kind(laplacian, MatrixKind::Laplacian, "lel");
    double s = 0.0;
    for (double v : laplacian.values) s += sqrt_clamped(v);
    return s;
}

double incidence_energy(const Spectrum& signless_laplacian) {
    require_kind(signless_laplacian, MatrixKind::SignlessLaplacian,
                 "incidence_energy");
    double s = 0.0;
    for (double v : signless_laplacian.values) s += sqrt_clamped(v);
    return s;
}

double pi_sum(const DegreeSequence& d) {
    double s = 0.0;
    for (int di : d) s += std::sqrt(static_cast<double>(di));
    return s;
}

double pi_star_sum(const ConjugateDegreeSequence& dstar) {
    double s = 0.0;
    for (int di : dstar) s += std::sqrt(static_cast<double>(di));
    return s;
}

EnergyProfile profile(const Graph& g) {
    EnergyProfile p;
    p.n = g.order();
    p.m = g.edge_count();

    const Spectrum adj = graph_spectrum(g, MatrixKind::Adjacency);
    const Spectrum lap = graph_spectrum(g, MatrixKind::Laplacian);
    const Spectrum slap = graph_spectrum(g, MatrixKind::SignlessLaplacian);
    const DegreeSequence d = degree_sequence(g);
    const ConjugateDegreeSequence dstar = conjugate_degree_sequence(d);

    p.energy = energy(adj);
    p.laplacian_energy = laplacian_energy(lap, p.n, p.m);
    p.lel = lel(lap);
    p.incidence_energy = incidence_energy(slap);
    p.pi = pi_sum(d);
    p.pi_star = pi_star_sum(dstar);
    return p;
}

}  // namespace genergy
