#pragma once

#include "genergy/graph.hpp"
#include "genergy/spectral.hpp"

namespace genergy {

struct EnergyProfile {
    int n = 0;
    int m = 0;
    double energy = 0.0;            // E  = sum |lambda_i|
    double laplacian_energy = 0.0;  // LE = sum |mu_i - 2m/n|
    double lel = 0.0;               // sum sqrt(mu_i)
    double incidence_energy = 0.0;  // IE = sum sqrt(q_i)
    double pi = 0.0;                // sum sqrt(d_i)
    double pi_star = 0.0;           // sum sqrt(d_i*)
};

double energy(const Spectrum& adjacency);
double laplacian_energy(const Spectrum& laplacian, int n, int m);
double lel(const Spectrum& laplacian);
double incidence_energy(const Spectrum& signless_laplacian);
double pi_sum(const DegreeSequence& d);
double pi_star_sum(const ConjugateDegreeSequence& dstar);

EnergyProfile profile(const Graph& g);

}  // namespace genergy
