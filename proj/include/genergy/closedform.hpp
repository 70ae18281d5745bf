#pragma once

#include "genergy/classify.hpp"

namespace genergy {

// Sum_{j=0}^{n} cos(theta + alpha*j) resp. sin(...), via the sine-quotient
// identity. Throws for alpha within 1e-12 of a multiple of 2*pi (degenerate
// denominator; the direct value is then (n+1)*cos(theta)).
double trig_sum_cos(double theta, double alpha, int n);
double trig_sum_sin(double theta, double alpha, int n);

struct PathClosed {
    double energy;            // even n: -2+2csc(pi/(2(n+1))); odd: -2+2cot(...)
    double incidence_energy;  // -1+cot(pi/4n)
    double pi;                // 2+(n-2)sqrt(2)
};
PathClosed path_closed(int n);  // n >= 2

struct CycleClosed {
    double energy;            // 4cot(pi/n) | 2csc(pi/2n) | 4csc(pi/n) by n mod 4
    double lel;               // 2cot(pi/2n)
    double incidence_energy;  // odd: 2csc(pi/2n); else 2cot(pi/2n)
    double pi;                // n*sqrt(2)
    double pi_star;           // 2*sqrt(n)
};
CycleClosed cycle_closed(int n);  // n >= 3

struct CompleteClosed {
    double energy;   // 2n-2 (0 for n=1)
    double pi_star;  // (n-1)*sqrt(n)
};
CompleteClosed complete_closed(int n);  // n >= 1

enum class Family { Path, Cycle, Complete };

struct FamilyPrediction {
    Family family;
    int n;
    Subclass predicted;
    bool equality_expected;  // E = IE for odd cycles, E = pi* for K4
};

// Path (n >= 2) -> G4; Cycle (n >= 3) -> G2 / G3 / G4 for n mod 4 = 0 /
// odd / 2, except C4 -> G1 (E = pi* exactly); Complete (n >= 4) -> G1.
FamilyPrediction predicted_subclass(Family family, int n);

}  // namespace genergy
