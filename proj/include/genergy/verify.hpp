#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genergy/closedform.hpp"

namespace genergy {

struct TheoremCheck {
    Family family;
    int n;
    bool ok;
    std::string detail;  // empty when ok
};

// Compares the numeric profile of each family member against its closed
// forms (within closed_tol) and its predicted subclass; for odd cycles
// also checks |E - IE| <= eq_tol. Paths/cycles from the family minimum up
// to max_n, complete graphs from n = 4.
std::vector<TheoremCheck> verify_theorems(int max_n, double closed_tol = 1e-8,
                                          double eq_tol = 1e-9, int jobs = 0);

struct LemmaResult {
    int samples;
    double max_error;
    // worst triple
    double theta;
    double alpha;
    int n;
};

// Randomized trig-sum identity check against direct summation.
LemmaResult verify_lemma(int samples, std::uint64_t seed = 20240817);

}  // namespace genergy
