#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "genergy/energy.hpp"

namespace genergy {

enum class Subclass { G1, G2, G3, G4 };

const char* subclass_name(Subclass s);  // "G1".."G4"

struct ToleranceConfig {
    double eps_abs = 1e-9;
    double eps_rel = 1e-12;
};

struct BoundaryFlag {
    std::string boundary;  // "E=pi*", "E=LEL", "E=IE", "E=pi"
    double margin;         // E minus the threshold value
};

struct Classification {
    Subclass subclass;
    std::vector<BoundaryFlag> boundary_flags;
};

struct ChainViolation {
    std::string inequality;  // e.g. "LEL<=IE"
    double margin;           // amount by which it is violated (positive)
};

struct IntegrityError : std::runtime_error {
    IntegrityError(const std::string& msg, std::vector<ChainViolation> v)
        : std::runtime_error(msg), violations(std::move(v)) {}
    std::vector<ChainViolation> violations;
};

// Empty result means the chain pi* <= LEL <= IE <= pi, E <= pi holds
// within tolerance.
std::vector<ChainViolation> verify_chain(const EnergyProfile& p,
                                         const ToleranceConfig& tol);

// Left-to-right chain walk: E <= pi*+eps -> G1; E <= LEL+eps -> G2;
// E <= IE+eps -> G3; else G4. Throws IntegrityError on chain violation.
Classification classify(const EnergyProfile& p, const ToleranceConfig& tol);

}  // namespace genergy
