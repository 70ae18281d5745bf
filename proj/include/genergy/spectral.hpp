#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "genergy/graph.hpp"

namespace genergy {

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian };

struct SymmetricMatrix {
    int n = 0;
    std::vector<double> a;  // row-major n*n

    explicit SymmetricMatrix(int order)
        : n(order), a(static_cast<size_t>(order) * order, 0.0) {}

    double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

struct Spectrum {
    MatrixKind kind;
    std::vector<double> values;  // sorted nonincreasing
    double tolerance;            // achieved off-diagonal residual bound
};

struct EigenError : std::runtime_error {
    EigenError(const std::string& msg, double off_norm)
        : std::runtime_error(msg), off_diagonal_norm(off_norm) {}
    double off_diagonal_norm;
};

SymmetricMatrix adjacency_matrix(const Graph& g);
SymmetricMatrix laplacian_matrix(const Graph& g);
SymmetricMatrix signless_laplacian_matrix(const Graph& g);

// Cyclic Jacobi on a dense copy; sweeps until the off-diagonal Frobenius
// norm drops below 1e-12 * ||M||, cap 100 sweeps.
Spectrum symmetric_eigenvalues(const SymmetricMatrix& m, MatrixKind kind);

Spectrum graph_spectrum(const Graph& g, MatrixKind kind);

}  // namespace genergy
