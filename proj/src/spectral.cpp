#include "genergy/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace genergy {

SymmetricMatrix adjacency_matrix(const Graph& g) {
    const int n = g.order();
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) m.at(i, j) = m.at(j, i) = 1.0;
    return m;
}

SymmetricMatrix laplacian_matrix(const Graph& g) {
    const int n = g.order();
    SymmetricMatrix m(n);
    const std::vector<int> deg = g.degrees();
    for (int i = 0; i < n; ++i) m.at(i, i) = deg[i];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) m.at(i, j) = m.at(j, i) = -1.0;
    return m;
}

SymmetricMatrix signless_laplacian_matrix(const Graph& g) {
    const int n = g.order();
    SymmetricMatrix m(n);
    const std::vector<int> deg = g.degrees();
    for (int i = 0; i < n; ++i) m.at(i, i) = deg[i];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) m.at(i, j) = m.at(j, i) = 1.0;
    return m;
}

namespace {

double off_diagonal_norm(const SymmetricMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) s += 2.0 * m.at(i, j) * m.at(i, j);
    return std::sqrt(s);
}

double frobenius_norm(const SymmetricMatrix& m) {
    double s = 0.0;
    for (double x : m.a) s += x * x;
    return std::sqrt(s);
}

}  // namespace

Spectrum symmetric_eigenvalues(const SymmetricMatrix& m_in, MatrixKind kind) {
    SymmetricMatrix m = m_in;
    const int n = m.n;
    const double norm = frobenius_norm(m);
    const double target = 1e-12 * std::max(norm, 1e-300);
    constexpr int kMaxSweeps = 100;

    double off = off_diagonal_norm(m);
    int sweep = 0;
    while (off > target && sweep < kMaxSweeps) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = m.at(p, q);
                if (apq == 0.0) continue;
                const double app = m.at(p, p);
                const double aqq = m.at(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = m.at(k, p);
                    const double akq = m.at(k, q);
                    m.at(k, p) = c * akp - s * akq;
                    m.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = m.at(p, k);
                    const double aqk = m.at(q, k);
                    m.at(p, k) = c * apk - s * aqk;
                    m.at(q, k) = s * apk + c * aqk;
                }
            }
        }
        off = off_diagonal_norm(m);
        ++sweep;
    }
    if (off > target)
        throw EigenError("Jacobi eigensolver failed to converge", off);

    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = m.at(i, i);
    std::sort(values.begin(), values.end(), std::greater<double>());
    return Spectrum{kind, std::move(values), off};
}

Spectrum graph_spectrum(const Graph& g, MatrixKind kind) {
    switch (kind) {
        case MatrixKind::Adjacency:
            return symmetric_eigenvalues(adjacency_matrix(g), kind);
        case MatrixKind::Laplacian:
            return symmetric_eigenvalues(laplacian_matrix(g), kind);
        case MatrixKind::SignlessLaplacian:
            return symmetric_eigenvalues(signless_laplacian_matrix(g), kind);
    }
    throw std::invalid_argument("unknown matrix kind");
}

}  // namespace genergy
