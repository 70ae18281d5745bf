#pragma once

#include <string>
#include <vector>

namespace genergy {

// Simple undirected graph, 0-indexed vertices, no loops.
class Graph {
public:
    explicit Graph(int n);

    static Graph path(int n);      // n >= 1
    static Graph cycle(int n);     // n >= 3
    static Graph complete(int n);  // n >= 1

    int order() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const { return adj_[idx(u, v)]; }
    void add_edge(int u, int v);

    // Degrees in label order (unsorted).
    std::vector<int> degrees() const;

    // Image under perm: vertex v of *this becomes perm[v].
    Graph relabeled(const std::vector<int>& perm) const;

    bool operator==(const Graph&) const = default;

private:
    int idx(int u, int v) const { return u * n_ + v; }

    int n_;
    std::vector<bool> adj_;  // row-major n*n, kept symmetric
};

// Nonincreasing sequences of n nonnegative integers.
using DegreeSequence = std::vector<int>;
using ConjugateDegreeSequence = std::vector<int>;

DegreeSequence degree_sequence(const Graph& g);

// dstar[i-1] = |{j : d[j] >= i}| for i = 1..n, same length as d.
ConjugateDegreeSequence conjugate_degree_sequence(const DegreeSequence& d);

bool is_connected(const Graph& g);

// True iff repeatedly removing an isolated or dominating vertex empties g.
// K1 counts as threshold.
bool is_threshold(const Graph& g);

}  // namespace genergy
