#include "genergy/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace genergy {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, false) {
    if (n < 1) throw std::invalid_argument("graph order must be >= 1");
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw std::invalid_argument("bad edge endpoints");
    adj_[idx(u, v)] = true;
    adj_[idx(v, u)] = true;
}

int Graph::edge_count() const {
    int deg_sum = 0;
    for (int d : degrees()) deg_sum += d;
    return deg_sum / 2;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_, 0);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (adj_[idx(u, v)]) ++d[u];
    return d;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size mismatch");
    Graph h(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) h.add_edge(perm[u], perm[v]);
    return h;
}

DegreeSequence degree_sequence(const Graph& g) {
    std::vector<int> d = g.degrees();
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

ConjugateDegreeSequence conjugate_degree_sequence(const DegreeSequence& d) {
    const int n = static_cast<int>(d.size());
    ConjugateDegreeSequence dstar(n, 0);
    for (int i = 1; i <= n; ++i) {
        int count = 0;
        for (int dj : d)
            if (dj >= i) ++count;
        dstar[i - 1] = count;
    }
    return dstar;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (!seen[v] && g.has_edge(u, v)) {
                seen[v] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

bool is_threshold(const Graph& g) {
    const int n = g.order();
    std::vector<bool> alive(n, true);
    std::vector<int> deg = g.degrees();  // degree within the alive set
    int remaining = n;
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (alive[v] && (deg[v] == 0 || deg[v] == remaining - 1)) {
                pick = v;
                break;
            }
        }
        if (pick < 0) return false;
        alive[pick] = false;
        --remaining;
        for (int v = 0; v < n; ++v)
            if (alive[v] && g.has_edge(pick, v)) --deg[v];
    }
    return true;
}

}  // namespace genergy
