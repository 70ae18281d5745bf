#include "genergy/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "genergy/graph6.hpp"

namespace genergy {

namespace {

// Iterated refinement: signature = (own color, sorted neighbor colors),
// colors renumbered by sorted signature. The result and the order of the
// color classes are relabeling-invariant.
std::vector<int> stable_coloring(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, 0);
    {
        std::vector<int> deg = g.degrees();
        std::vector<int> uniq = deg;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), deg[v]) -
                uniq.begin());
    }
    size_t ncolors = 0;
    for (;;) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            for (int u = 0; u < n; ++u)
                if (g.has_edge(v, u)) s.push_back(color[u]);
            std::sort(s.begin(), s.end());
            s.insert(s.begin(), color[v]);
            sig[v] = std::move(s);
        }
        std::vector<std::vector<int>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), sig[v]) -
                uniq.begin());
        if (uniq.size() == ncolors) break;
        ncolors = uniq.size();
    }
    return color;
}

struct CanonSearch {
    const Graph* g;
    std::vector<std::vector<int>> cells;  // by color id
    std::vector<int> order;               // position -> vertex
    std::vector<bool> used;
    std::vector<uint8_t> bits;  // edge bits in graph6 order
    std::vector<uint8_t> best;
    bool have_best = false;

    // cmp_equal: current prefix equals best's prefix so far.
    void rec(int pos, int cell_idx, size_t cell_used, bool cmp_equal) {
        const int n = g->order();
        if (pos == n) {
            // cmp_equal can be stale once best has been replaced mid-subtree;
            // compare in full at the leaf.
            if (!have_best || bits < best) {
                best = bits;
                have_best = true;
            }
            return;
        }
        if (cell_used == cells[cell_idx].size()) {
            rec(pos, cell_idx + 1, 0, cmp_equal);
            return;
        }
        for (int v : cells[cell_idx]) {
            if (used[v]) continue;
            const size_t mark = bits.size();
            bool equal = cmp_equal;
            bool worse = false;
            for (int i = 0; i < pos; ++i) {
                const uint8_t b = g->has_edge(order[i], v) ? 1 : 0;
                bits.push_back(b);
                if (equal && have_best) {
                    if (b > best[mark + i]) {
                        worse = true;
                        break;
                    }
                    if (b < best[mark + i]) equal = false;
                }
            }
            if (!worse) {
                used[v] = true;
                order[pos] = v;
                rec(pos + 1, cell_idx, cell_used + 1, equal);
                used[v] = false;
            }
            bits.resize(mark);
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("canonical_form requires n <= 62");

    const std::vector<int> color = stable_coloring(g);
    const int ncolors = *std::max_element(color.begin(), color.end()) + 1;

    CanonSearch s;
    s.g = &g;
    s.cells.resize(ncolors);
    for (int v = 0; v < n; ++v) s.cells[color[v]].push_back(v);
    s.order.assign(n, -1);
    s.used.assign(n, false);
    s.bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    s.rec(0, 0, 0, true);

    Graph canon(n);
    size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (s.best[bit]) canon.add_edge(i, j);
    return to_graph6(canon);
}

std::vector<Graph> connected_graphs(int n) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("connected_graphs supports 1 <= n <= 10");

    // Vertex-addition augmentation: every connected graph on k >= 2
    // vertices arises from a connected (k-1)-graph by attaching a new
    // vertex to a nonempty subset of the old ones.
    std::map<std::string, Graph> level;
    level.emplace(canonical_form(Graph(1)), Graph(1));
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const auto& [form, parent] : level) {
            const uint32_t nsubsets = 1u << (k - 1);
            for (uint32_t subset = 1; subset < nsubsets; ++subset) {
                Graph child(k);
                for (int u = 0; u < k - 1; ++u)
                    for (int v = u + 1; v < k - 1; ++v)
                        if (parent.has_edge(u, v)) child.add_edge(u, v);
                for (int u = 0; u < k - 1; ++u)
                    if ((subset >> u) & 1) child.add_edge(u, k - 1);
                std::string cf = canonical_form(child);
                next.try_emplace(std::move(cf), std::move(child));
            }
        }
        level = std::move(next);
    }

    std::vector<Graph> out;
    out.reserve(level.size());
    for (auto& [form, g] : level) out.push_back(parse_graph6(form));
    return out;
}

std::vector<Graph> read_graph6_stream(const std::filesystem::path& path,
                                      std::vector<StreamError>* errors) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());

    std::vector<Graph> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const std::exception& e) {
            if (errors) {
                errors->push_back({lineno, e.what()});
            } else {
                throw std::runtime_error(path.string() + ":" +
                                         std::to_string(lineno) + ": " +
                                         e.what());
            }
        }
    }
    return out;
}

}  // namespace genergy
