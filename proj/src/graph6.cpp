#include "genergy/graph6.hpp"

namespace genergy {

namespace {
constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";
}  // namespace

Graph parse_graph6(std::string_view text) {
    size_t pos = 0;
    if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    if (pos >= text.size()) throw Graph6Error("empty graph6 string", pos);

    const unsigned char size_byte = static_cast<unsigned char>(text[pos]);
    if (size_byte < 63 || size_byte > 126)
        throw Graph6Error("byte outside graph6 range 63..126", pos);
    if (size_byte == 126)
        throw Graph6Error("multi-byte size form unsupported (n > 62)", pos);
    const int n = size_byte - kBias;
    if (n < 1) throw Graph6Error("graph order must be >= 1", pos);
    ++pos;

    const int nbits = n * (n - 1) / 2;
    const size_t ngroups = (nbits + 5) / 6;
    if (text.size() - pos < ngroups)
        throw Graph6Error("truncated edge data", text.size());
    if (text.size() - pos > ngroups)
        throw Graph6Error("trailing garbage after edge data", pos + ngroups);

    Graph g(n);
    int bit = 0;
    int i = 0, j = 1;  // bits run (0,1),(0,2),(1,2),(0,3),...
    for (size_t k = 0; k < ngroups; ++k) {
        const unsigned char c = static_cast<unsigned char>(text[pos + k]);
        if (c < 63 || c > 126)
            throw Graph6Error("byte outside graph6 range 63..126", pos + k);
        const int group = c - kBias;
        for (int b = 5; b >= 0 && bit < nbits; --b, ++bit) {
            if ((group >> b) & 1) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 output limited to n <= 62");

    std::string out;
    out.push_back(static_cast<char>(n + kBias));
    int group = 0;
    int nfilled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nfilled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                nfilled = 0;
            }
        }
    }
    if (nfilled > 0)
        out.push_back(static_cast<char>((group << (6 - nfilled)) + kBias));
    return out;
}

}  // namespace genergy
