#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "genergy/graph.hpp"

namespace genergy {

// Canonical graph6 string: lexicographically smallest upper-triangle bit
// string over all vertex orderings consistent with the stable coloring
// produced by neighborhood-degree color refinement. Equal strings iff
// isomorphic. Requires n <= 62.
std::string canonical_form(const Graph& g);

// One representative per isomorphism class of connected graphs of order n,
// sorted by canonical form. 1 <= n <= 10.
std::vector<Graph> connected_graphs(int n);

struct StreamError {
    size_t line;  // 1-based
    std::string message;
};

// Reads one graph6 line per graph, in file order; blank lines skipped.
// With errors == nullptr the first bad line throws (message names the
// line); otherwise bad lines are collected and skipped.
std::vector<Graph> read_graph6_stream(const std::filesystem::path& path,
                                      std::vector<StreamError>* errors = nullptr);

}  // namespace genergy
