#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "genergy/graph.hpp"

namespace genergy {

struct Graph6Error : std::runtime_error {
    Graph6Error(const std::string& msg, size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    size_t byte_offset;
};

// Single-byte size form only (n <= 62). Accepts and skips an optional
// ">>graph6<<" header; never emits one.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace genergy
