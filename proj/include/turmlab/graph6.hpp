#pragma once

#include <string>

#include "turmlab/graph.hpp"

namespace turmlab {

// graph6 encoding for n <= 62 (single-byte size prefix). Upper-triangle
// bits in column order -- pairs (i, j) with j = 1..n-1 outer, i < j --
// packed six per character, most significant bit first, zero padding.
std::string to_graph6(const Graph& g);

// Inverse of to_graph6. Throws std::invalid_argument on malformed text and
// std::out_of_range for the multi-byte size forms (n > 62).
Graph from_graph6(const std::string& text);

}  // namespace turmlab
