#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "neurosa/problems.hpp"

namespace neurosa {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  std::size_t line_number;
};

// Standard Gset text layout: header "n m", then m lines "i j w" with 1-based
// vertex indices and integer weights. Indices are shifted to 0-based here,
// at the parser boundary only. Duplicate edges and header/edge-count
// mismatches are rejected.
WeightedGraph parse_gset(std::istream& in, std::string name = "");
WeightedGraph parse_gset_string(const std::string& text, std::string name = "");
WeightedGraph load_gset_file(const std::string& path);

// Inverse of parse_gset on canonical graphs (edges sorted, u < v): emits
// "n m" then one "i j w" line per edge, 1-based.
void write_gset(const WeightedGraph& g, std::ostream& out);
std::string write_gset_string(const WeightedGraph& g);

}  // namespace neurosa
