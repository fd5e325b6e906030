#ifndef CHROMA_SOLUTION_HPP
#define CHROMA_SOLUTION_HPP

#include <iosfwd>
#include <string>

#include "chroma/coloring.hpp"
#include "chroma/graph.hpp"

namespace chroma {

/// Solution file: first line "k <num_colors>", then one "v <label> <color>"
/// line per vertex, colors 1-based, vertices in ascending label order.
void write_solution(const Coloring& c, const Graph& g, std::ostream& out);
void write_solution(const Coloring& c, const Graph& g, const std::string& path);

/// Reads a solution file back against the graph it was written for; colors
/// come back 0-based. Throws ParseError / std::runtime_error on mismatch.
Coloring read_solution(std::istream& in, const Graph& g);
Coloring read_solution(const std::string& path, const Graph& g);

} // namespace chroma

#endif
