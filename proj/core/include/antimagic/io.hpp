#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "antimagic/forest.hpp"
#include "antimagic/orientation.hpp"

namespace antimagic {

/// Malformed input. line() is 1-based, or 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Edge-list text before forest validation.
struct EdgeListDocument {
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;  // source line of each edge
  std::vector<Vertex> isolated;
};

/// "u v" per line, a lone "v" declares a vertex, '#' starts a comment line.
EdgeListDocument parse_edge_list_document(std::string_view text);

/// As above, then builds the forest; forest errors become ParseError at the
/// offending line.
Forest parse_edge_list(std::string_view text);

/// {"vertices":[...],"arcs":[{"tail","head","label"}...],"sums":{...},"m":m}
std::string emit_json(const LabeledOrientation& orientation);

/// Inverse of emit_json. Stored sums and m must agree with the arcs.
LabeledOrientation parse_orientation_json(std::string_view text);

std::string emit_dot(const LabeledOrientation& orientation);

}  // namespace antimagic
