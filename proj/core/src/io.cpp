#include "antimagic/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "json.hpp"

namespace antimagic {

using ordered_json = nlohmann::ordered_json;

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

Vertex parse_vertex(std::string_view token, std::size_t line) {
  Vertex v = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || end != token.data() + token.size()) {
    throw ParseError("expected a nonnegative vertex id, got '" + std::string(token) + "'", line);
  }
  return v;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

EdgeListDocument parse_edge_list_document(std::string_view text) {
  EdgeListDocument doc;
  std::size_t line_number = 0;
  while (!text.empty()) {
    ++line_number;
    const std::size_t newline = text.find('\n');
    const std::string_view line = text.substr(0, newline);
    text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() == 1) {
      doc.isolated.push_back(parse_vertex(tokens[0], line_number));
    } else if (tokens.size() == 2) {
      doc.edges.push_back({parse_vertex(tokens[0], line_number), parse_vertex(tokens[1], line_number)});
      doc.edge_lines.push_back(line_number);
    } else {
      throw ParseError("expected 'u v' or a single vertex", line_number);
    }
  }
  return doc;
}

Forest parse_edge_list(std::string_view text) {
  const EdgeListDocument doc = parse_edge_list_document(text);
  try {
    return Forest::build(doc.edges, doc.isolated);
  } catch (const ForestError& e) {
    throw ParseError(e.what(), doc.edge_lines.at(e.edge_index()));
  }
}

std::string emit_json(const LabeledOrientation& orientation) {
  ordered_json out;
  out["vertices"] = ordered_json::array();
  for (Vertex v : orientation.vertices) out["vertices"].push_back(v);
  out["arcs"] = ordered_json::array();
  for (const Arc& a : orientation.arcs) {
    ordered_json arc;
    arc["tail"] = a.tail;
    arc["head"] = a.head;
    arc["label"] = a.label;
    out["arcs"].push_back(std::move(arc));
  }
  // operator[] on an ordered object is a linear scan; vertices are unique, so
  // append directly.
  auto& sums = (out["sums"] = ordered_json::object()).get_ref<ordered_json::object_t&>();
  sums.reserve(orientation.vertices.size());
  for (std::size_t i = 0; i < orientation.vertices.size(); ++i) {
    sums.emplace_back(std::to_string(orientation.vertices[i]), orientation.sums[i]);
  }
  out["m"] = orientation.m();
  return out.dump();
}

LabeledOrientation parse_orientation_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  try {
    if (!doc.is_object()) throw ParseError("top level must be an object", 0);
    std::vector<Vertex> vertices = doc.at("vertices").get<std::vector<Vertex>>();
    std::vector<Arc> arcs;
    for (const auto& arc : doc.at("arcs")) {
      arcs.push_back({arc.at("tail").get<Vertex>(), arc.at("head").get<Vertex>(), arc.at("label").get<Label>()});
    }
    const auto m = doc.at("m").get<std::size_t>();
    if (m != arcs.size()) throw ParseError("m does not match the number of arcs", 0);

    std::vector<Vertex> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError("repeated vertex", 0);
    }
    LabeledOrientation out;
    try {
      out = make_orientation(std::move(vertices), std::move(arcs));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    }

    const auto& sums = doc.at("sums");
    if (!sums.is_object() || sums.size() != out.vertices.size()) {
      throw ParseError("sums must list every vertex exactly once", 0);
    }
    for (std::size_t i = 0; i < out.vertices.size(); ++i) {
      const std::string key = std::to_string(out.vertices[i]);
      if (!sums.contains(key)) throw ParseError("missing sum for vertex " + key, 0);
      if (sums.at(key).get<Sum>() != out.sums[i]) {
        throw ParseError("stored sum of vertex " + key + " disagrees with the arcs", 0);
      }
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed orientation: ") + e.what(), 0);
  }
}

std::string emit_dot(const LabeledOrientation& orientation) {
  if (orientation.vertices.empty()) return "digraph G { }";
  std::ostringstream out;
  out << "digraph G {\n";
  for (std::size_t i = 0; i < orientation.vertices.size(); ++i) {
    out << "  " << orientation.vertices[i] << " [xlabel=\"" << orientation.sums[i] << "\"];\n";
  }
  for (const Arc& a : orientation.arcs) {
    out << "  " << a.tail << " -> " << a.head << " [label=\"" << a.label << "\"];\n";
  }
  out << "}";
  return out.str();
}

}  // namespace antimagic
