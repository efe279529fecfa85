#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kgatlas/graph.hpp"

namespace kgatlas::rdf {

enum class Format { turtle, ntriples };

std::optional<Format> format_from_name(std::string_view name);
// ".nt" selects N-Triples, anything else Turtle.
Format format_for_path(std::string_view path);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

class UnknownPrefix : public SyntaxError {
 public:
  UnknownPrefix(std::size_t line, std::size_t column, std::string prefix);
  const std::string& prefix() const { return prefix_; }

 private:
  std::string prefix_;
};

struct ParsedDocument {
  Graph graph;
  std::map<std::string, std::string> prefixes;
};

// Lines and columns in errors are 1-based; columns count codepoints.
// Blank nodes are relabelled b0, b1, ... in order of first appearance.
ParsedDocument parse_document(std::string_view input, Format format,
                              std::optional<std::string> base = std::nullopt);

inline Graph parse_rdf(std::string_view input, Format format,
                       std::optional<std::string> base = std::nullopt) {
  return parse_document(input, format, std::move(base)).graph;
}

// RFC 3986 reference resolution.
std::string resolve_iri(std::string_view base, std::string_view reference);

// Sorted lines, canonical blank-node names, N-Triples escaping.
std::string serialize_ntriples(const Graph& graph);

}  // namespace kgatlas::rdf
