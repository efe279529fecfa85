#pragma once

// Minimal tokenizer and validator for the DOT subset the emitter produces:
//   digraph ID? { (ID = ID ; | ID attrs? ; | ID -> ID attrs? ;)* }
// with every attribute value double-quoted.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kgatlas::testing {

struct DotToken {
  enum class Kind { identifier, quoted, lbrace, rbrace, lbracket, rbracket, equals, comma,
                    semicolon, arrow, end };
  Kind kind;
  std::string text;  // unescaped content for quoted strings
  std::size_t offset;
};

struct DotAttr {
  std::string key;
  std::string value;
};

struct DotNode {
  std::string id;
  std::vector<DotAttr> attrs;
};

struct DotEdge {
  std::string from;
  std::string to;
  std::vector<DotAttr> attrs;
};

struct DotParse {
  std::vector<DotAttr> graph_attrs;
  std::vector<DotNode> nodes;
  std::vector<DotEdge> edges;
};

class DotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<DotToken> tokenize_dot(const std::string& text);

// Throws DotError when the document is not well formed: unbalanced braces,
// unquoted attribute values, or edges referencing undeclared nodes.
DotParse parse_dot(const std::string& text);

}  // namespace kgatlas::testing
