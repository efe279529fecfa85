#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kgatlas/graph.hpp"

namespace kgatlas::prov {

// Half-open range of codepoint offsets into one source document.
struct TextSpan {
  std::string doc;
  std::size_t begin = 0;
  std::size_t end = 0;

  auto operator<=>(const TextSpan&) const = default;
};

class ProvenanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SpanOutOfBounds : public ProvenanceError {
 public:
  SpanOutOfBounds(rdf::Term node, TextSpan span, std::size_t doc_length);
  const rdf::Term& node() const { return node_; }
  const TextSpan& span() const { return span_; }

 private:
  rdf::Term node_;
  TextSpan span_;
};

class UnknownDocument : public ProvenanceError {
 public:
  explicit UnknownDocument(std::string doc_id);
  const std::string& doc_id() const { return doc_id_; }

 private:
  std::string doc_id_;
};

// A span annotation missing its doc/begin/end, or with non-integer offsets.
class MalformedSpan : public ProvenanceError {
 public:
  using ProvenanceError::ProvenanceError;
};

class DocumentStore {
 public:
  DocumentStore() = default;

  const std::map<std::string, std::string>& documents() const { return docs_; }
  const std::string* document(std::string_view doc_id) const;

  // Nodes carrying at least one span, in term order.
  std::vector<rdf::Term> annotated_nodes() const;
  // Sorted by (doc, begin); empty for nodes without spans.
  std::vector<TextSpan> spans_for_node(const rdf::Term& node) const;

  // Nodes whose span covers `offset`, in term order. Throws UnknownDocument.
  std::vector<rdf::Term> nodes_at_offset(std::string_view doc_id, std::int64_t offset) const;

  std::size_t span_count() const;

  friend DocumentStore load_provenance(const rdf::Graph& graph,
                                       std::map<std::string, std::string> documents);

 private:
  struct Anchor {
    std::size_t begin;
    std::size_t end;
    rdf::Term node;
  };

  std::map<std::string, std::string> docs_;
  std::map<rdf::Term, std::vector<TextSpan>> spans_by_node_;
  // per document, anchors sorted by begin offset
  std::map<std::string, std::vector<Anchor>> anchors_by_doc_;
};

// Reads `?node viz:sourceSpan ?s . ?s viz:doc "id" ; viz:begin n ; viz:end m`
// annotations and validates them against the supplied documents.
DocumentStore load_provenance(const rdf::Graph& graph,
                              std::map<std::string, std::string> documents);

}  // namespace kgatlas::prov
