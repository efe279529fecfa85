#include "kgatlas/provenance.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <tuple>

#include "kgatlas/utf8.hpp"

namespace kgatlas::prov {

namespace rv = rdf::vocab;

SpanOutOfBounds::SpanOutOfBounds(rdf::Term node, TextSpan span, std::size_t doc_length)
    : ProvenanceError("span [" + std::to_string(span.begin) + ", " + std::to_string(span.end) +
                      ") of " + rdf::display_id(node) + " is outside document '" + span.doc +
                      "' of length " + std::to_string(doc_length)),
      node_(std::move(node)),
      span_(std::move(span)) {}

UnknownDocument::UnknownDocument(std::string doc_id)
    : ProvenanceError("unknown document '" + doc_id + "'"), doc_id_(std::move(doc_id)) {}

const std::string* DocumentStore::document(std::string_view doc_id) const {
  auto it = docs_.find(std::string(doc_id));
  return it == docs_.end() ? nullptr : &it->second;
}

std::vector<rdf::Term> DocumentStore::annotated_nodes() const {
  std::vector<rdf::Term> out;
  out.reserve(spans_by_node_.size());
  for (const auto& [node, spans] : spans_by_node_) out.push_back(node);
  return out;
}

std::vector<TextSpan> DocumentStore::spans_for_node(const rdf::Term& node) const {
  auto it = spans_by_node_.find(node);
  return it == spans_by_node_.end() ? std::vector<TextSpan>{} : it->second;
}

std::vector<rdf::Term> DocumentStore::nodes_at_offset(std::string_view doc_id,
                                                      std::int64_t offset) const {
  if (!docs_.contains(std::string(doc_id))) throw UnknownDocument(std::string(doc_id));
  std::vector<rdf::Term> out;
  auto it = anchors_by_doc_.find(std::string(doc_id));
  if (offset < 0 || it == anchors_by_doc_.end()) return out;
  const auto pos = static_cast<std::size_t>(offset);
  const auto& anchors = it->second;
  auto last = std::upper_bound(anchors.begin(), anchors.end(), pos,
                               [](std::size_t v, const Anchor& a) { return v < a.begin; });
  std::set<rdf::Term> hits;
  for (auto a = anchors.begin(); a != last; ++a) {
    if (pos < a->end) hits.insert(a->node);
  }
  out.assign(hits.begin(), hits.end());
  return out;
}

std::size_t DocumentStore::span_count() const {
  std::size_t n = 0;
  for (const auto& [node, spans] : spans_by_node_) n += spans.size();
  return n;
}

namespace {

std::optional<rdf::Literal> single_literal(const rdf::Graph& g, const rdf::Term& s,
                                           const rdf::Iri& p) {
  for (const auto& t : g.match(s, p, std::nullopt)) {
    if (const auto* lit = std::get_if<rdf::Literal>(&t.object)) return *lit;
  }
  return std::nullopt;
}

std::size_t parse_offset(const rdf::Literal& lit, const rdf::Term& node) {
  std::size_t value = 0;
  const char* first = lit.lexical.data();
  const char* last = first + lit.lexical.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw MalformedSpan("span offset '" + lit.lexical + "' of " + rdf::display_id(node) +
                        " is not a non-negative integer");
  }
  return value;
}

}  // namespace

DocumentStore load_provenance(const rdf::Graph& graph,
                              std::map<std::string, std::string> documents) {
  DocumentStore store;
  std::map<std::string, std::size_t> lengths;
  for (const auto& [id, text] : documents) {
    if (utf8::find_invalid(text)) {
      throw ProvenanceError("document '" + id + "' is not valid UTF-8");
    }
    lengths[id] = utf8::length(text);
  }
  store.docs_ = std::move(documents);

  for (const auto& t : graph.match(std::nullopt, rv::viz("sourceSpan"), std::nullopt)) {
    const rdf::Term& node = t.subject;
    const rdf::Term& anchor = t.object;
    if (rdf::is_literal(anchor)) {
      throw MalformedSpan("viz:sourceSpan of " + rdf::display_id(node) + " must be a resource");
    }
    auto doc = single_literal(graph, anchor, rv::viz("doc"));
    auto begin = single_literal(graph, anchor, rv::viz("begin"));
    auto end = single_literal(graph, anchor, rv::viz("end"));
    if (!doc || !begin || !end) {
      throw MalformedSpan("span of " + rdf::display_id(node) +
                          " needs viz:doc, viz:begin and viz:end");
    }
    TextSpan span{doc->lexical, parse_offset(*begin, node), parse_offset(*end, node)};
    auto len = lengths.find(span.doc);
    if (len == lengths.end()) throw UnknownDocument(span.doc);
    if (span.begin >= span.end || span.end > len->second) {
      throw SpanOutOfBounds(node, span, len->second);
    }
    store.anchors_by_doc_[span.doc].push_back({span.begin, span.end, node});
    store.spans_by_node_[node].push_back(std::move(span));
  }

  for (auto& [node, spans] : store.spans_by_node_) {
    std::sort(spans.begin(), spans.end());
    spans.erase(std::unique(spans.begin(), spans.end()), spans.end());
  }
  for (auto& [doc, anchors] : store.anchors_by_doc_) {
    std::sort(anchors.begin(), anchors.end(), [](const auto& a, const auto& b) {
      return std::tie(a.begin, a.end, a.node) < std::tie(b.begin, b.end, b.node);
    });
    anchors.erase(std::unique(anchors.begin(), anchors.end(),
                              [](const auto& a, const auto& b) {
                                return a.begin == b.begin && a.end == b.end && a.node == b.node;
                              }),
                  anchors.end());
  }
  return store;
}

}  // namespace kgatlas::prov
