#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kgatlas/graph.hpp"
#include "kgatlas/ontology.hpp"
#include "kgatlas/provenance.hpp"

namespace kgatlas::facet {

using rdf::Iri;
using rdf::Term;

struct ConceptFacet {
  Iri class_iri;
  std::string label;
  std::size_t instance_count = 0;
};

struct IndividualFacet {
  Term iri;
  std::string label;
  std::optional<Iri> class_iri;
};

enum class Mode { concepts, individuals };

std::string_view to_string(Mode mode);
std::optional<Mode> mode_from_name(std::string_view name);

struct SubgraphRequest {
  Mode mode = Mode::individuals;
  // class IRIs in concept mode, individuals (IRIs or blank nodes) otherwise
  std::vector<Term> seeds;
  long long depth = 1;
  std::string lang = "en";
};

struct TooltipEntry {
  std::string property;
  std::string value;

  auto operator<=>(const TooltipEntry&) const = default;
};

struct ViewNode {
  Term id;
  std::string label;
  std::optional<Iri> class_iri;
  std::string class_label;
  std::optional<std::string> icon_key;
  std::vector<TooltipEntry> tooltip;
  std::vector<prov::TextSpan> spans;
};

struct ViewEdge {
  Term source;
  Term target;
  Iri property;
  std::string label;
};

// Nodes sorted by id; edges by (source, property, target).
struct ViewGraph {
  std::vector<ViewNode> nodes;
  std::vector<ViewEdge> edges;
  std::string lang;
  SubgraphRequest request;
};

struct TableRow {
  std::string subject;
  std::string predicate;
  std::string object;

  auto operator<=>(const TableRow&) const = default;
};

class UnknownSeed : public std::runtime_error {
 public:
  explicit UnknownSeed(std::vector<Term> seeds);
  const std::vector<Term>& seeds() const { return seeds_; }

 private:
  std::vector<Term> seeds_;
};

class BadDepth : public std::invalid_argument {
 public:
  explicit BadDepth(long long depth);
};

// rdf:type, rdfs:label and the viz: annotation vocabulary. These never become
// edges or tooltip rows.
bool is_annotation_predicate(const Iri& predicate);

// True for triples drawn as edges: resource object, non-annotation predicate,
// and a predicate that is not a declared datatype property.
bool is_display_edge(const rdf::Triple& t, const onto::Ontology& ontology);

// Subjects of rdf:type triples naming a non-RDF/RDFS/OWL class.
std::vector<Term> individuals(const rdf::Graph& graph);

std::string node_label(const rdf::Graph& graph, const onto::Ontology& ontology,
                       const Term& node, std::string_view lang);

std::vector<ConceptFacet> list_concepts(const rdf::Graph& graph,
                                        const onto::Ontology& ontology, std::string_view lang);

std::vector<IndividualFacet> list_individuals(const rdf::Graph& graph,
                                              const onto::Ontology& ontology,
                                              std::string_view lang);

std::set<Term> expand_seeds(const rdf::Graph& graph, const SubgraphRequest& request);

ViewGraph extract_subgraph(const rdf::Graph& graph, const onto::Ontology& ontology,
                           const SubgraphRequest& request,
                           const prov::DocumentStore* store = nullptr);

std::vector<TooltipEntry> collect_tooltip(const rdf::Graph& graph,
                                          const onto::Ontology& ontology, const Term& node,
                                          std::string_view lang);

std::vector<TableRow> triple_table(const ViewGraph& view, const rdf::Graph& graph,
                                   const onto::Ontology& ontology, std::string_view lang);

}  // namespace kgatlas::facet
