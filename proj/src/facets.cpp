#include "kgatlas/facets.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace kgatlas::facet {

namespace rv = rdf::vocab;

std::string_view to_string(Mode mode) {
  return mode == Mode::concepts ? "concept" : "individual";
}

std::optional<Mode> mode_from_name(std::string_view name) {
  if (name == "concept") return Mode::concepts;
  if (name == "individual") return Mode::individuals;
  return std::nullopt;
}

namespace {

std::string describe(const std::vector<Term>& seeds) {
  std::string out;
  for (const auto& s : seeds) {
    if (!out.empty()) out += ", ";
    out += rdf::display_id(s);
  }
  return out;
}

bool is_meta_class(const Iri& iri) {
  return iri.value.starts_with(rv::kRdf) || iri.value.starts_with(rv::kRdfs) ||
         iri.value.starts_with(rv::kOwl);
}

// Class IRIs asserted for `node`, excluding RDF/RDFS/OWL meta classes.
std::vector<Iri> classes_of(const rdf::Graph& graph, const Term& node) {
  std::vector<Iri> out;
  for (const auto& t : graph.match(node, rv::type(), std::nullopt)) {
    if (const auto* iri = std::get_if<Iri>(&t.object); iri && !is_meta_class(*iri)) {
      out.push_back(*iri);
    }
  }
  return out;
}

// The class shown for a node: the smallest ontology-declared class, else the
// smallest asserted one.
std::optional<Iri> primary_class(const rdf::Graph& graph, const onto::Ontology& ontology,
                                 const Term& node) {
  auto classes = classes_of(graph, node);
  for (const auto& c : classes) {
    if (ontology.find_class(c)) return c;
  }
  if (classes.empty()) return std::nullopt;
  return classes.front();
}

onto::LabelBundle instance_labels(const rdf::Graph& graph, const Term& node) {
  onto::LabelBundle bundle;
  for (const auto& t : graph.match(node, rv::label(), std::nullopt)) {
    const auto* lit = std::get_if<rdf::Literal>(&t.object);
    if (!lit || lit->lexical.empty()) continue;
    auto [it, inserted] = bundle.try_emplace(lit->language, lit->lexical);
    if (!inserted && lit->lexical < it->second) it->second = lit->lexical;
  }
  return bundle;
}

}  // namespace

UnknownSeed::UnknownSeed(std::vector<Term> seeds)
    : std::runtime_error("seeds match nothing in the graph: " + describe(seeds)),
      seeds_(std::move(seeds)) {}

BadDepth::BadDepth(long long depth)
    : std::invalid_argument("depth must be non-negative, got " + std::to_string(depth)) {}

bool is_annotation_predicate(const Iri& predicate) {
  return predicate == rv::type() || predicate == rv::label() ||
         predicate.value.starts_with(rv::kViz);
}

bool is_display_edge(const rdf::Triple& t, const onto::Ontology& ontology) {
  if (rdf::is_literal(t.object) || is_annotation_predicate(t.predicate)) return false;
  return ontology.property_kind(t.predicate) != onto::PropertyKind::datatype;
}

std::vector<Term> individuals(const rdf::Graph& graph) {
  std::set<Term> out;
  for (const auto& t : graph.match(std::nullopt, rv::type(), std::nullopt)) {
    if (const auto* iri = std::get_if<Iri>(&t.object); iri && !is_meta_class(*iri)) {
      out.insert(t.subject);
    }
  }
  return {out.begin(), out.end()};
}

std::string node_label(const rdf::Graph& graph, const onto::Ontology& ontology,
                       const Term& node, std::string_view lang) {
  const auto labels = instance_labels(graph, node);
  if (const auto* iri = std::get_if<Iri>(&node)) {
    return ontology.resolve_label(*iri, lang, &labels);
  }
  if (auto label = onto::pick_label(&labels, nullptr, lang)) return *label;
  return rdf::display_id(node);
}

std::vector<ConceptFacet> list_concepts(const rdf::Graph& graph,
                                        const onto::Ontology& ontology, std::string_view lang) {
  std::map<Iri, std::set<Term>> instances;
  for (const auto& t : graph.match(std::nullopt, rv::type(), std::nullopt)) {
    if (const auto* iri = std::get_if<Iri>(&t.object); iri && !is_meta_class(*iri)) {
      instances[*iri].insert(t.subject);
    }
  }
  std::vector<ConceptFacet> out;
  out.reserve(instances.size());
  for (const auto& [cls, members] : instances) {
    out.push_back({cls, ontology.resolve_label(cls, lang), members.size()});
  }
  std::sort(out.begin(), out.end(), [](const ConceptFacet& a, const ConceptFacet& b) {
    return std::tie(a.label, a.class_iri) < std::tie(b.label, b.class_iri);
  });
  return out;
}

std::vector<IndividualFacet> list_individuals(const rdf::Graph& graph,
                                              const onto::Ontology& ontology,
                                              std::string_view lang) {
  std::vector<IndividualFacet> out;
  for (const Term& node : individuals(graph)) {
    out.push_back({node, node_label(graph, ontology, node, lang),
                   primary_class(graph, ontology, node)});
  }
  std::sort(out.begin(), out.end(), [](const IndividualFacet& a, const IndividualFacet& b) {
    return std::tie(a.label, a.iri) < std::tie(b.label, b.iri);
  });
  return out;
}

std::set<Term> expand_seeds(const rdf::Graph& graph, const SubgraphRequest& request) {
  std::set<Term> out;
  std::vector<Term> unknown;
  for (const Term& seed : request.seeds) {
    if (request.mode == Mode::individuals) {
      if (rdf::is_literal(seed) || !graph.mentions(seed)) {
        unknown.push_back(seed);
      } else {
        out.insert(seed);
      }
      continue;
    }
    bool any = false;
    if (rdf::is_iri(seed)) {
      for (const auto& t : graph.match(std::nullopt, rv::type(), seed)) {
        out.insert(t.subject);
        any = true;
      }
    }
    if (!any) unknown.push_back(seed);
  }
  if (!unknown.empty()) throw UnknownSeed(std::move(unknown));
  return out;
}

std::vector<TooltipEntry> collect_tooltip(const rdf::Graph& graph,
                                          const onto::Ontology& ontology, const Term& node,
                                          std::string_view lang) {
  std::vector<TooltipEntry> out;
  for (const auto& t : graph.match(node, std::nullopt, std::nullopt)) {
    const auto* lit = std::get_if<rdf::Literal>(&t.object);
    if (!lit || is_annotation_predicate(t.predicate)) continue;
    out.push_back({ontology.resolve_label(t.predicate, lang), lit->lexical});
  }
  std::sort(out.begin(), out.end());
  return out;
}

ViewGraph extract_subgraph(const rdf::Graph& graph, const onto::Ontology& ontology,
                           const SubgraphRequest& request, const prov::DocumentStore* store) {
  if (request.depth < 0) throw BadDepth(request.depth);
  const std::set<Term> seeds = expand_seeds(graph, request);

  // Breadth-first over object-property edges, ignoring direction.
  std::set<Term> visited = seeds;
  std::vector<Term> frontier(seeds.begin(), seeds.end());
  for (long long hop = 0; hop < request.depth && !frontier.empty(); ++hop) {
    std::vector<Term> next;
    auto reach = [&](const Term& n) {
      if (visited.insert(n).second) next.push_back(n);
    };
    for (const Term& n : frontier) {
      for (const auto& t : graph.match(n, std::nullopt, std::nullopt)) {
        if (is_display_edge(t, ontology)) reach(t.object);
      }
      for (const auto& t : graph.match(std::nullopt, std::nullopt, n)) {
        if (is_display_edge(t, ontology)) reach(t.subject);
      }
    }
    frontier = std::move(next);
  }

  ViewGraph view;
  view.lang = request.lang;
  view.request = request;
  view.nodes.reserve(visited.size());
  for (const Term& n : visited) {
    ViewNode node;
    node.id = n;
    node.label = node_label(graph, ontology, n, request.lang);
    node.class_iri = primary_class(graph, ontology, n);
    if (node.class_iri) {
      node.class_label = ontology.resolve_label(*node.class_iri, request.lang);
      if (const auto* cls = ontology.find_class(*node.class_iri)) node.icon_key = cls->icon_key;
    }
    node.tooltip = collect_tooltip(graph, ontology, n, request.lang);
    if (store) node.spans = store->spans_for_node(n);
    view.nodes.push_back(std::move(node));
  }

  // Induced edges: every displayable edge between two included nodes.
  for (const Term& n : visited) {
    for (const auto& t : graph.match(n, std::nullopt, std::nullopt)) {
      if (is_display_edge(t, ontology) && visited.contains(t.object)) {
        view.edges.push_back(
            {t.subject, t.object, t.predicate, ontology.resolve_label(t.predicate, request.lang)});
      }
    }
  }
  return view;
}

std::vector<TableRow> triple_table(const ViewGraph& view, const rdf::Graph& graph,
                                   const onto::Ontology& ontology, std::string_view lang) {
  std::map<Term, std::string> labels;
  for (const auto& node : view.nodes) {
    labels.emplace(node.id, node_label(graph, ontology, node.id, lang));
  }
  auto label_of = [&](const Term& t) {
    auto it = labels.find(t);
    return it != labels.end() ? it->second : node_label(graph, ontology, t, lang);
  };

  std::vector<TableRow> rows;
  for (const auto& edge : view.edges) {
    rows.push_back({label_of(edge.source), ontology.resolve_label(edge.property, lang),
                    label_of(edge.target)});
  }
  for (const auto& node : view.nodes) {
    for (const auto& entry : collect_tooltip(graph, ontology, node.id, lang)) {
      rows.push_back({labels.at(node.id), entry.property, entry.value});
    }
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace kgatlas::facet
