#include "support/trials.hpp"

#include <algorithm>
#include <sstream>

#include "kgatlas/facets.hpp"
#include "kgatlas/parser.hpp"
#include "support/oracles.hpp"
#include "support/random_graph.hpp"

namespace kgatlas::testing {

namespace {

const char* const kLangs[] = {"en", "fr", "ar", "de"};

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// The random ontology labels each property "<local>-en" and "<local>-fr";
// other languages fall back to English, undeclared properties to the local name.
std::string oracle_property_label(const RandomCorpusGraph& c, const rdf::Iri& p,
                                  const std::string& lang) {
  const std::string local = p.value.substr(p.value.find_last_of('/') + 1);
  if (!c.object_properties.contains(p) && !c.datatype_properties.contains(p)) return local;
  return local + "-" + (lang == "fr" ? "fr" : "en");
}

std::set<rdf::Term> mentioned(const rdf::Graph& g) {
  std::set<rdf::Term> out;
  for (const auto& t : g.triples()) {
    out.insert(t.subject);
    if (rdf::is_resource(t.object)) out.insert(t.object);
  }
  return out;
}

template <typename T>
T any_of(std::mt19937_64& rng, const std::set<T>& s) {
  auto it = s.begin();
  std::advance(it, pick(rng, 0, s.size() - 1));
  return *it;
}

struct Setup {
  RandomCorpusGraph corpus;
  PredicateKinds kinds;
  facet::SubgraphRequest request;
  std::set<rdf::Term> seed_nodes;
};

// Returns false when the random graph offers nothing to seed from.
bool make_setup(std::mt19937_64& rng, Setup& s) {
  s.corpus = random_corpus_graph(rng);
  s.kinds = {s.corpus.object_properties, s.corpus.datatype_properties};
  const auto& g = s.corpus.graph;
  s.request.lang = kLangs[pick(rng, 0, 3)];
  s.request.depth = static_cast<long long>(pick(rng, 0, 4));

  std::set<rdf::Iri> populated;
  for (const auto& cls : s.corpus.classes) {
    if (!oracle_instances(g, {cls}).empty()) populated.insert(cls);
  }
  const auto candidates = mentioned(g);
  if (candidates.empty()) return false;

  if (!populated.empty() && pick(rng, 0, 2) == 0) {
    s.request.mode = facet::Mode::concepts;
    std::set<rdf::Iri> chosen;
    for (std::size_t i = 0, n = pick(rng, 1, 2); i < n; ++i) chosen.insert(any_of(rng, populated));
    for (const auto& c : chosen) s.request.seeds.push_back(c);
    s.seed_nodes = oracle_instances(g, chosen);
  } else {
    s.request.mode = facet::Mode::individuals;
    for (std::size_t i = 0, n = pick(rng, 1, 3); i < n; ++i) {
      auto node = any_of(rng, candidates);
      s.request.seeds.push_back(node);
      s.seed_nodes.insert(node);
    }
  }
  return true;
}

std::string describe(const Setup& s) {
  std::ostringstream out;
  out << "mode=" << facet::to_string(s.request.mode) << " depth=" << s.request.depth
      << " lang=" << s.request.lang << " seeds=";
  for (const auto& t : s.request.seeds) out << rdf::display_id(t) << ' ';
  out << "\n" << rdf::serialize_ntriples(s.corpus.graph);
  return out.str();
}

}  // namespace

std::string subgraph_trial(std::mt19937_64& rng) {
  Setup s;
  if (!make_setup(rng, s)) return {};
  const auto& g = s.corpus.graph;

  facet::ViewGraph view;
  try {
    view = facet::extract_subgraph(g, s.corpus.ontology, s.request);
  } catch (const std::exception& e) {
    return std::string("extract_subgraph threw: ") + e.what() + "\n" + describe(s);
  }

  const auto want_nodes = oracle_bfs(g, s.kinds, s.seed_nodes, s.request.depth);
  std::set<rdf::Term> got_nodes;
  for (std::size_t i = 0; i < view.nodes.size(); ++i) {
    if (i > 0 && !(view.nodes[i - 1].id < view.nodes[i].id)) return "nodes not sorted\n" + describe(s);
    got_nodes.insert(view.nodes[i].id);
  }
  if (got_nodes != want_nodes) return "node set differs from oracle\n" + describe(s);

  const auto want_edges = oracle_induced_edges(g, s.kinds, want_nodes);
  std::set<rdf::Triple> got_edges;
  for (std::size_t i = 0; i < view.edges.size(); ++i) {
    const auto& e = view.edges[i];
    rdf::Triple t(e.source, e.property, e.target);
    if (!got_edges.insert(t).second) return "duplicate edge\n" + describe(s);
    if (i > 0) {
      const auto& p = view.edges[i - 1];
      if (!(std::tie(p.source, p.property, p.target) < std::tie(e.source, e.property, e.target))) {
        return "edges not sorted\n" + describe(s);
      }
    }
    if (s.kinds.datatype.contains(e.property)) return "datatype property drawn as edge\n" + describe(s);
    if (e.label != oracle_property_label(s.corpus, e.property, s.request.lang)) {
      return "edge label '" + e.label + "' unexpected\n" + describe(s);
    }
  }
  if (got_edges != want_edges) return "edge set differs from oracle\n" + describe(s);

  // Every literal assertion of an included node shows up exactly once.
  for (const auto& node : view.nodes) {
    std::vector<facet::TooltipEntry> want;
    for (const auto& t : oracle_datatype_assertions(g, node.id)) {
      want.push_back({oracle_property_label(s.corpus, t.predicate, s.request.lang),
                      std::get<rdf::Literal>(t.object).lexical});
    }
    std::sort(want.begin(), want.end());
    if (node.tooltip != want) {
      return "tooltip of " + rdf::display_id(node.id) + " differs from oracle\n" + describe(s);
    }
  }
  return {};
}

std::string depth_trial(std::mt19937_64& rng) {
  Setup s;
  if (!make_setup(rng, s)) return {};
  const auto& g = s.corpus.graph;
  const auto node_count = static_cast<long long>(mentioned(g).size());

  std::set<rdf::Term> previous;
  std::set<rdf::Triple> previous_edges;
  for (long long d = 0; d <= node_count + 1; ++d) {
    s.request.depth = d;
    auto view = facet::extract_subgraph(g, s.corpus.ontology, s.request);
    std::set<rdf::Term> nodes;
    for (const auto& n : view.nodes) nodes.insert(n.id);
    std::set<rdf::Triple> edges;
    for (const auto& e : view.edges) edges.emplace(e.source, e.property, e.target);
    if (!std::includes(nodes.begin(), nodes.end(), previous.begin(), previous.end()) ||
        !std::includes(edges.begin(), edges.end(), previous_edges.begin(), previous_edges.end())) {
      return "depth " + std::to_string(d) + " lost nodes or edges\n" + describe(s);
    }
    if (d > node_count && (nodes != previous || edges != previous_edges)) {
      return "not stable at depth " + std::to_string(d) + "\n" + describe(s);
    }
    previous = std::move(nodes);
    previous_edges = std::move(edges);
  }
  if (previous != oracle_bfs(g, s.kinds, s.seed_nodes, node_count + 1)) {
    return "closure differs from oracle component\n" + describe(s);
  }
  return {};
}

std::string roundtrip_trial(std::mt19937_64& rng) {
  auto g = random_rdf_graph(rng);
  const std::string text = rdf::serialize_ntriples(g);
  rdf::Graph back;
  try {
    back = rdf::parse_rdf(text, rdf::Format::ntriples);
  } catch (const rdf::SyntaxError& e) {
    return std::string("reparse failed: ") + e.what() + "\n" + text;
  }
  if (!isomorphic(g, back)) return "reparsed graph not isomorphic\n" + text;
  if (rdf::serialize_ntriples(back) != text) return "serialization not stable\n" + text;
  return {};
}

}  // namespace kgatlas::testing
