#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace kgatlas::testing {

namespace {

const std::string kType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
const std::string kLabel = "http://www.w3.org/2000/01/rdf-schema#label";
const std::string kVizNs = "http://kg-atlas.dev/viz#";

bool is_annotation(const rdf::Iri& p) {
  return p.value == kType || p.value == kLabel || p.value.rfind(kVizNs, 0) == 0;
}

bool is_meta(const rdf::Iri& iri) {
  for (const char* ns : {"http://www.w3.org/1999/02/22-rdf-syntax-ns#",
                         "http://www.w3.org/2000/01/rdf-schema#",
                         "http://www.w3.org/2002/07/owl#"}) {
    if (iri.value.rfind(ns, 0) == 0) return true;
  }
  return false;
}

}  // namespace

bool oracle_is_edge(const rdf::Triple& t, const PredicateKinds& kinds) {
  if (std::holds_alternative<rdf::Literal>(t.object)) return false;
  if (is_annotation(t.predicate)) return false;
  return !kinds.datatype.contains(t.predicate);
}

std::vector<rdf::Triple> oracle_match(const rdf::Graph& g, const std::optional<rdf::Term>& s,
                                      const std::optional<rdf::Iri>& p,
                                      const std::optional<rdf::Term>& o) {
  std::vector<rdf::Triple> out;
  for (const auto& t : g.triples()) {
    if (s && t.subject != *s) continue;
    if (p && t.predicate != *p) continue;
    if (o && t.object != *o) continue;
    out.push_back(t);
  }
  return out;
}

std::set<rdf::Term> oracle_bfs(const rdf::Graph& g, const PredicateKinds& kinds,
                               const std::set<rdf::Term>& seeds, long long depth) {
  std::set<rdf::Term> visited = seeds;
  std::set<rdf::Term> frontier = seeds;
  for (long long d = 0; d < depth && !frontier.empty(); ++d) {
    std::set<rdf::Term> next;
    for (const auto& t : g.triples()) {
      if (!oracle_is_edge(t, kinds)) continue;
      if (frontier.contains(t.subject) && !visited.contains(t.object)) next.insert(t.object);
      if (frontier.contains(t.object) && !visited.contains(t.subject)) next.insert(t.subject);
    }
    visited.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  return visited;
}

std::set<rdf::Triple> oracle_induced_edges(const rdf::Graph& g, const PredicateKinds& kinds,
                                           const std::set<rdf::Term>& nodes) {
  std::set<rdf::Triple> out;
  for (const auto& t : g.triples()) {
    if (oracle_is_edge(t, kinds) && nodes.contains(t.subject) && nodes.contains(t.object)) {
      out.insert(t);
    }
  }
  return out;
}

std::vector<rdf::Triple> oracle_datatype_assertions(const rdf::Graph& g, const rdf::Term& node) {
  std::vector<rdf::Triple> out;
  for (const auto& t : g.triples()) {
    if (t.subject == node && std::holds_alternative<rdf::Literal>(t.object) &&
        !is_annotation(t.predicate)) {
      out.push_back(t);
    }
  }
  return out;
}

std::set<rdf::Term> oracle_instances(const rdf::Graph& g, const std::set<rdf::Iri>& classes) {
  std::set<rdf::Term> out;
  for (const auto& t : g.triples()) {
    if (t.predicate.value != kType) continue;
    const auto* cls = std::get_if<rdf::Iri>(&t.object);
    if (cls && classes.contains(*cls) && !is_meta(*cls)) out.insert(t.subject);
  }
  return out;
}

bool isomorphic(const rdf::Graph& a, const rdf::Graph& b) {
  if (a.size() != b.size()) return false;

  auto blanks_of = [](const rdf::Graph& g) {
    std::set<std::string> out;
    for (const auto& t : g.triples()) {
      if (auto* s = std::get_if<rdf::BlankNode>(&t.subject)) out.insert(s->label);
      if (auto* o = std::get_if<rdf::BlankNode>(&t.object)) out.insert(o->label);
    }
    return std::vector<std::string>(out.begin(), out.end());
  };
  const auto blanks_a = blanks_of(a);
  const auto blanks_b = blanks_of(b);
  if (blanks_a.size() != blanks_b.size()) return false;

  // Signature: sorted description of every triple touching the blank node,
  // with other blank nodes masked.
  auto signature = [](const rdf::Graph& g, const std::string& label) {
    std::vector<std::string> parts;
    auto mask = [](const rdf::Term& t) {
      return rdf::is_blank(t) ? std::string("_") : rdf::to_ntriples(t);
    };
    for (const auto& t : g.triples()) {
      const auto* s = std::get_if<rdf::BlankNode>(&t.subject);
      const auto* o = std::get_if<rdf::BlankNode>(&t.object);
      if (s && s->label == label) parts.push_back("S " + t.predicate.value + " " + mask(t.object));
      if (o && o->label == label) parts.push_back("O " + t.predicate.value + " " + mask(t.subject));
    }
    std::sort(parts.begin(), parts.end());
    std::string sig;
    for (const auto& p : parts) sig += p + "|";
    return sig;
  };
  std::map<std::string, std::string> sig_a, sig_b;
  for (const auto& l : blanks_a) sig_a[l] = signature(a, l);
  for (const auto& l : blanks_b) sig_b[l] = signature(b, l);

  std::map<std::string, std::string> mapping;
  std::set<std::string> used;
  auto apply = [&](const rdf::Term& t) -> rdf::Term {
    if (auto* bn = std::get_if<rdf::BlankNode>(&t)) return rdf::BlankNode(mapping.at(bn->label));
    return t;
  };
  auto check = [&] {
    for (const auto& t : a.triples()) {
      if (!b.contains(rdf::Triple(apply(t.subject), t.predicate, apply(t.object)))) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == blanks_a.size()) return check();
    const auto& la = blanks_a[i];
    for (const auto& lb : blanks_b) {
      if (used.contains(lb) || sig_a[la] != sig_b[lb]) continue;
      mapping[la] = lb;
      used.insert(lb);
      if (search(i + 1)) return true;
      used.erase(lb);
      mapping.erase(la);
    }
    return false;
  };
  return search(0);
}

}  // namespace kgatlas::testing
