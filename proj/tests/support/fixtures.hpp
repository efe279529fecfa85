#pragma once

#include <map>
#include <string>

#include "kgatlas/graph.hpp"
#include "kgatlas/ontology.hpp"
#include "kgatlas/parser.hpp"
#include "kgatlas/provenance.hpp"

namespace kgatlas::testing {

std::string source_path(const std::string& relative);
std::string read_text(const std::string& path);

inline const std::string kGeol = "http://kg-atlas.dev/geol#";
inline const std::string kEx = "http://kg-atlas.dev/example/";

inline rdf::Iri geol(const std::string& local) { return rdf::Iri(kGeol + local); }
inline rdf::Iri ex(const std::string& local) { return rdf::Iri(kEx + local); }

// Contents of fixtures/ex1.txt.
inline const std::string kExampleSentence =
    "In September 2012, the US consulate in Benghazi was attacked by armed men.";

struct Fixture {
  rdf::Graph graph;
  onto::Ontology ontology;
  prov::DocumentStore store;
  std::map<std::string, std::string> documents;
};

// fixtures/benghazi.ttl + fixtures/geol-mini.ttl + fixtures/ex1.txt
const Fixture& benghazi();

}  // namespace kgatlas::testing
