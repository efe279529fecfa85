#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kgatlas::testing {

std::string source_path(const std::string& relative) {
  return std::string(KGATLAS_SOURCE_DIR) + "/" + relative;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const Fixture& benghazi() {
  static const Fixture fixture = [] {
    Fixture f;
    f.graph = rdf::parse_rdf(read_text(source_path("fixtures/benghazi.ttl")), rdf::Format::turtle);
    f.ontology = onto::load_ontology(
        rdf::parse_rdf(read_text(source_path("fixtures/geol-mini.ttl")), rdf::Format::turtle));
    f.documents["ex1"] = read_text(source_path("fixtures/ex1.txt"));
    f.store = prov::load_provenance(f.graph, f.documents);
    return f;
  }();
  return fixture;
}

}  // namespace kgatlas::testing
