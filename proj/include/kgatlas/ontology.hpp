#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kgatlas/graph.hpp"

namespace kgatlas::onto {

using rdf::Iri;

// Display names keyed by lowercase language tag. Untagged labels are kept
// under the empty tag.
using LabelBundle = std::map<std::string, std::string>;

struct OntologyClass {
  Iri iri;
  LabelBundle labels;
  std::set<Iri> parents;
  std::optional<std::string> icon_key;
};

enum class PropertyKind { object, datatype, unknown };

std::string_view to_string(PropertyKind kind);

struct OntologyProperty {
  Iri iri;
  PropertyKind kind = PropertyKind::unknown;
  LabelBundle labels;
  std::optional<Iri> domain;
  std::optional<Iri> range;
};

class OntologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CyclicHierarchy : public OntologyError {
 public:
  explicit CyclicHierarchy(std::vector<Iri> cycle);
  const std::vector<Iri>& iris() const { return iris_; }

 private:
  std::vector<Iri> iris_;
};

class DuplicateDeclaration : public OntologyError {
 public:
  explicit DuplicateDeclaration(Iri iri);
  const Iri& iri() const { return iri_; }

 private:
  Iri iri_;
};

class Ontology {
 public:
  Ontology() = default;

  const std::map<Iri, OntologyClass>& classes() const { return classes_; }
  const std::map<Iri, OntologyProperty>& properties() const { return properties_; }
  // Sorted language tags found on class and property labels.
  const std::vector<std::string>& supported_languages() const { return languages_; }

  const OntologyClass* find_class(const Iri& iri) const;
  const OntologyProperty* find_property(const Iri& iri) const;
  // Labels declared for `iri`, whether class or property; nullptr if unknown.
  const LabelBundle* labels_of(const Iri& iri) const;

  PropertyKind property_kind(const Iri& predicate) const;

  // Fallback chain: instance[lang], ontology[lang], instance[en], ontology[en],
  // smallest-tag label of either bundle, then the IRI's local name.
  std::string resolve_label(const Iri& entity, std::string_view lang,
                            const LabelBundle* instance_labels = nullptr) const;

  friend Ontology load_ontology(const rdf::Graph& graph);

 private:
  std::map<Iri, OntologyClass> classes_;
  std::map<Iri, OntologyProperty> properties_;
  std::vector<std::string> languages_;
};

Ontology load_ontology(const rdf::Graph& graph);

// Fallback applied over a single bundle, used for individuals and blank nodes
// that the ontology does not describe.
std::optional<std::string> pick_label(const LabelBundle* primary, const LabelBundle* secondary,
                                      std::string_view lang);

}  // namespace kgatlas::onto
