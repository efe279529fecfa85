#include "kgatlas/ontology.hpp"

#include <algorithm>
#include <functional>

namespace kgatlas::onto {

namespace rv = rdf::vocab;

std::string_view to_string(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::object: return "object";
    case PropertyKind::datatype: return "datatype";
    case PropertyKind::unknown: break;
  }
  return "unknown";
}

namespace {

std::string join_iris(const std::vector<Iri>& iris) {
  std::string out;
  for (const auto& iri : iris) {
    if (!out.empty()) out += ", ";
    out += iri.value;
  }
  return out;
}

bool is_datatype_iri(const Iri& iri) {
  return iri.value.starts_with(rv::kXsd) || iri == rv::rdfs("Literal") ||
         iri == rv::lang_string() || iri == rv::rdf("PlainLiteral");
}

std::optional<Iri> single_iri(const rdf::Graph& g, const Iri& subject, const Iri& predicate) {
  for (const auto& t : g.match(rdf::Term(subject), predicate, std::nullopt)) {
    if (const auto* iri = std::get_if<Iri>(&t.object)) return *iri;
  }
  return std::nullopt;
}

LabelBundle read_labels(const rdf::Graph& g, const Iri& subject) {
  LabelBundle bundle;
  for (const auto& t : g.match(rdf::Term(subject), rv::label(), std::nullopt)) {
    const auto* lit = std::get_if<rdf::Literal>(&t.object);
    if (!lit || lit->lexical.empty()) continue;
    // several labels in one language: keep the smallest for determinism
    auto [it, inserted] = bundle.try_emplace(lit->language, lit->lexical);
    if (!inserted && lit->lexical < it->second) it->second = lit->lexical;
  }
  return bundle;
}

}  // namespace

CyclicHierarchy::CyclicHierarchy(std::vector<Iri> cycle)
    : OntologyError("cyclic subclass hierarchy: " + join_iris(cycle)), iris_(std::move(cycle)) {}

DuplicateDeclaration::DuplicateDeclaration(Iri iri)
    : OntologyError("declared with conflicting kinds: " + iri.value), iri_(std::move(iri)) {}

const OntologyClass* Ontology::find_class(const Iri& iri) const {
  auto it = classes_.find(iri);
  return it == classes_.end() ? nullptr : &it->second;
}

const OntologyProperty* Ontology::find_property(const Iri& iri) const {
  auto it = properties_.find(iri);
  return it == properties_.end() ? nullptr : &it->second;
}

const LabelBundle* Ontology::labels_of(const Iri& iri) const {
  if (const auto* c = find_class(iri)) return &c->labels;
  if (const auto* p = find_property(iri)) return &p->labels;
  return nullptr;
}

PropertyKind Ontology::property_kind(const Iri& predicate) const {
  const auto* p = find_property(predicate);
  return p ? p->kind : PropertyKind::unknown;
}

std::optional<std::string> pick_label(const LabelBundle* primary, const LabelBundle* secondary,
                                      std::string_view lang) {
  auto lookup = [](const LabelBundle* b, std::string_view tag) -> const std::string* {
    if (!b) return nullptr;
    auto it = b->find(std::string(tag));
    return it == b->end() ? nullptr : &it->second;
  };
  for (std::string_view tag : {lang, std::string_view("en")}) {
    if (const auto* v = lookup(primary, tag)) return *v;
    if (const auto* v = lookup(secondary, tag)) return *v;
  }
  const std::pair<const std::string, std::string>* best = nullptr;
  for (const auto* b : {primary, secondary}) {
    if (!b || b->empty()) continue;
    const auto& first = *b->begin();
    if (!best || first.first < best->first) best = &first;
  }
  if (best) return best->second;
  return std::nullopt;
}

std::string Ontology::resolve_label(const Iri& entity, std::string_view lang,
                                    const LabelBundle* instance_labels) const {
  if (auto label = pick_label(instance_labels, labels_of(entity), lang)) return *label;
  std::string local = rdf::local_name(entity);
  return local.empty() ? entity.value : local;
}

Ontology load_ontology(const rdf::Graph& graph) {
  Ontology o;

  auto declared = [&](const Iri& meta) {
    std::vector<Iri> out;
    for (const auto& t : graph.match(std::nullopt, rv::type(), rdf::Term(meta))) {
      if (const auto* iri = std::get_if<Iri>(&t.subject)) out.push_back(*iri);
    }
    return out;
  };

  std::set<Iri> class_iris;
  for (const Iri& iri : declared(rv::owl("Class"))) class_iris.insert(iri);
  for (const Iri& iri : declared(rv::rdfs("Class"))) class_iris.insert(iri);
  // a subclass axiom implicitly declares its subject as a class
  for (const auto& t : graph.match(std::nullopt, rv::rdfs("subClassOf"), std::nullopt)) {
    if (const auto* iri = std::get_if<Iri>(&t.subject)) class_iris.insert(*iri);
  }

  for (const Iri& iri : class_iris) {
    OntologyClass c;
    c.iri = iri;
    c.labels = read_labels(graph, iri);
    for (const auto& t : graph.match(rdf::Term(iri), rv::rdfs("subClassOf"), std::nullopt)) {
      if (const auto* parent = std::get_if<Iri>(&t.object)) c.parents.insert(*parent);
    }
    for (const auto& t : graph.match(rdf::Term(iri), rv::viz("icon"), std::nullopt)) {
      if (const auto* lit = std::get_if<rdf::Literal>(&t.object)) {
        c.icon_key = lit->lexical;
        break;
      }
    }
    o.classes_.emplace(iri, std::move(c));
  }

  auto add_properties = [&](const Iri& meta, PropertyKind kind) {
    for (const Iri& iri : declared(meta)) {
      if (o.classes_.contains(iri) || o.properties_.contains(iri)) {
        throw DuplicateDeclaration(iri);
      }
      OntologyProperty p;
      p.iri = iri;
      p.kind = kind;
      p.labels = read_labels(graph, iri);
      p.domain = single_iri(graph, iri, rv::rdfs("domain"));
      p.range = single_iri(graph, iri, rv::rdfs("range"));
      if (kind == PropertyKind::datatype && p.range && !is_datatype_iri(*p.range)) {
        throw OntologyError("datatype property " + iri.value +
                            " has non-datatype range " + p.range->value);
      }
      o.properties_.emplace(iri, std::move(p));
    }
  };
  add_properties(rv::owl("ObjectProperty"), PropertyKind::object);
  add_properties(rv::owl("DatatypeProperty"), PropertyKind::datatype);

  // Subclass cycle detection, depth-first with an explicit path.
  enum class Mark { fresh, active, done };
  std::map<Iri, Mark> marks;
  std::vector<Iri> path;
  std::function<void(const Iri&)> visit = [&](const Iri& iri) {
    marks[iri] = Mark::active;
    path.push_back(iri);
    if (const auto* c = o.find_class(iri)) {
      for (const Iri& parent : c->parents) {
        auto m = marks.contains(parent) ? marks[parent] : Mark::fresh;
        if (m == Mark::active) {
          auto start = std::find(path.begin(), path.end(), parent);
          throw CyclicHierarchy(std::vector<Iri>(start, path.end()));
        }
        if (m == Mark::fresh) visit(parent);
      }
    }
    path.pop_back();
    marks[iri] = Mark::done;
  };
  for (const auto& [iri, c] : o.classes_) {
    if (!marks.contains(iri)) visit(iri);
  }

  std::set<std::string> tags;
  auto collect = [&](const LabelBundle& b) {
    for (const auto& [tag, text] : b) {
      if (!tag.empty()) tags.insert(tag);
    }
  };
  for (const auto& [iri, c] : o.classes_) collect(c.labels);
  for (const auto& [iri, p] : o.properties_) collect(p.labels);
  o.languages_.assign(tags.begin(), tags.end());
  return o;
}

}  // namespace kgatlas::onto
