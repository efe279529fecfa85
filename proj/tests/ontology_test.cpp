#include "kgatlas/ontology.hpp"

#include <gtest/gtest.h>

#include "kgatlas/parser.hpp"
#include "support/fixtures.hpp"

namespace kgatlas::onto {
namespace {

namespace kt = kgatlas::testing;

Ontology load(const std::string& turtle) {
  return load_ontology(rdf::parse_rdf(
      "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
      "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
      "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
      "@prefix ex: <http://ex.org/> .\n" +
          turtle,
      rdf::Format::turtle));
}

TEST(Ontology, FixtureDeclarations) {
  const auto& o = kt::benghazi().ontology;
  EXPECT_EQ(o.classes().size(), 5u);
  std::size_t object = 0, datatype = 0;
  for (const auto& [iri, p] : o.properties()) {
    (p.kind == PropertyKind::object ? object : datatype)++;
  }
  EXPECT_EQ(object, 4u);
  EXPECT_EQ(datatype, 4u);
  EXPECT_EQ(o.supported_languages(), (std::vector<std::string>{"ar", "en", "fr", "zh"}));
}

TEST(Ontology, PropertyKinds) {
  const auto& o = kt::benghazi().ontology;
  EXPECT_EQ(o.property_kind(kt::geol("hasAgent")), PropertyKind::object);
  EXPECT_EQ(o.property_kind(kt::geol("year")), PropertyKind::datatype);
  EXPECT_EQ(o.property_kind(kt::geol("undeclared")), PropertyKind::unknown);
  EXPECT_EQ(to_string(PropertyKind::datatype), "datatype");
}

TEST(Ontology, DomainRangeAndIcons) {
  const auto& o = kt::benghazi().ontology;
  const auto* agent = o.find_property(kt::geol("hasAgent"));
  ASSERT_NE(agent, nullptr);
  EXPECT_EQ(agent->domain, kt::geol("ViolentAct"));
  EXPECT_EQ(agent->range, kt::geol("Person"));
  const auto* year = o.find_property(kt::geol("year"));
  ASSERT_NE(year, nullptr);
  EXPECT_EQ(year->range, rdf::vocab::xsd("integer"));
  EXPECT_EQ(o.find_class(kt::geol("ViolentAct"))->icon_key, "violent-act");
}

TEST(Ontology, EmptyGraphGivesEmptyOntology) {
  auto o = load_ontology(rdf::Graph());
  EXPECT_TRUE(o.classes().empty());
  EXPECT_TRUE(o.properties().empty());
  EXPECT_TRUE(o.supported_languages().empty());
}

TEST(Ontology, LabelFallbackChain) {
  const auto& o = kt::benghazi().ontology;
  EXPECT_EQ(o.resolve_label(kt::geol("Person"), "fr"), "Personne");
  EXPECT_EQ(o.resolve_label(kt::geol("Person"), "de"), "Person");
  EXPECT_EQ(o.resolve_label(kt::geol("Person"), "zh"), "人物");
  EXPECT_EQ(o.resolve_label(kt::geol("hasPlace"), "zh"), "发生地点");
  EXPECT_EQ(o.resolve_label(rdf::Iri("http://ex.org/onto#Thing"), "en"), "Thing");

  LabelBundle instance{{"fr", "homme"}, {"en", "man"}};
  EXPECT_EQ(o.resolve_label(kt::ex("man1"), "fr", &instance), "homme");
  EXPECT_EQ(o.resolve_label(kt::ex("man1"), "ar", &instance), "man");
}

TEST(Ontology, FallsBackToSmallestTagWithoutEnglish) {
  auto o = load("ex:C a owl:Class ; rdfs:label \"Klasse\"@de , \"Classe\"@fr .");
  EXPECT_EQ(o.resolve_label(rdf::Iri("http://ex.org/C"), "zh"), "Klasse");
}

TEST(Ontology, UntaggedLabelKeptUnderEmptyTag) {
  auto o = load("ex:C a owl:Class ; rdfs:label \"Plain\" .");
  EXPECT_EQ(o.labels_of(rdf::Iri("http://ex.org/C"))->at(""), "Plain");
  EXPECT_EQ(o.resolve_label(rdf::Iri("http://ex.org/C"), "en"), "Plain");
}

TEST(Ontology, SelfLoopIsCyclic) {
  try {
    load("ex:A a owl:Class ; rdfs:subClassOf ex:A .");
    FAIL();
  } catch (const CyclicHierarchy& e) {
    EXPECT_FALSE(e.iris().empty());
  }
}

TEST(Ontology, LongerCycleIsDetected) {
  EXPECT_THROW(load("ex:A rdfs:subClassOf ex:B . ex:B rdfs:subClassOf ex:C . "
                    "ex:C rdfs:subClassOf ex:A ."),
               CyclicHierarchy);
  EXPECT_NO_THROW(load("ex:A rdfs:subClassOf ex:B . ex:C rdfs:subClassOf ex:B ."));
}

TEST(Ontology, ConflictingPropertyKinds) {
  try {
    load("ex:p a owl:ObjectProperty , owl:DatatypeProperty .");
    FAIL();
  } catch (const DuplicateDeclaration& e) {
    EXPECT_EQ(e.iri(), rdf::Iri("http://ex.org/p"));
  }
}

TEST(Ontology, DatatypePropertyNeedsLiteralRange) {
  EXPECT_THROW(load("ex:p a owl:DatatypeProperty ; rdfs:range ex:Person ."), OntologyError);
  EXPECT_NO_THROW(load("ex:p a owl:DatatypeProperty ; rdfs:range rdfs:Literal ."));
}

TEST(PickLabel, EmptyBundlesGiveNothing) {
  EXPECT_FALSE(pick_label(nullptr, nullptr, "en"));
  LabelBundle empty;
  EXPECT_FALSE(pick_label(&empty, &empty, "en"));
}

}  // namespace
}  // namespace kgatlas::onto
