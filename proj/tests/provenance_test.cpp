#include "kgatlas/provenance.hpp"

#include <gtest/gtest.h>

#include "kgatlas/parser.hpp"
#include "support/fixtures.hpp"

namespace kgatlas::prov {
namespace {

namespace kt = kgatlas::testing;

rdf::Graph spans(const std::string& body) {
  return rdf::parse_rdf("@prefix viz: <http://kg-atlas.dev/viz#> .\n" + body,
                        rdf::Format::turtle);
}

TEST(Provenance, FixtureText) {
  EXPECT_EQ(kt::benghazi().documents.at("ex1"), kt::kExampleSentence);
}

TEST(Provenance, AttackSpanCoversAttacked) {
  const auto& f = kt::benghazi();
  auto s = f.store.spans_for_node(kt::ex("attack1"));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], (TextSpan{"ex1", 52, 60}));
  EXPECT_EQ(kt::kExampleSentence.substr(s[0].begin, s[0].end - s[0].begin), "attacked");
  EXPECT_EQ(f.store.span_count(), 5u);
}

TEST(Provenance, NodesAtOffset) {
  const auto& f = kt::benghazi();
  EXPECT_EQ(f.store.nodes_at_offset("ex1", 56), std::vector<rdf::Term>{kt::ex("attack1")});
  EXPECT_EQ(f.store.nodes_at_offset("ex1", 52), std::vector<rdf::Term>{kt::ex("attack1")});
  EXPECT_TRUE(f.store.nodes_at_offset("ex1", 60).empty());
  EXPECT_TRUE(f.store.nodes_at_offset("ex1", 2).empty());  // whitespace after "In"
  EXPECT_TRUE(f.store.nodes_at_offset("ex1", -1).empty());
  EXPECT_TRUE(f.store.nodes_at_offset("ex1", 1000).empty());
  EXPECT_EQ(f.store.nodes_at_offset("ex1", 39), std::vector<rdf::Term>{kt::ex("benghazi")});
  EXPECT_THROW(f.store.nodes_at_offset("nope", 3), UnknownDocument);
}

TEST(Provenance, AnnotatedNodes) {
  EXPECT_EQ(kt::benghazi().store.annotated_nodes().size(), 5u);
  EXPECT_TRUE(kt::benghazi().store.spans_for_node(kt::ex("ghost")).empty());
}

TEST(Provenance, OffsetsCountCodepoints) {
  auto g = spans("<x:a> viz:sourceSpan [ viz:doc \"d\" ; viz:begin 2 ; viz:end 4 ] .");
  auto store = load_provenance(g, {{"d", "ملك عادل"}});
  EXPECT_EQ(store.spans_for_node(rdf::Iri("x:a"))[0].end, 4u);
  EXPECT_EQ(store.nodes_at_offset("d", 3), std::vector<rdf::Term>{rdf::Iri("x:a")});
  EXPECT_THROW(load_provenance(spans("<x:a> viz:sourceSpan [ viz:doc \"d\" ; viz:begin 0 ; "
                                     "viz:end 9 ] ."),
                               {{"d", "ملك عادل"}}),
               SpanOutOfBounds);
}

TEST(Provenance, MultipleSpansSorted) {
  auto g = spans(
      "<x:a> viz:sourceSpan [ viz:doc \"d\" ; viz:begin 5 ; viz:end 6 ] ,"
      " [ viz:doc \"d\" ; viz:begin 0 ; viz:end 2 ] ,"
      " [ viz:doc \"c\" ; viz:begin 1 ; viz:end 2 ] .");
  auto store = load_provenance(g, {{"c", "abc"}, {"d", "abcdefg"}});
  EXPECT_EQ(store.spans_for_node(rdf::Iri("x:a")),
            (std::vector<TextSpan>{{"c", 1, 2}, {"d", 0, 2}, {"d", 5, 6}}));
}

TEST(Provenance, OverlappingSpansReturnAllNodes) {
  auto g = spans(
      "<x:b> viz:sourceSpan [ viz:doc \"d\" ; viz:begin 0 ; viz:end 5 ] .\n"
      "<x:a> viz:sourceSpan [ viz:doc \"d\" ; viz:begin 3 ; viz:end 4 ] .");
  auto store = load_provenance(g, {{"d", "abcdef"}});
  EXPECT_EQ(store.nodes_at_offset("d", 3),
            (std::vector<rdf::Term>{rdf::Iri("x:a"), rdf::Iri("x:b")}));
}

TEST(Provenance, Errors) {
  EXPECT_THROW(load_provenance(spans("<x:a> viz:sourceSpan [ viz:doc \"d\" ; viz:begin 3 ; "
                                     "viz:end 3 ] ."),
                               {{"d", "abcdef"}}),
               SpanOutOfBounds);
  EXPECT_THROW(load_provenance(spans("<x:a> viz:sourceSpan [ viz:doc \"d\" ; viz:begin 0 ; "
                                     "viz:end 7 ] ."),
                               {{"d", "abcdef"}}),
               SpanOutOfBounds);
  EXPECT_THROW(load_provenance(spans("<x:a> viz:sourceSpan [ viz:doc \"zz\" ; viz:begin 0 ; "
                                     "viz:end 1 ] ."),
                               {{"d", "abcdef"}}),
               UnknownDocument);
  EXPECT_THROW(load_provenance(spans("<x:a> viz:sourceSpan [ viz:doc \"d\" ; viz:begin 0 ] ."),
                               {{"d", "abcdef"}}),
               MalformedSpan);
  EXPECT_THROW(load_provenance(spans("<x:a> viz:sourceSpan [ viz:doc \"d\" ; viz:begin \"x\" ; "
                                     "viz:end 1 ] ."),
                               {{"d", "abcdef"}}),
               MalformedSpan);
  EXPECT_THROW(load_provenance(rdf::Graph(), {{"d", "bad \xFF"}}), ProvenanceError);
}

TEST(Provenance, NoAnnotationsNoDocuments) {
  auto store = load_provenance(rdf::Graph(), {});
  EXPECT_EQ(store.span_count(), 0u);
  EXPECT_TRUE(store.documents().empty());
  EXPECT_EQ(store.document("x"), nullptr);
}

}  // namespace
}  // namespace kgatlas::prov
