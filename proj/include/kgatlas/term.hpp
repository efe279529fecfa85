#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>

namespace kgatlas::rdf {

struct Iri {
  std::string value;

  explicit Iri(std::string v = {}) : value(std::move(v)) {}
  auto operator<=>(const Iri&) const = default;
};

struct BlankNode {
  std::string label;

  explicit BlankNode(std::string l = {}) : label(std::move(l)) {}
  auto operator<=>(const BlankNode&) const = default;
};

struct Literal {
  std::string lexical;
  Iri datatype;
  std::string language;  // lowercase; empty when untagged

  auto operator<=>(const Literal&) const = default;
};

// Ordering is Iri < BlankNode < Literal, then field-wise.
using Term = std::variant<Iri, BlankNode, Literal>;

namespace vocab {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kViz = "http://kg-atlas.dev/viz#";

Iri rdf(std::string_view local);
Iri rdfs(std::string_view local);
Iri owl(std::string_view local);
Iri xsd(std::string_view local);
Iri viz(std::string_view local);

const Iri& type();
const Iri& label();
const Iri& lang_string();
const Iri& xsd_string();
}  // namespace vocab

// Absolute IRI: non-empty, no whitespace, has a scheme separator.
bool is_valid_iri(std::string_view text);

Literal make_literal(std::string lexical);
Literal make_literal(std::string lexical, Iri datatype);
Literal make_lang_literal(std::string lexical, std::string language);

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline bool is_blank(const Term& t) { return std::holds_alternative<BlankNode>(t); }
inline bool is_literal(const Term& t) { return std::holds_alternative<Literal>(t); }
inline bool is_resource(const Term& t) { return !is_literal(t); }

// Text after the last '#', else after the last '/', else the full IRI.
std::string local_name(const Iri& iri);

// N-Triples surface form of a term (`<iri>`, `_:label`, `"lex"@lang`, ...).
std::string to_ntriples(const Term& t);

// Compact display form: the IRI itself, `_:label` for blank nodes, the
// lexical form for literals.
std::string display_id(const Term& t);

struct Triple {
  Term subject;
  Iri predicate;
  Term object;

  Triple(Term s, Iri p, Term o);
  auto operator<=>(const Triple&) const = default;
};

}  // namespace kgatlas::rdf
