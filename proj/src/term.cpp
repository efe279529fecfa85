#include "kgatlas/term.hpp"

#include <cstdio>
#include <stdexcept>

namespace kgatlas::rdf {

namespace vocab {

namespace {
Iri join(std::string_view ns, std::string_view local) {
  std::string v(ns);
  v += local;
  return Iri(std::move(v));
}
}  // namespace

Iri rdf(std::string_view local) { return join(kRdf, local); }
Iri rdfs(std::string_view local) { return join(kRdfs, local); }
Iri owl(std::string_view local) { return join(kOwl, local); }
Iri xsd(std::string_view local) { return join(kXsd, local); }
Iri viz(std::string_view local) { return join(kViz, local); }

const Iri& type() {
  static const Iri iri = rdf("type");
  return iri;
}
const Iri& label() {
  static const Iri iri = rdfs("label");
  return iri;
}
const Iri& lang_string() {
  static const Iri iri = rdf("langString");
  return iri;
}
const Iri& xsd_string() {
  static const Iri iri = xsd("string");
  return iri;
}

}  // namespace vocab

bool is_valid_iri(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      return false;
    }
  }
  const auto colon = text.find(':');
  return colon != std::string_view::npos && colon > 0;
}

Literal make_literal(std::string lexical) {
  return Literal{std::move(lexical), vocab::xsd_string(), {}};
}

Literal make_literal(std::string lexical, Iri datatype) {
  return Literal{std::move(lexical), std::move(datatype), {}};
}

Literal make_lang_literal(std::string lexical, std::string language) {
  return Literal{std::move(lexical), vocab::lang_string(), std::move(language)};
}

std::string local_name(const Iri& iri) {
  const std::string& v = iri.value;
  if (auto hash = v.rfind('#'); hash != std::string::npos) {
    return v.substr(hash + 1);
  }
  if (auto slash = v.rfind('/'); slash != std::string::npos) {
    return v.substr(slash + 1);
  }
  return v;
}

namespace {

void append_uchar(std::string& out, unsigned char c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "\\u%04X", c);
  out += buf;
}

std::string escape_iri(std::string_view v) {
  std::string out;
  out.reserve(v.size());
  for (char ch : v) {
    const auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '<': case '>': case '"': case '{': case '}':
      case '|': case '^': case '`': case '\\':
        append_uchar(out, c);
        break;
      default:
        if (c <= 0x20) {
          append_uchar(out, c);
        } else {
          out.push_back(ch);
        }
    }
  }
  return out;
}

std::string escape_string(std::string_view v) {
  std::string out;
  out.reserve(v.size() + 2);
  for (char ch : v) {
    const auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20 || c == 0x7F) {
          append_uchar(out, c);
        } else {
          out.push_back(ch);
        }
    }
  }
  return out;
}

}  // namespace

std::string to_ntriples(const Term& t) {
  if (const auto* iri = std::get_if<Iri>(&t)) {
    return "<" + escape_iri(iri->value) + ">";
  }
  if (const auto* b = std::get_if<BlankNode>(&t)) {
    return "_:" + b->label;
  }
  const auto& lit = std::get<Literal>(t);
  std::string out = "\"" + escape_string(lit.lexical) + "\"";
  if (!lit.language.empty()) {
    out += "@" + lit.language;
  } else if (lit.datatype != vocab::xsd_string()) {
    out += "^^<" + escape_iri(lit.datatype.value) + ">";
  }
  return out;
}

std::string display_id(const Term& t) {
  if (const auto* iri = std::get_if<Iri>(&t)) return iri->value;
  if (const auto* b = std::get_if<BlankNode>(&t)) return "_:" + b->label;
  return std::get<Literal>(t).lexical;
}

Triple::Triple(Term s, Iri p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (is_literal(subject)) {
    throw std::invalid_argument("triple subject must be an IRI or blank node");
  }
}

}  // namespace kgatlas::rdf
