#include "kgatlas/parser.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "kgatlas/utf8.hpp"

namespace kgatlas::rdf {

SyntaxError::SyntaxError(std::size_t line, std::size_t column, std::string message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

UnknownPrefix::UnknownPrefix(std::size_t line, std::size_t column, std::string prefix)
    : SyntaxError(line, column, "undeclared prefix '" + prefix + ":'"),
      prefix_(std::move(prefix)) {}

std::optional<Format> format_from_name(std::string_view name) {
  if (name == "turtle" || name == "ttl") return Format::turtle;
  if (name == "ntriples" || name == "nt" || name == "n-triples") return Format::ntriples;
  return std::nullopt;
}

Format format_for_path(std::string_view path) {
  return path.size() >= 3 && path.substr(path.size() - 3) == ".nt" ? Format::ntriples
                                                                    : Format::turtle;
}

// ---------------------------------------------------------------------------
// IRI resolution

namespace {

struct IriParts {
  std::optional<std::string> scheme;
  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;
};

bool is_scheme_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_scheme_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '+' || c == '-' || c == '.';
}

std::optional<std::size_t> scheme_length(std::string_view iri) {
  if (iri.empty() || !is_scheme_start(iri[0])) return std::nullopt;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    if (iri[i] == ':') return i;
    if (!is_scheme_char(iri[i])) return std::nullopt;
  }
  return std::nullopt;
}

IriParts split_iri(std::string_view s) {
  IriParts p;
  if (auto n = scheme_length(s)) {
    p.scheme = std::string(s.substr(0, *n));
    s.remove_prefix(*n + 1);
  }
  if (auto hash = s.find('#'); hash != std::string_view::npos) {
    p.fragment = std::string(s.substr(hash + 1));
    s = s.substr(0, hash);
  }
  if (auto q = s.find('?'); q != std::string_view::npos) {
    p.query = std::string(s.substr(q + 1));
    s = s.substr(0, q);
  }
  if (s.substr(0, 2) == "//") {
    s.remove_prefix(2);
    auto slash = s.find('/');
    p.authority = std::string(s.substr(0, slash));
    s = slash == std::string_view::npos ? std::string_view{} : s.substr(slash);
  }
  p.path = std::string(s);
  return p;
}

std::string remove_dot_segments(std::string_view input) {
  std::string in(input);
  std::string out;
  while (!in.empty()) {
    if (in.rfind("../", 0) == 0) {
      in.erase(0, 3);
    } else if (in.rfind("./", 0) == 0) {
      in.erase(0, 2);
    } else if (in.rfind("/./", 0) == 0) {
      in.replace(0, 3, "/");
    } else if (in == "/.") {
      in = "/";
    } else if (in.rfind("/../", 0) == 0 || in == "/..") {
      if (in == "/..") {
        in = "/";
      } else {
        in.replace(0, 4, "/");
      }
      auto last = out.rfind('/');
      out.erase(last == std::string::npos ? 0 : last);
    } else if (in == "." || in == "..") {
      in.clear();
    } else {
      std::size_t start = in[0] == '/' ? 1 : 0;
      auto next = in.find('/', start);
      if (next == std::string::npos) next = in.size();
      out.append(in, 0, next);
      in.erase(0, next);
    }
  }
  return out;
}

std::string merge_paths(const IriParts& base, std::string_view ref_path) {
  if (base.authority && base.path.empty()) return "/" + std::string(ref_path);
  auto last = base.path.rfind('/');
  if (last == std::string::npos) return std::string(ref_path);
  return base.path.substr(0, last + 1) + std::string(ref_path);
}

std::string recompose(const IriParts& p) {
  std::string out;
  if (p.scheme) out += *p.scheme + ":";
  if (p.authority) out += "//" + *p.authority;
  out += p.path;
  if (p.query) out += "?" + *p.query;
  if (p.fragment) out += "#" + *p.fragment;
  return out;
}

}  // namespace

std::string resolve_iri(std::string_view base, std::string_view reference) {
  const IriParts r = split_iri(reference);
  const IriParts b = split_iri(base);
  IriParts t;
  if (r.scheme) {
    t.scheme = r.scheme;
    t.authority = r.authority;
    t.path = remove_dot_segments(r.path);
    t.query = r.query;
  } else {
    if (r.authority) {
      t.authority = r.authority;
      t.path = remove_dot_segments(r.path);
      t.query = r.query;
    } else {
      if (r.path.empty()) {
        t.path = b.path;
        t.query = r.query ? r.query : b.query;
      } else {
        t.path = r.path[0] == '/' ? remove_dot_segments(r.path)
                                  : remove_dot_segments(merge_paths(b, r.path));
        t.query = r.query;
      }
      t.authority = b.authority;
    }
    t.scheme = b.scheme;
  }
  t.fragment = r.fragment;
  return recompose(t);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

constexpr char32_t kEof = 0xFFFFFFFF;

bool in_range(char32_t c, char32_t lo, char32_t hi) { return c >= lo && c <= hi; }

bool is_pn_chars_base(char32_t c) {
  return in_range(c, 'A', 'Z') || in_range(c, 'a', 'z') || in_range(c, 0xC0, 0xD6) ||
         in_range(c, 0xD8, 0xF6) || in_range(c, 0xF8, 0x2FF) || in_range(c, 0x370, 0x37D) ||
         in_range(c, 0x37F, 0x1FFF) || in_range(c, 0x200C, 0x200D) ||
         in_range(c, 0x2070, 0x218F) || in_range(c, 0x2C00, 0x2FEF) ||
         in_range(c, 0x3001, 0xD7FF) || in_range(c, 0xF900, 0xFDCF) ||
         in_range(c, 0xFDF0, 0xFFFD) || in_range(c, 0x10000, 0xEFFFF);
}
bool is_pn_chars_u(char32_t c) { return is_pn_chars_base(c) || c == '_'; }
bool is_digit(char32_t c) { return in_range(c, '0', '9'); }
bool is_pn_chars(char32_t c) {
  return is_pn_chars_u(c) || c == '-' || is_digit(c) || c == 0xB7 ||
         in_range(c, 0x300, 0x36F) || in_range(c, 0x203F, 0x2040);
}
bool is_hex(char32_t c) {
  return is_digit(c) || in_range(c, 'a', 'f') || in_range(c, 'A', 'F');
}
bool is_alpha(char32_t c) { return in_range(c, 'a', 'z') || in_range(c, 'A', 'Z'); }
bool is_ws(char32_t c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool is_local_escape(char32_t c) {
  static constexpr std::string_view kChars = "_~.-!$&'()*+,;=/?#@%";
  return c < 0x80 && kChars.find(static_cast<char>(c)) != std::string_view::npos;
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

class RdfReader {
 public:
  RdfReader(std::string_view input, Format format, std::optional<std::string> base)
      : in_(input), format_(format), base_(std::move(base)) {}

  ParsedDocument run() {
    check_encoding();
    if (in_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
    skip_ws();
    while (peek() != kEof) {
      if (format_ == Format::ntriples) {
        ntriples_statement();
      } else {
        turtle_statement();
      }
      skip_ws();
    }
    return ParsedDocument{std::move(out_).build(), std::move(prefixes_)};
  }

 private:
  struct Mark {
    std::size_t pos, line, col;
  };

  std::string_view in_;
  Format format_;
  std::optional<std::string> base_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  std::map<std::string, std::string> prefixes_;
  std::map<std::string, std::string> blank_labels_;
  std::size_t blank_counter_ = 0;
  GraphBuilder out_;

  Mark mark() const { return {pos_, line_, col_}; }
  void reset(const Mark& m) { pos_ = m.pos, line_ = m.line, col_ = m.col; }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(line_, col_, message);
  }
  [[noreturn]] void fail_at(const Mark& m, const std::string& message) const {
    throw SyntaxError(m.line, m.col, message);
  }

  void check_encoding() {
    auto bad = utf8::find_invalid(in_);
    if (!bad) return;
    std::size_t line = 1, col = 1, p = 0;
    while (p < *bad) {
      auto cp = utf8::decode(in_, p);
      if (*cp == '\n') {
        ++line, col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(line, col, "invalid UTF-8 byte sequence");
  }

  char32_t peek(std::size_t ahead = 0) const {
    std::size_t p = pos_;
    for (std::size_t i = 0;; ++i) {
      if (p >= in_.size()) return kEof;
      auto cp = utf8::decode(in_, p);
      if (i == ahead) return *cp;
    }
  }

  char32_t next() {
    if (pos_ >= in_.size()) fail("unexpected end of input");
    auto cp = *utf8::decode(in_, pos_);
    if (cp == '\n') {
      ++line_, col_ = 1;
    } else {
      ++col_;
    }
    return cp;
  }

  void expect(char32_t c, const char* what) {
    if (peek() != c) fail(std::string("expected ") + what);
    next();
  }

  bool lookahead_word(std::string_view word, bool case_insensitive) const {
    for (std::size_t i = 0; i < word.size(); ++i) {
      char32_t c = peek(i);
      char32_t w = static_cast<unsigned char>(word[i]);
      if (case_insensitive && c < 0x80) {
        c = static_cast<char32_t>(std::tolower(static_cast<int>(c)));
        w = static_cast<char32_t>(std::tolower(static_cast<int>(w)));
      }
      if (c != w) return false;
    }
    return true;
  }

  void skip_ws() {
    for (;;) {
      char32_t c = peek();
      if (is_ws(c)) {
        next();
      } else if (c == '#') {
        while (peek() != kEof && peek() != '\n') next();
      } else {
        return;
      }
    }
  }

  void skip_inline_ws() {
    while (peek() == ' ' || peek() == '\t') next();
  }

  void skip_token_ws() {
    if (format_ == Format::ntriples) {
      skip_inline_ws();
    } else {
      skip_ws();
    }
  }

  // -- shared terminals ----------------------------------------------------

  char32_t read_hex(int digits) {
    char32_t v = 0;
    for (int i = 0; i < digits; ++i) {
      char32_t c = peek();
      if (!is_hex(c)) fail("invalid hexadecimal escape");
      next();
      v = v * 16 + static_cast<char32_t>(is_digit(c)       ? c - '0'
                                         : in_range(c, 'a', 'f') ? c - 'a' + 10
                                                                 : c - 'A' + 10);
    }
    if (v > 0x10FFFF || in_range(v, 0xD800, 0xDFFF)) fail("escape is not a valid codepoint");
    return v;
  }

  char32_t read_uchar() {
    // positioned after the backslash
    char32_t kind = peek();
    if (kind == 'u') {
      next();
      return read_hex(4);
    }
    if (kind == 'U') {
      next();
      return read_hex(8);
    }
    fail("invalid escape sequence");
  }

  static bool has_scheme(std::string_view iri) { return scheme_length(iri).has_value(); }

  std::string iri_ref() {
    const Mark start = mark();
    expect('<', "'<'");
    std::string raw;
    for (;;) {
      char32_t c = peek();
      if (c == kEof) fail("unterminated IRI");
      if (c == '>') {
        next();
        break;
      }
      if (c == '\\') {
        next();
        char32_t cp = read_uchar();
        if (cp <= 0x20 || cp == '<' || cp == '>' || cp == '"' || cp == '{' || cp == '}' ||
            cp == '|' || cp == '^' || cp == '`' || cp == '\\') {
          fail("escaped character not allowed in IRI");
        }
        utf8::append(raw, cp);
        continue;
      }
      if (c <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' ||
          c == '^' || c == '`') {
        fail("character not allowed in IRI");
      }
      utf8::append(raw, next());
    }
    if (has_scheme(raw)) return raw;
    if (format_ == Format::ntriples) fail_at(start, "relative IRI not allowed in N-Triples");
    if (!base_) fail_at(start, "relative IRI without a base");
    return resolve_iri(*base_, raw);
  }

  Term blank_node_label() {
    expect('_', "'_:'");
    expect(':', "'_:'");
    std::string label;
    char32_t c = peek();
    if (!is_pn_chars_u(c) && !is_digit(c)) fail("invalid blank node label");
    utf8::append(label, next());
    Mark last_good = mark();
    std::size_t good_len = label.size();
    while (is_pn_chars(peek()) || peek() == '.') {
      char32_t ch = next();
      utf8::append(label, ch);
      if (ch != '.') {
        last_good = mark();
        good_len = label.size();
      }
    }
    reset(last_good);
    label.resize(good_len);
    auto [it, inserted] = blank_labels_.try_emplace(label);
    if (inserted) it->second = "b" + std::to_string(blank_counter_++);
    return BlankNode(it->second);
  }

  BlankNode fresh_blank() { return BlankNode("b" + std::to_string(blank_counter_++)); }

  std::string language_tag() {
    expect('@', "'@'");
    std::string tag;
    if (!is_alpha(peek())) fail("invalid language tag");
    while (is_alpha(peek())) utf8::append(tag, next());
    while (peek() == '-') {
      tag.push_back(static_cast<char>(next()));
      if (!is_alpha(peek()) && !is_digit(peek())) fail("invalid language tag");
      while (is_alpha(peek()) || is_digit(peek())) utf8::append(tag, next());
    }
    return lowercase(std::move(tag));
  }

  void read_echar(std::string& out) {
    // positioned after the backslash
    char32_t c = peek();
    switch (c) {
      case 't': next(); out.push_back('\t'); return;
      case 'b': next(); out.push_back('\b'); return;
      case 'n': next(); out.push_back('\n'); return;
      case 'r': next(); out.push_back('\r'); return;
      case 'f': next(); out.push_back('\f'); return;
      case '"': next(); out.push_back('"'); return;
      case '\'': next(); out.push_back('\''); return;
      case '\\': next(); out.push_back('\\'); return;
      default: utf8::append(out, read_uchar());
    }
  }

  std::string string_body() {
    const char32_t quote = peek();
    const bool long_form = format_ == Format::turtle && peek(1) == quote && peek(2) == quote;
    std::string out;
    if (long_form) {
      next(), next(), next();
      for (;;) {
        char32_t c = peek();
        if (c == kEof) fail("unterminated string");
        if (c == quote && peek(1) == quote && peek(2) == quote) {
          // up to two extra quotes may close the run
          if (peek(3) == quote) {
            utf8::append(out, next());
            continue;
          }
          next(), next(), next();
          return out;
        }
        next();
        if (c == '\\') {
          read_echar(out);
        } else {
          utf8::append(out, c);
        }
      }
    }
    next();
    for (;;) {
      char32_t c = peek();
      if (c == kEof || c == '\n' || c == '\r') fail("unterminated string");
      next();
      if (c == quote) return out;
      if (c == '\\') {
        read_echar(out);
      } else {
        utf8::append(out, c);
      }
    }
  }

  Literal string_literal() {
    std::string lexical = string_body();
    if (peek() == '@') return make_lang_literal(std::move(lexical), language_tag());
    if (peek() == '^' && peek(1) == '^') {
      next(), next();
      Iri dt = format_ == Format::ntriples ? Iri(iri_ref()) : iri();
      return make_literal(std::move(lexical), std::move(dt));
    }
    return make_literal(std::move(lexical));
  }

  // -- N-Triples -----------------------------------------------------------

  Term nt_subject() {
    char32_t c = peek();
    if (c == '<') return Iri(iri_ref());
    if (c == '_') return blank_node_label();
    fail("expected subject IRI or blank node");
  }

  Term nt_object() {
    char32_t c = peek();
    if (c == '<') return Iri(iri_ref());
    if (c == '_') return blank_node_label();
    if (c == '"') return string_literal();
    fail("expected object IRI, blank node or literal");
  }

  void ntriples_statement() {
    Term s = nt_subject();
    skip_inline_ws();
    if (peek() != '<') fail("expected predicate IRI");
    Iri p(iri_ref());
    skip_inline_ws();
    Term o = nt_object();
    skip_inline_ws();
    expect('.', "'.' after triple");
    skip_inline_ws();
    if (peek() == '#') {
      while (peek() != kEof && peek() != '\n') next();
    }
    if (peek() != kEof && peek() != '\n' && peek() != '\r') {
      fail("expected end of line after triple");
    }
    out_.insert(std::move(s), std::move(p), std::move(o));
  }

  // -- Turtle --------------------------------------------------------------

  std::string prefix_label() {
    // PN_PREFIX? ':'
    std::string name;
    if (is_pn_chars_base(peek())) {
      utf8::append(name, next());
      Mark last_good = mark();
      std::size_t good_len = name.size();
      while (is_pn_chars(peek()) || peek() == '.') {
        char32_t ch = next();
        utf8::append(name, ch);
        if (ch != '.') {
          last_good = mark();
          good_len = name.size();
        }
      }
      reset(last_good);
      name.resize(good_len);
    }
    if (peek() != ':') fail("expected ':' in prefixed name");
    next();
    return name;
  }

  void local_char(std::string& out) {
    char32_t c = peek();
    if (c == '%') {
      next();
      out.push_back('%');
      for (int i = 0; i < 2; ++i) {
        if (!is_hex(peek())) fail("invalid percent escape in local name");
        utf8::append(out, next());
      }
    } else if (c == '\\') {
      next();
      if (!is_local_escape(peek())) fail("invalid escape in local name");
      utf8::append(out, next());
    } else {
      utf8::append(out, next());
    }
  }

  std::string local_part() {
    std::string out;
    char32_t c = peek();
    if (!(is_pn_chars_u(c) || c == ':' || is_digit(c) || c == '%' || c == '\\')) return out;
    local_char(out);
    Mark last_good = mark();
    std::size_t good_len = out.size();
    for (;;) {
      c = peek();
      if (is_pn_chars(c) || c == ':' || c == '%' || c == '\\') {
        local_char(out);
        last_good = mark();
        good_len = out.size();
      } else if (c == '.') {
        next();
        out.push_back('.');
      } else {
        break;
      }
    }
    reset(last_good);
    out.resize(good_len);
    return out;
  }

  Iri prefixed_name() {
    const Mark start = mark();
    std::string prefix = prefix_label();
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) throw UnknownPrefix(start.line, start.col, prefix);
    return Iri(it->second + local_part());
  }

  Iri iri() {
    if (peek() == '<') return Iri(iri_ref());
    return prefixed_name();
  }

  bool at_keyword(std::string_view word) const {
    if (!lookahead_word(word, false)) return false;
    char32_t after = peek(word.size());
    return !(is_pn_chars(after) || after == ':' ||
             (after == '.' && is_pn_chars(peek(word.size() + 1))));
  }

  void prefix_directive(bool sparql_style) {
    skip_ws();
    std::string name = prefix_label();
    skip_ws();
    prefixes_[name] = iri_ref();
    if (!sparql_style) {
      skip_ws();
      expect('.', "'.' after @prefix");
    }
  }

  void base_directive(bool sparql_style) {
    skip_ws();
    base_ = iri_ref();
    if (!sparql_style) {
      skip_ws();
      expect('.', "'.' after @base");
    }
  }

  void turtle_statement() {
    if (peek() == '@') {
      if (lookahead_word("@prefix", false)) {
        for (int i = 0; i < 7; ++i) next();
        prefix_directive(false);
        return;
      }
      if (lookahead_word("@base", false)) {
        for (int i = 0; i < 5; ++i) next();
        base_directive(false);
        return;
      }
      fail("unknown directive");
    }
    if (lookahead_word("prefix", true) && is_ws(peek(6))) {
      for (int i = 0; i < 6; ++i) next();
      prefix_directive(true);
      return;
    }
    if (lookahead_word("base", true) && is_ws(peek(4))) {
      for (int i = 0; i < 4; ++i) next();
      base_directive(true);
      return;
    }
    triples();
    skip_ws();
    expect('.', "'.' at end of statement");
  }

  void triples() {
    if (peek() == '[') {
      Term subject = blank_node_property_list();
      skip_ws();
      if (peek() != '.') predicate_object_list(subject);
      return;
    }
    Term subject = turtle_subject();
    skip_ws();
    predicate_object_list(subject);
  }

  Term turtle_subject() {
    char32_t c = peek();
    if (c == '<') return Iri(iri_ref());
    if (c == '_' && peek(1) == ':') return blank_node_label();
    if (c == '(') fail("collections are not supported");
    if (c == '"' || c == '\'' || is_digit(c)) fail("literal not allowed as subject");
    return prefixed_name();
  }

  Term blank_node_property_list() {
    expect('[', "'['");
    skip_ws();
    BlankNode node = fresh_blank();
    if (peek() != ']') predicate_object_list(node);
    skip_ws();
    expect(']', "']' closing blank node");
    return node;
  }

  Iri verb() {
    if (peek() == 'a' && (is_ws(peek(1)) || peek(1) == '<' || peek(1) == '[' ||
                          peek(1) == '"' || peek(1) == '_')) {
      next();
      return vocab::type();
    }
    if (peek() == '.' || peek() == ']' || peek() == kEof) fail("expected predicate");
    return iri();
  }

  void predicate_object_list(const Term& subject) {
    for (;;) {
      Iri predicate = verb();
      skip_ws();
      object_list(subject, predicate);
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        next();
        skip_ws();
      }
      char32_t c = peek();
      if (c == '.' || c == ']' || c == kEof) return;
    }
  }

  void object_list(const Term& subject, const Iri& predicate) {
    for (;;) {
      Term object = turtle_object();
      out_.insert(subject, predicate, std::move(object));
      skip_ws();
      if (peek() != ',') return;
      next();
      skip_ws();
    }
  }

  Literal numeric_literal() {
    std::string lex;
    if (peek() == '+' || peek() == '-') lex.push_back(static_cast<char>(next()));
    bool digits = false;
    while (is_digit(peek())) {
      lex.push_back(static_cast<char>(next()));
      digits = true;
    }
    bool fraction = false;
    if (peek() == '.' && is_digit(peek(1))) {
      lex.push_back(static_cast<char>(next()));
      while (is_digit(peek())) lex.push_back(static_cast<char>(next()));
      fraction = true;
    } else if (digits && peek() == '.' && (peek(1) == 'e' || peek(1) == 'E')) {
      lex.push_back(static_cast<char>(next()));
      fraction = true;
    }
    if (!digits && !fraction) fail("invalid numeric literal");
    if (peek() == 'e' || peek() == 'E') {
      lex.push_back(static_cast<char>(next()));
      if (peek() == '+' || peek() == '-') lex.push_back(static_cast<char>(next()));
      if (!is_digit(peek())) fail("invalid exponent in numeric literal");
      while (is_digit(peek())) lex.push_back(static_cast<char>(next()));
      return make_literal(std::move(lex), vocab::xsd("double"));
    }
    return make_literal(std::move(lex), vocab::xsd(fraction ? "decimal" : "integer"));
  }

  Term turtle_object() {
    char32_t c = peek();
    if (c == '<') return Iri(iri_ref());
    if (c == '_' && peek(1) == ':') return blank_node_label();
    if (c == '[') return blank_node_property_list();
    if (c == '(') fail("collections are not supported");
    if (c == '"' || c == '\'') return string_literal();
    if (is_digit(c) || c == '+' || c == '-' || (c == '.' && is_digit(peek(1)))) {
      return numeric_literal();
    }
    if (at_keyword("true")) {
      for (int i = 0; i < 4; ++i) next();
      return make_literal("true", vocab::xsd("boolean"));
    }
    if (at_keyword("false")) {
      for (int i = 0; i < 5; ++i) next();
      return make_literal("false", vocab::xsd("boolean"));
    }
    if (c == '.' || c == ',' || c == ';' || c == ']' || c == kEof) fail("expected object");
    return prefixed_name();
  }
};

}  // namespace

ParsedDocument parse_document(std::string_view input, Format format,
                              std::optional<std::string> base) {
  return RdfReader(input, format, std::move(base)).run();
}

// ---------------------------------------------------------------------------
// Serialization

std::string serialize_ntriples(const Graph& graph) {
  // Sort with blank nodes masked so that the assigned names do not depend on
  // the labels the graph happened to carry.
  struct Row {
    std::string masked;
    std::string original;
    const Triple* triple;
  };
  auto masked_form = [](const Term& t) {
    return is_blank(t) ? std::string("_:") : to_ntriples(t);
  };
  std::vector<Row> rows;
  rows.reserve(graph.size());
  for (const Triple& t : graph.triples()) {
    rows.push_back({masked_form(t.subject) + " " + to_ntriples(t.predicate) + " " +
                        masked_form(t.object),
                    to_ntriples(t.subject) + " " + to_ntriples(t.predicate) + " " +
                        to_ntriples(t.object),
                    &t});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.masked, a.original) < std::tie(b.masked, b.original);
  });

  std::map<std::string, std::string> names;
  auto rename = [&](const Term& t) -> std::string {
    if (!is_blank(t)) return to_ntriples(t);
    auto [it, inserted] = names.try_emplace(std::get<BlankNode>(t).label);
    if (inserted) it->second = "_:b" + std::to_string(names.size() - 1);
    return it->second;
  };
  std::vector<std::string> lines;
  lines.reserve(rows.size());
  for (const Row& r : rows) {
    std::string s = rename(r.triple->subject);
    std::string o = rename(r.triple->object);
    lines.push_back(s + " " + to_ntriples(r.triple->predicate) + " " + o + " .\n");
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l;
  return out;
}

}  // namespace kgatlas::rdf
