#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "kgatlas/term.hpp"

namespace kgatlas::rdf {

// Immutable, indexed set of triples. Triples are kept in subject-predicate-
// object order; two permutation indexes give predicate-object-subject and
// object-subject-predicate access.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::set<Triple> triples);

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  bool contains(const Triple& t) const;

  // All triples, subject-predicate-object order.
  std::span<const Triple> triples() const { return triples_; }

  // Triples matching every bound position, ordered by whichever index
  // serves the bound prefix (SPO, POS or OSP).
  std::vector<Triple> match(const std::optional<Term>& s,
                            const std::optional<Iri>& p,
                            const std::optional<Term>& o) const;

  // True when `node` occurs as subject or object of some triple.
  bool mentions(const Term& node) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.triples_ == b.triples_;
  }

 private:
  std::vector<Triple> triples_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> osp_;
};

// Accumulates triples with set semantics, then freezes them into a Graph.
class GraphBuilder {
 public:
  // Returns false when the triple was already present.
  bool insert(Triple t);
  bool insert(Term s, Iri p, Term o) {
    return insert(Triple(std::move(s), std::move(p), std::move(o)));
  }
  std::size_t size() const { return triples_.size(); }
  Graph build() &&;
  Graph build() const&;

 private:
  std::set<Triple> triples_;
};

}  // namespace kgatlas::rdf
