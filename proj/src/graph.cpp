#include "kgatlas/graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace kgatlas::rdf {

namespace {

// Key extractors for the two permutation indexes.
auto pos_key(const Triple& t) { return std::tie(t.predicate, t.object, t.subject); }
auto osp_key(const Triple& t) { return std::tie(t.object, t.subject, t.predicate); }

template <typename KeyFn>
std::vector<std::uint32_t> build_permutation(const std::vector<Triple>& triples, KeyFn key) {
  std::vector<std::uint32_t> perm(triples.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    return key(triples[a]) < key(triples[b]);
  });
  return perm;
}

}  // namespace

Graph::Graph(std::set<Triple> triples)
    : triples_(std::make_move_iterator(triples.begin()),
               std::make_move_iterator(triples.end())) {
  pos_ = build_permutation(triples_, pos_key);
  osp_ = build_permutation(triples_, osp_key);
}

bool Graph::contains(const Triple& t) const {
  return std::binary_search(triples_.begin(), triples_.end(), t);
}

std::vector<Triple> Graph::match(const std::optional<Term>& s,
                                 const std::optional<Iri>& p,
                                 const std::optional<Term>& o) const {
  std::vector<Triple> out;

  if (s && !(o && !p)) {
    // SPO: s, (s,p), (s,p,o)
    auto lo = std::lower_bound(triples_.begin(), triples_.end(), *s,
                               [](const Triple& t, const Term& v) { return t.subject < v; });
    for (auto it = lo; it != triples_.end() && it->subject == *s; ++it) {
      if (p && it->predicate != *p) {
        if (it->predicate > *p) break;
        continue;
      }
      if (o && it->object != *o) continue;
      out.push_back(*it);
    }
    return out;
  }

  if (p) {
    // POS: p, (p,o)
    auto lo = std::lower_bound(pos_.begin(), pos_.end(), *p,
                               [&](std::uint32_t i, const Iri& v) { return triples_[i].predicate < v; });
    for (auto it = lo; it != pos_.end() && triples_[*it].predicate == *p; ++it) {
      const Triple& t = triples_[*it];
      if (o && t.object != *o) {
        if (t.object > *o) break;
        continue;
      }
      out.push_back(t);
    }
    return out;
  }

  if (o) {
    // OSP: o, (o,s)
    auto lo = std::lower_bound(osp_.begin(), osp_.end(), *o,
                               [&](std::uint32_t i, const Term& v) { return triples_[i].object < v; });
    for (auto it = lo; it != osp_.end() && triples_[*it].object == *o; ++it) {
      const Triple& t = triples_[*it];
      if (s && t.subject != *s) {
        if (t.subject > *s) break;
        continue;
      }
      out.push_back(t);
    }
    return out;
  }

  out.assign(triples_.begin(), triples_.end());
  return out;
}

bool Graph::mentions(const Term& node) const {
  auto lo = std::lower_bound(triples_.begin(), triples_.end(), node,
                             [](const Triple& t, const Term& v) { return t.subject < v; });
  if (lo != triples_.end() && lo->subject == node) return true;
  auto olo = std::lower_bound(osp_.begin(), osp_.end(), node,
                              [&](std::uint32_t i, const Term& v) { return triples_[i].object < v; });
  return olo != osp_.end() && triples_[*olo].object == node;
}

bool GraphBuilder::insert(Triple t) { return triples_.insert(std::move(t)).second; }

Graph GraphBuilder::build() && { return Graph(std::move(triples_)); }

Graph GraphBuilder::build() const& { return Graph(triples_); }

}  // namespace kgatlas::rdf
