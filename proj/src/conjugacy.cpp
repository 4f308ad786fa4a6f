#include "braidkit/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "braidkit/errors.hpp"

namespace braidkit {

namespace {

std::vector<SimpleElement> nontrivial_simples(int n) {
  std::vector<int> images(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) images[static_cast<size_t>(k)] = k + 1;
  std::vector<SimpleElement> out;
  while (std::next_permutation(images.begin(), images.end()))
    out.push_back(SimpleElement(n, Permutation::from_images(images)));
  return out;
}

LeftNormalForm conjugate_nf(const LeftNormalForm& u, const SimpleElement& s) {
  const LeftNormalForm s_nf = nf_of_simple(s);
  return product(product(inverse(s_nf), u), s_nf);
}

// Closure of the base sliding-circuit element under conjugation by
// simple elements, keeping only elements that lie on sliding circuits.
struct Closure {
  int strands = 1;
  std::vector<LeftNormalForm> verts;
  std::vector<BraidWord> conj_from_base;  // base --c--> verts[i]
  std::vector<SlidingCircuitGraph::Edge> edges;  // conjugators are simple words
  BraidWord base_conjugator;                     // input --c--> verts[0]
};

bool on_circuit(const LeftNormalForm& z) {
  return slide_to_circuit(z).representative == z;
}

Closure build_closure(const BraidWord& x, std::size_t max_vertices) {
  const int n = x.strands;
  const SlideResult entry = slide_to_circuit(x);
  Closure c;
  c.strands = n;
  c.base_conjugator = entry.conjugator;
  std::map<LeftNormalForm, int> index_of;
  c.verts.push_back(entry.representative);
  c.conj_from_base.push_back(BraidWord(n, {}));
  index_of.emplace(entry.representative, 0);
  const std::vector<SimpleElement> simples = nontrivial_simples(n);
  for (size_t head = 0; head < c.verts.size(); ++head) {
    for (const SimpleElement& s : simples) {
      const LeftNormalForm v = conjugate_nf(c.verts[head], s);
      const auto known = index_of.find(v);
      int v_idx;
      if (known != index_of.end()) {
        v_idx = known->second;
      } else {
        if (!on_circuit(v)) continue;
        if (c.verts.size() >= max_vertices)
          throw ResourceError("sliding-circuit vertex cap exceeded");
        v_idx = static_cast<int>(c.verts.size());
        c.verts.push_back(v);
        c.conj_from_base.push_back(concat(c.conj_from_base[head], to_word(s)));
        index_of.emplace(v, v_idx);
      }
      c.edges.push_back({static_cast<int>(head), v_idx, to_word(s)});
    }
  }
  return c;
}

void verify_conjugation(const BraidWord& x, const BraidWord& c, const BraidWord& y) {
  if (!equal(concat(concat(invert(c), x), c), y))
    throw std::logic_error("conjugator failed verification");
}

}  // namespace

SimpleElement preferred_prefix(const LeftNormalForm& f) {
  const int n = f.strands;
  if (f.factors.empty()) return SimpleElement(n, Permutation(n));
  const SimpleElement first =
      f.inf % 2 == 0 ? f.factors.front() : flip(f.factors.front());
  return meet(first, right_complement(f.factors.back()));
}

std::pair<LeftNormalForm, SimpleElement> cyclic_slide(const LeftNormalForm& f) {
  const SimpleElement p = preferred_prefix(f);
  if (p.is_identity()) return {f, p};
  return {conjugate_nf(f, p), p};
}

SlideResult slide_to_circuit(const LeftNormalForm& f) {
  std::map<LeftNormalForm, int> seen;
  std::vector<BraidWord> conjugator_prefix;  // prefix products of slide conjugators
  BraidWord acc(f.strands, {});
  LeftNormalForm cur = f;
  for (;;) {
    const auto it = seen.find(cur);
    if (it != seen.end()) {
      SlideResult result;
      result.representative = cur;
      result.conjugator = conjugator_prefix[static_cast<size_t>(it->second)];
      result.period = static_cast<int>(seen.size()) - it->second;
      return result;
    }
    seen.emplace(cur, static_cast<int>(seen.size()));
    conjugator_prefix.push_back(acc);
    auto [next, p] = cyclic_slide(cur);
    acc = concat(acc, to_word(p));
    cur = std::move(next);
  }
}

SlideResult slide_to_circuit(const BraidWord& x) {
  SlideResult result = slide_to_circuit(normal_form(x));
  verify_conjugation(x, result.conjugator, nf_to_word(result.representative));
  return result;
}

SlidingCircuitGraph sliding_circuits(const BraidWord& x, std::size_t max_vertices) {
  Closure c = build_closure(x, max_vertices);
  // Canonical output: vertices sorted structurally, edges re-indexed.
  std::vector<int> order(c.verts.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return c.verts[static_cast<size_t>(a)] < c.verts[static_cast<size_t>(b)];
  });
  std::vector<int> rank(order.size());
  for (size_t k = 0; k < order.size(); ++k) rank[static_cast<size_t>(order[k])] = static_cast<int>(k);

  SlidingCircuitGraph g;
  g.strands = c.strands;
  for (int idx : order) g.vertices.push_back(c.verts[static_cast<size_t>(idx)]);
  for (const auto& e : c.edges)
    g.edges.push_back({rank[static_cast<size_t>(e.from)], rank[static_cast<size_t>(e.to)], e.conjugator});
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.from, a.to, a.conjugator.letters) <
           std::tie(b.from, b.to, b.conjugator.letters);
  });
  g.base = rank[0];
  g.base_conjugator = c.base_conjugator;
  verify_conjugation(x, g.base_conjugator, nf_to_word(g.vertices[static_cast<size_t>(g.base)]));
  return g;
}

std::optional<BraidWord> are_conjugate(const BraidWord& x, const BraidWord& y,
                                       std::size_t max_vertices) {
  require_same_strands(x, y);
  if (exponent_sum(x) != exponent_sum(y)) return std::nullopt;
  if (permutation(x).cycle_type() != permutation(y).cycle_type()) return std::nullopt;
  const Closure c = build_closure(x, max_vertices);
  const SlideResult y_entry = slide_to_circuit(y);
  for (size_t k = 0; k < c.verts.size(); ++k) {
    if (c.verts[k] == y_entry.representative) {
      const BraidWord conj = concat(concat(c.base_conjugator, c.conj_from_base[k]),
                                    invert(y_entry.conjugator));
      verify_conjugation(x, conj, y);
      return conj;
    }
  }
  return std::nullopt;
}

std::vector<BraidWord> centralizer_generators(const BraidWord& x,
                                              std::size_t max_vertices) {
  const Closure c = build_closure(x, max_vertices);
  // BFS spanning tree from the base; loops from the remaining edges.
  std::vector<bool> reached(c.verts.size(), false);
  std::vector<bool> is_tree_edge(c.edges.size(), false);
  reached[0] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t id = 0; id < c.edges.size(); ++id) {
      const auto& e = c.edges[id];
      if (reached[static_cast<size_t>(e.from)] && !reached[static_cast<size_t>(e.to)]) {
        reached[static_cast<size_t>(e.to)] = true;
        is_tree_edge[id] = true;
        grew = true;
      }
    }
  }
  std::vector<BraidWord> out;
  std::map<LeftNormalForm, bool> seen;
  for (size_t id = 0; id < c.edges.size(); ++id) {
    if (is_tree_edge[id]) continue;
    const auto& e = c.edges[id];
    const BraidWord loop =
        concat(concat(c.conj_from_base[static_cast<size_t>(e.from)], e.conjugator),
               invert(c.conj_from_base[static_cast<size_t>(e.to)]));
    const BraidWord g = concat(concat(c.base_conjugator, loop), invert(c.base_conjugator));
    const LeftNormalForm key = normal_form(g);
    if (key.is_trivial()) continue;
    if (seen.emplace(key, true).second) {
      if (!equal(concat(x, g), concat(g, x)))
        throw std::logic_error("centralizer candidate failed the commutation check");
      out.push_back(g);
    }
  }
  return out;
}

}  // namespace braidkit
