#pragma once

// Slow reference implementations used to cross-check the library. None of
// these share code with src/; each follows the plain definition.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "bookbind/graph.hpp"
#include "bookbind/layout.hpp"

namespace brute {

using bookbind::Edge;
using bookbind::Graph;
using bookbind::Vertex;

// Parity union-find: each vertex stores its parity relative to its root.
inline bool bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> parent(n), parity(n, 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](auto&& self, int v) -> std::pair<int, int> {
    if (parent[v] == v) return {v, 0};
    auto [root, p] = self(self, parent[v]);
    parent[v] = root;
    parity[v] ^= p;
    return {root, parity[v]};
  };
  for (const auto& e : g.edges()) {
    auto [ru, pu] = find(find, e.u);
    auto [rv, pv] = find(find, e.v);
    if (ru == rv) {
      if (pu == pv) return false;
    } else {
      parent[ru] = rv;
      parity[ru] = pu ^ pv ^ 1;
    }
  }
  return true;
}

// Geometric test: place the spine on the unit circle and intersect segments.
inline bool segments_cross(const bookbind::CircularLayout& layout, Edge a, Edge b) {
  if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
  const int n = layout.size();
  auto point = [&](Vertex v) {
    const double angle = 2.0 * M_PI * layout.position(v) / n;
    return std::pair{std::cos(angle), std::sin(angle)};
  };
  auto orient = [](std::pair<double, double> p, std::pair<double, double> q, std::pair<double, double> r) {
    const double c = (q.first - p.first) * (r.second - p.second) - (q.second - p.second) * (r.first - p.first);
    return c > 0 ? 1 : -1;
  };
  const auto p1 = point(a.u), p2 = point(a.v), q1 = point(b.u), q2 = point(b.v);
  return orient(p1, p2, q1) != orient(p1, p2, q2) && orient(q1, q2, p1) != orient(q1, q2, p2);
}

// Every violating same-page pair, as (first, second) with first < second.
inline std::set<std::pair<Edge, Edge>> violating_pairs(const bookbind::BookEmbedding& emb) {
  std::set<std::pair<Edge, Edge>> out;
  for (std::size_t i = 0; i < emb.pages.size(); ++i)
    for (std::size_t j = 0; j < emb.pages.size(); ++j) {
      if (i == j || emb.pages[i].page != emb.pages[j].page) continue;
      const Edge a = emb.pages[i].edge, b = emb.pages[j].edge;
      const bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
      if ((share || segments_cross(emb.layout, a, b)) && a < b) out.insert({a, b});
    }
  return out;
}

// Smallest m with an m-page matching book embedding, trying every spine order
// (no symmetry pruning) and every page assignment. Tiny graphs only.
inline int mbt(const Graph& g) {
  const int n = g.order();
  const auto& edges = g.edges();
  const int e = static_cast<int>(edges.size());
  if (e == 0) return 0;
  for (int m = 1;; ++m) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
      const bookbind::CircularLayout layout(order);
      std::vector<int> page(e, 0);
      while (true) {
        bool ok = true;
        for (int i = 0; i < e && ok; ++i)
          for (int j = i + 1; j < e && ok; ++j) {
            if (page[i] != page[j]) continue;
            const Edge a = edges[i], b = edges[j];
            const bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            ok = !share && !segments_cross(layout, a, b);
          }
        if (ok) return m;
        int k = 0;
        while (k < e && ++page[k] == m) page[k++] = 0;
        if (k == e) break;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

inline std::int64_t position(std::int64_t a, std::int64_t b, std::int64_t c) {
  for (std::int64_t x = 0; x < b; ++x)
    if (((a * x - c) % b + b) % b == 0) return x;
  return -1;
}

}  // namespace brute
