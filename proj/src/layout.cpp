#include "bookbind/layout.hpp"

#include <algorithm>
#include <string>

#include "bookbind/error.hpp"

namespace bookbind {

CircularLayout::CircularLayout(std::vector<Vertex> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  position_.assign(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < n; ++k) {
    const Vertex v = order_[k];
    if (v < 0 || v >= n) throw Error(Errc::InvalidEmbedding, "spine vertex out of range: " + std::to_string(v));
    if (position_[v] != -1) throw Error(Errc::InvalidEmbedding, "spine repeats vertex " + std::to_string(v));
    position_[v] = k;
  }
}

bool chords_cross(const CircularLayout& layout, Edge a, Edge b) {
  if (shares_endpoint(a, b)) return false;
  auto lo = layout.position(a.u);
  auto hi = layout.position(a.v);
  if (lo > hi) std::swap(lo, hi);
  const auto inside = [&](Vertex v) {
    const int p = layout.position(v);
    return lo < p && p < hi;
  };
  return inside(b.u) != inside(b.v);
}

const char* to_string(ViolationReason reason) {
  return reason == ViolationReason::SharedEndpoint ? "shared-endpoint" : "crossing";
}

const char* to_string(Dispersability d) {
  switch (d) {
    case Dispersability::Dispersable: return "dispersable";
    case Dispersability::NearlyDispersable: return "nearly-dispersable";
    case Dispersability::Neither: return "neither";
  }
  return "unknown";
}

ValidationReport validate(const Graph& g, const BookEmbedding& emb) {
  const auto& layout = emb.layout;
  if (layout.size() != g.order())
    throw Error(Errc::InvalidEmbedding, "spine has " + std::to_string(layout.size()) + " vertices, graph has " +
                                            std::to_string(g.order()));
  if (emb.m < 1) throw Error(Errc::InvalidEmbedding, "page count must be positive");

  std::vector<int> page(g.size(), -1);
  for (const auto& pe : emb.pages) {
    const auto idx = g.edge_index(pe.edge);
    if (!idx)
      throw Error(Errc::Coverage, "embedding assigns a page to non-edge {" + std::to_string(pe.edge.u) + "," +
                                      std::to_string(pe.edge.v) + "}");
    if (page[*idx] != -1) throw Error(Errc::Coverage, "edge assigned twice");
    if (pe.page < 0 || pe.page >= emb.m) throw Error(Errc::InvalidEmbedding, "page index outside [0, m)");
    page[*idx] = pe.page;
  }
  for (std::size_t i = 0; i < page.size(); ++i)
    if (page[i] == -1)
      throw Error(Errc::Coverage, "edge {" + std::to_string(g.edges()[i].u) + "," +
                                      std::to_string(g.edges()[i].v) + "} has no page");

  ValidationReport report;
  std::vector<bool> used(static_cast<std::size_t>(emb.m), false);
  for (int p : page) used[p] = true;
  report.pages_used = static_cast<int>(std::count(used.begin(), used.end(), true));

  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (page[i] != page[j]) continue;
      if (shares_endpoint(edges[i], edges[j])) {
        report.is_proper = false;
        report.violations.push_back({edges[i], edges[j], ViolationReason::SharedEndpoint});
      } else if (chords_cross(layout, edges[i], edges[j])) {
        report.is_noncrossing = false;
        report.violations.push_back({edges[i], edges[j], ViolationReason::Crossing});
      }
    }
  }
  // Edge list is sorted, so the (i, j) scan already yields canonical order.
  return report;
}

Dispersability classify(const Graph& g, const BookEmbedding& emb) {
  const auto report = validate(g, emb);
  if (!report.valid()) throw Error(Errc::InvalidEmbedding, "embedding is not a matching book embedding");
  const int delta = max_degree(g);
  if (report.pages_used == delta) return Dispersability::Dispersable;
  if (report.pages_used == delta + 1) return Dispersability::NearlyDispersable;
  return Dispersability::Neither;
}

}  // namespace bookbind
