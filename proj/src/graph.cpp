#include "bookbind/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <string>

#include "bookbind/error.hpp"

namespace bookbind {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::InvalidSize: return "invalid-size";
    case Errc::InvalidJump: return "invalid-jump";
    case Errc::InvalidGraph: return "invalid-graph";
    case Errc::InvalidSpec: return "invalid-spec";
    case Errc::HalfJump: return "half-jump";
    case Errc::InvalidKind: return "invalid-kind";
    case Errc::InvalidPartition: return "invalid-partition";
    case Errc::NoUniqueSolution: return "no-unique-solution";
    case Errc::NotReducible: return "not-reducible";
    case Errc::Coverage: return "coverage";
    case Errc::InvalidCertificate: return "invalid-certificate";
    case Errc::InvalidEmbedding: return "invalid-embedding";
    case Errc::InvalidBudget: return "invalid-budget";
    case Errc::Precondition: return "precondition";
    case Errc::ConstructionFailed: return "construction-failed";
    case Errc::Parse: return "parse";
    case Errc::Io: return "io";
  }
  return "unknown";
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error(Errc::InvalidGraph, "negative vertex count");
  for (auto& e : edges_) {
    if (e.u == e.v) throw Error(Errc::InvalidGraph, "loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw Error(Errc::InvalidGraph, "edge endpoint out of range");
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error(Errc::InvalidGraph, "duplicate edge");

  std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < n; ++v)
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::optional<std::size_t> Graph::edge_index(Edge e) const {
  e = make_edge(e.u, e.v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(Errc::InvalidSize, "cycle needs at least 3 vertices, got " + std::to_string(n));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph circulant(int n, std::span<const int> jumps) {
  if (n < 2) throw Error(Errc::InvalidSize, "circulant needs n >= 2");
  std::vector<int> seen;
  std::vector<Edge> edges;
  for (int k : jumps) {
    if (k < 1 || k > n / 2)
      throw Error(Errc::InvalidJump, "jump " + std::to_string(k) + " outside [1, " + std::to_string(n / 2) + "]");
    if (std::find(seen.begin(), seen.end(), k) != seen.end())
      throw Error(Errc::InvalidJump, "repeated jump " + std::to_string(k));
    seen.push_back(k);
    // k = n/2 pairs i with i+n/2; only the first half generates distinct edges.
    const int count = (2 * k == n) ? n / 2 : n;
    for (int i = 0; i < count; ++i) edges.push_back(make_edge(i, (i + k) % n));
  }
  return Graph(n, std::move(edges));
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_regular(const Graph& g, int k) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

BipartiteCheck is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);

  for (int root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push(w);
        } else if (side[w] == side[u]) {
          // Walk both endpoints up the BFS tree to their common ancestor.
          std::vector<Vertex> left{u}, right{w};
          Vertex a = u, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          BipartiteCheck out;
          out.odd_cycle = std::move(left);
          out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
          return out;
        }
      }
    }
  }
  return {true, std::move(side), {}};
}

// ---------------------------------------------------------------------------

namespace {

int mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

int apply(const Automorphism& phi, int q, int t) {
  if (const auto* shift = std::get_if<Shift>(&phi)) return mod(q + shift->d, t);
  switch (std::get<Reflection>(phi).kind) {
    case ReflectionKind::TwoFixed: return mod(t - q, t);
    case ReflectionKind::NoFixed:
    case ReflectionKind::OneFixed: return mod(t - 1 - q, t);
  }
  return q;
}

void BundleSpec::validate() const {
  if (s < 3 || t < 3)
    throw Error(Errc::InvalidSpec, "bundle needs s >= 3 and t >= 3, got s=" + std::to_string(s) +
                                       ", t=" + std::to_string(t));
  if (const auto* shift = std::get_if<Shift>(&phi)) {
    if (shift->d < 0 || shift->d >= t)
      throw Error(Errc::InvalidSpec, "shift must satisfy 0 <= d < t, got d=" + std::to_string(shift->d));
    return;
  }
  const auto kind = std::get<Reflection>(phi).kind;
  const bool even = t % 2 == 0;
  if (kind == ReflectionKind::OneFixed && even)
    throw Error(Errc::InvalidKind, "a reflection with one fixed point needs odd t");
  if (kind != ReflectionKind::OneFixed && !even)
    throw Error(Errc::InvalidKind, "a reflection with zero or two fixed points needs even t");
}

Graph bundle(const BundleSpec& spec) {
  spec.validate();
  const int s = spec.s;
  const int t = spec.t;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(2 * s * t));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < t; ++j) {
      edges.push_back(make_edge(spec.vertex(i, j), spec.vertex(i, (j + 1) % t)));
      if (i + 1 < s)
        edges.push_back(make_edge(spec.vertex(i, j), spec.vertex(i + 1, j)));
      else
        edges.push_back(make_edge(spec.vertex(s - 1, j), spec.vertex(0, apply(spec.phi, j, t))));
    }
  return Graph(s * t, std::move(edges));
}

BundleEdgeKind classify_edge(const BundleSpec& spec, Edge e) {
  const auto a = spec.coords(e.u);
  const auto b = spec.coords(e.v);
  const int t = spec.t;
  if (a.p == b.p && (mod(a.q - b.q, t) == 1 || mod(b.q - a.q, t) == 1)) return BundleEdgeKind::Fiber;
  if (a.q == b.q && std::abs(a.p - b.p) == 1) return BundleEdgeKind::Rung;
  const auto seam = [&](BundleVertex last, BundleVertex first) {
    return last.p == spec.s - 1 && first.p == 0 && apply(spec.phi, last.q, t) == first.q;
  };
  if (seam(a, b) || seam(b, a)) return BundleEdgeKind::Seam;
  throw Error(Errc::InvalidGraph, "pair is not an edge of the bundle");
}

bool predict_bipartite(const BundleSpec& spec) {
  spec.validate();
  if (const auto* shift = std::get_if<Shift>(&spec.phi))
    return spec.t % 2 == 0 && spec.s % 2 == shift->d % 2;
  const auto kind = std::get<Reflection>(spec.phi).kind;
  return (kind == ReflectionKind::NoFixed && spec.s % 2 == 1) ||
         (kind == ReflectionKind::TwoFixed && spec.s % 2 == 0);
}

BundleSpec normalize_shift(const BundleSpec& spec) {
  const auto* shift = std::get_if<Shift>(&spec.phi);
  if (shift == nullptr) return spec;
  BundleSpec out = spec;
  out.phi = Shift{std::min(shift->d, mod(spec.t - shift->d, spec.t))};
  return out;
}

}  // namespace bookbind
