#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace bookbind {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Builds the canonical (u < v) form of {a, b}.
constexpr Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

constexpr bool shares_endpoint(Edge a, Edge b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// the edge list is kept sorted lexicographically.
class Graph {
 public:
  Graph() = default;

  /// Throws Error(InvalidGraph) on loops, duplicate edges or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(Vertex a, Vertex b) const { return edge_index(make_edge(a, b)).has_value(); }
  std::optional<std::size_t> edge_index(Edge e) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

Graph cycle_graph(int n);

/// C(Z_n, S). Every jump must satisfy 1 <= k <= n/2 and jumps must be distinct.
Graph circulant(int n, std::span<const int> jumps);
inline Graph circulant(int n, std::initializer_list<int> jumps) {
  return circulant(n, std::span<const int>(jumps.begin(), jumps.size()));
}

int max_degree(const Graph& g);
bool is_regular(const Graph& g, int k);

/// Result of a 2-colouring attempt. When bipartite, `side` holds a proper
/// 2-colouring; otherwise `odd_cycle` is a closed walk of odd length
/// (a simple odd cycle, listed without repeating the first vertex).
struct BipartiteCheck {
  bool bipartite = false;
  std::vector<int> side;
  std::vector<Vertex> odd_cycle;
};

BipartiteCheck is_bipartite(const Graph& g);

// ---------------------------------------------------------------------------
// Cartesian graph bundles of two cycles.

enum class ReflectionKind { NoFixed, OneFixed, TwoFixed };

struct Shift {
  int d = 0;
  bool operator==(const Shift&) const = default;
};

struct Reflection {
  ReflectionKind kind = ReflectionKind::NoFixed;
  bool operator==(const Reflection&) const = default;
};

using Automorphism = std::variant<Shift, Reflection>;

/// Image of fiber index q (0-based) under phi on C_t.
///   Shift(d):   q -> q + d
///   NoFixed:    q -> t-1-q       (t even)
///   TwoFixed:   q -> t-q         (t even; fixes 0 and t/2)
///   OneFixed:   q -> t-1-q       (t odd; fixes (t-1)/2)
int apply(const Automorphism& phi, int q, int t);

/// Position of a bundle vertex: base index p in Z_s, fiber index q in Z_t.
struct BundleVertex {
  int p = 0;
  int q = 0;
  bool operator==(const BundleVertex&) const = default;
};

struct BundleSpec {
  int s = 3;
  int t = 3;
  Automorphism phi = Shift{0};

  /// Throws Error(InvalidSpec) / Error(InvalidKind) when the spec is unusable.
  void validate() const;

  int vertex_count() const { return s * t; }
  Vertex vertex(int p, int q) const { return p * t + q; }
  Vertex vertex(BundleVertex b) const { return vertex(b.p, b.q); }
  BundleVertex coords(Vertex v) const { return {v / t, v % t}; }

  bool operator==(const BundleSpec&) const = default;
};

/// C_s \Box^phi C_t. Fiber edges {(i,j),(i,j+1)}, rungs {(i,j),(i+1,j)} for
/// i < s-1, and the seam {(s-1,j),(0,phi(j))}.
Graph bundle(const BundleSpec& spec);

enum class BundleEdgeKind { Fiber, Rung, Seam };

/// Classifies an edge of bundle(spec). Throws Error(InvalidGraph) when the
/// pair is not an edge of the bundle.
BundleEdgeKind classify_edge(const BundleSpec& spec, Edge e);

bool predict_bipartite(const BundleSpec& spec);

/// Maps Shift(d) to Shift(min(d, t-d)); other specs are returned unchanged.
BundleSpec normalize_shift(const BundleSpec& spec);

}  // namespace bookbind
