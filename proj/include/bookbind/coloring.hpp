#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "bookbind/layout.hpp"

namespace bookbind {

/// Conflict graph over a list of edges: two edges conflict when they share an
/// endpoint or their chords cross in the given layout. A proper k-colouring of
/// it is exactly a k-page matching book embedding on that spine.
struct ConflictGraph {
  std::vector<std::vector<int>> adjacency;
  int size() const { return static_cast<int>(adjacency.size()); }
};

ConflictGraph conflict_graph(const CircularLayout& layout, std::span<const Edge> edges);

enum class ColoringStatus { Colored, Infeasible, BudgetExhausted };

inline constexpr int kMaxColors = 64;

struct ColoringRequest {
  int colors = 0;
  /// Optional per-vertex bitmask of permitted colours; empty means all.
  std::vector<std::uint64_t> allowed;
  /// Optional per-vertex preassigned colour, -1 for free; empty means none.
  std::vector<int> fixed;
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
};

struct ColoringOutcome {
  ColoringStatus status = ColoringStatus::Infeasible;
  std::vector<int> colors;
  std::uint64_t nodes = 0;
};

/// Exact colouring by DSATUR-ordered backtracking. Colours are tried in
/// increasing order; when no vertex is restricted, colour classes are treated
/// as interchangeable and a greedy clique bound is checked up front.
/// Deterministic for identical inputs.
ColoringOutcome color_exact(const ConflictGraph& graph, const ColoringRequest& request);

}  // namespace bookbind
