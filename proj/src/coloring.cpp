#include "bookbind/coloring.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "bookbind/error.hpp"

namespace bookbind {

ConflictGraph conflict_graph(const CircularLayout& layout, std::span<const Edge> edges) {
  ConflictGraph out;
  const auto n = edges.size();
  out.adjacency.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (shares_endpoint(edges[i], edges[j]) || chords_cross(layout, edges[i], edges[j])) {
        out.adjacency[i].push_back(static_cast<int>(j));
        out.adjacency[j].push_back(static_cast<int>(i));
      }
  return out;
}

namespace {

int greedy_clique_bound(const ConflictGraph& graph) {
  const int n = graph.size();
  std::vector<char> mark(static_cast<std::size_t>(n), 0);
  int best = n > 0 ? 1 : 0;
  for (int v = 0; v < n; ++v) {
    auto candidates = graph.adjacency[v];
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      const auto da = graph.adjacency[a].size(), db = graph.adjacency[b].size();
      return da != db ? da > db : a < b;
    });
    std::vector<int> clique{v};
    for (int w : candidates) {
      for (int c : clique) mark[c] = 0;
      for (int x : graph.adjacency[w]) mark[x] = 1;
      if (std::all_of(clique.begin(), clique.end(), [&](int c) { return mark[c] != 0; })) clique.push_back(w);
      for (int x : graph.adjacency[w]) mark[x] = 0;
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

class Search {
 public:
  Search(const ConflictGraph& graph, const ColoringRequest& request)
      : graph_(graph),
        k_(request.colors),
        max_nodes_(request.max_nodes),
        full_(k_ == kMaxColors ? ~std::uint64_t{0} : (std::uint64_t{1} << k_) - 1) {
    const auto n = static_cast<std::size_t>(graph.size());
    allowed_ = request.allowed.empty() ? std::vector<std::uint64_t>(n, full_) : request.allowed;
    for (auto& mask : allowed_) mask &= full_;
    colors_.assign(n, -1);
    blocked_.assign(n, 0);
    counts_.assign(n * static_cast<std::size_t>(k_), 0);
    symmetric_ = request.allowed.empty() && request.fixed.empty();
  }

  ColoringOutcome run(const std::vector<int>& fixed) {
    ColoringOutcome out;
    for (std::size_t v = 0; v < fixed.size(); ++v) {
      if (fixed[v] < 0) continue;
      const int c = fixed[v];
      if (c >= k_ || !(allowed_[v] >> c & 1) || (blocked_[v] >> c & 1)) return out;
      assign(static_cast<int>(v), c);
    }
    if (symmetric_ && greedy_clique_bound(graph_) > k_) return out;
    const bool found = descend(-1);
    out.nodes = nodes_;
    if (found) {
      out.status = ColoringStatus::Colored;
      out.colors = colors_;
    } else if (exhausted_) {
      out.status = ColoringStatus::BudgetExhausted;
    }
    return out;
  }

 private:
  void assign(int v, int c) {
    colors_[v] = c;
    ++colored_;
    for (int w : graph_.adjacency[v])
      if (counts_[static_cast<std::size_t>(w) * k_ + c]++ == 0) blocked_[w] |= std::uint64_t{1} << c;
  }

  void unassign(int v) {
    const int c = colors_[v];
    colors_[v] = -1;
    --colored_;
    for (int w : graph_.adjacency[v])
      if (--counts_[static_cast<std::size_t>(w) * k_ + c] == 0) blocked_[w] &= ~(std::uint64_t{1} << c);
  }

  bool descend(int max_used) {
    if (colored_ == graph_.size()) return true;
    int pick = -1;
    int pick_options = kMaxColors + 1;
    std::size_t pick_degree = 0;
    for (int v = 0; v < graph_.size(); ++v) {
      if (colors_[v] != -1) continue;
      const int options = std::popcount(allowed_[v] & ~blocked_[v]);
      if (options == 0) return false;
      const auto degree = graph_.adjacency[v].size();
      if (options < pick_options || (options == pick_options && degree > pick_degree)) {
        pick = v;
        pick_options = options;
        pick_degree = degree;
      }
    }
    std::uint64_t options = allowed_[pick] & ~blocked_[pick];
    if (symmetric_ && max_used + 2 < k_) options &= (std::uint64_t{1} << (max_used + 2)) - 1;
    while (options != 0) {
      const int c = std::countr_zero(options);
      options &= options - 1;
      if (++nodes_ > max_nodes_) {
        exhausted_ = true;
        return false;
      }
      assign(pick, c);
      if (descend(std::max(max_used, c))) return true;
      unassign(pick);
      if (exhausted_) return false;
    }
    return false;
  }

  const ConflictGraph& graph_;
  int k_;
  std::uint64_t max_nodes_;
  std::uint64_t full_;
  std::vector<std::uint64_t> allowed_;
  std::vector<int> colors_;
  std::vector<std::uint64_t> blocked_;
  std::vector<int> counts_;
  bool symmetric_ = false;
  int colored_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

ColoringOutcome color_exact(const ConflictGraph& graph, const ColoringRequest& request) {
  if (request.colors < 1 || request.colors > kMaxColors)
    throw Error(Errc::Precondition, "colour count must be in [1, 64], got " + std::to_string(request.colors));
  if (!request.allowed.empty() && request.allowed.size() != static_cast<std::size_t>(graph.size()))
    throw Error(Errc::Precondition, "allowed masks must cover every vertex");
  if (!request.fixed.empty() && request.fixed.size() != static_cast<std::size_t>(graph.size()))
    throw Error(Errc::Precondition, "fixed colours must cover every vertex");
  Search search(graph, request);
  return search.run(request.fixed);
}

}  // namespace bookbind
