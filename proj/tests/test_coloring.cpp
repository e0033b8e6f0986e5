#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "bookbind/coloring.hpp"
#include "bookbind/error.hpp"

using namespace bookbind;

namespace {

ConflictGraph random_graph(int n, double p, std::mt19937& rng) {
  ConflictGraph g;
  g.adjacency.resize(n);
  std::bernoulli_distribution coin(p);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) {
        g.adjacency[a].push_back(b);
        g.adjacency[b].push_back(a);
      }
  return g;
}

// Tries every assignment in [0,k)^n.
bool colorable(const ConflictGraph& g, int k, const std::vector<std::uint64_t>& allowed, const std::vector<int>& fixed) {
  const int n = g.size();
  std::vector<int> c(n, 0);
  while (true) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (!allowed.empty() && !(allowed[v] >> c[v] & 1)) ok = false;
      if (!fixed.empty() && fixed[v] >= 0 && fixed[v] != c[v]) ok = false;
      for (int w : g.adjacency[v]) ok = ok && c[v] != c[w];
    }
    if (ok) return true;
    int v = 0;
    while (v < n && ++c[v] == k) c[v++] = 0;
    if (v == n) return false;
  }
}

void check_proper(const ConflictGraph& g, const ColoringOutcome& out, int k) {
  REQUIRE(out.colors.size() == static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) {
    CHECK(out.colors[v] >= 0);
    CHECK(out.colors[v] < k);
    for (int w : g.adjacency[v]) CHECK(out.colors[v] != out.colors[w]);
  }
}

}  // namespace

TEST_CASE("exact colouring matches exhaustive assignment") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const auto g = random_graph(n, 0.5, rng);
    for (int k = 1; k <= 4; ++k) {
      ColoringRequest request;
      request.colors = k;
      const auto out = color_exact(g, request);
      CHECK((out.status == ColoringStatus::Colored) == colorable(g, k, {}, {}));
      if (out.status == ColoringStatus::Colored) check_proper(g, out, k);
    }
  }
}

TEST_CASE("allowed masks and fixed colours are honoured") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto g = random_graph(n, 0.45, rng);
    const int k = 3;
    ColoringRequest request;
    request.colors = k;
    request.allowed.resize(n);
    request.fixed.assign(n, -1);
    for (int v = 0; v < n; ++v) {
      request.allowed[v] = 1 + rng() % 7;
      if (rng() % 4 == 0) request.fixed[v] = static_cast<int>(rng() % k);
    }
    const auto out = color_exact(g, request);
    CHECK((out.status == ColoringStatus::Colored) == colorable(g, k, request.allowed, request.fixed));
    if (out.status == ColoringStatus::Colored) {
      check_proper(g, out, k);
      for (int v = 0; v < n; ++v) {
        CHECK((request.allowed[v] >> out.colors[v] & 1));
        if (request.fixed[v] >= 0) CHECK(out.colors[v] == request.fixed[v]);
      }
    }
  }
}

TEST_CASE("node budget and argument checks") {
  std::mt19937 rng(9);
  const auto g = random_graph(40, 0.5, rng);
  ColoringRequest request;
  request.colors = 6;
  request.max_nodes = 5;
  const auto out = color_exact(g, request);
  CHECK(out.status != ColoringStatus::Colored);
  CHECK(out.nodes <= 5);

  ColoringRequest bad;
  bad.colors = 0;
  CHECK_THROWS_AS(color_exact(g, bad), Error);
  bad.colors = 3;
  bad.allowed.resize(2);
  CHECK_THROWS_AS(color_exact(g, bad), Error);
}

TEST_CASE("conflict graph of a four-cycle layout") {
  const CircularLayout layout({0, 2, 1, 3});
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  const auto cg = conflict_graph(layout, edges);
  // 01 and 23 cross on this spine; 12 and 03 are nested.
  auto has = [&](int a, int b) {
    return std::find(cg.adjacency[a].begin(), cg.adjacency[a].end(), b) != cg.adjacency[a].end();
  };
  CHECK(has(0, 2));
  CHECK_FALSE(has(1, 3));
  CHECK(has(0, 1));
  CHECK(has(0, 3));
}
