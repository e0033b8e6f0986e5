#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "bookbind/decomp.hpp"
#include "bookbind/error.hpp"
#include "bookbind/oracle.hpp"
#include "brute.hpp"

using namespace bookbind;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Io;
}

std::map<std::size_t, int> length_histogram(const Decomposition& d) {
  std::map<std::size_t, int> out;
  for (const auto& c : d.cycles) ++out[c.size()];
  return out;
}

// Each listed cycle must be a closed walk over edges of g without repeated vertices.
void check_cycles_in(const Graph& g, const Decomposition& d) {
  for (const auto& c : d.cycles) {
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    for (std::size_t k = 0; k < c.size(); ++k) CHECK(g.has_edge(c[k], c[(k + 1) % c.size()]));
  }
}

std::vector<Edge> merged(std::vector<Edge> a, const std::vector<Edge>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

TEST_CASE("fiber cycles") {
  CHECK(length_histogram(fiber_cycles({5, 7, Shift{3}})) == std::map<std::size_t, int>{{7, 5}});
  CHECK(length_histogram(fiber_cycles({5, 8, Reflection{ReflectionKind::NoFixed}})) ==
        std::map<std::size_t, int>{{8, 5}});
  CHECK(length_histogram(fiber_cycles({3, 3, Shift{1}})) == std::map<std::size_t, int>{{3, 3}});
}

TEST_CASE("single jump circulant cycles") {
  CHECK(length_histogram(single_jump_cycles(7, 3)) == std::map<std::size_t, int>{{7, 1}});
  CHECK(length_histogram(single_jump_cycles(20, 5)) == std::map<std::size_t, int>{{4, 5}});
  CHECK(length_histogram(single_jump_cycles(6, 2)) == std::map<std::size_t, int>{{3, 2}});
  CHECK(code_of([] { single_jump_cycles(8, 4); }) == Errc::HalfJump);
  CHECK(code_of([] { single_jump_cycles(8, 0); }) == Errc::InvalidJump);

  for (int t = 3; t <= 24; ++t)
    for (int d = 1; d < t; ++d) {
      if (2 * d == t) continue;
      const auto dec = single_jump_cycles(t, d);
      const int g = std::gcd(t, d);
      CHECK(dec.cycles.size() == static_cast<std::size_t>(g));
      CHECK(cycle_edges(dec) == circulant(t, {std::min(d, t - d)}).edges());
    }
}

TEST_CASE("shrink") {
  const std::vector<std::vector<Vertex>> one{{0, 1}};
  const auto tri = shrink(cycle_graph(4), one);
  CHECK(tri == cycle_graph(3));
  CHECK(shrink(cycle_graph(6), std::vector<std::vector<Vertex>>{}) == cycle_graph(6));
  CHECK(code_of([] {
          const std::vector<std::vector<Vertex>> bad{{0, 1}, {1, 2}};
          shrink(cycle_graph(4), bad);
        }) == Errc::InvalidPartition);
  CHECK(code_of([] {
          const std::vector<std::vector<Vertex>> bad{{0, 9}};
          shrink(cycle_graph(4), bad);
        }) == Errc::InvalidPartition);

  // Residual graph of a shift bundle, columns contracted: C(Z_t, {d}).
  for (int s = 3; s <= 6; ++s)
    for (int t = 3; t <= 12; ++t)
      for (int d = 1; 2 * d < t; ++d) {
        const BundleSpec spec{s, t, Shift{d}};
        const auto residual = Graph(spec.vertex_count(), cycle_edges(residual_cycles(spec)));
        std::vector<std::vector<Vertex>> columns;
        for (int j = 0; j < t; ++j) {
          std::vector<Vertex> col;
          for (int i = 0; i < s; ++i) col.push_back(spec.vertex(i, j));
          columns.push_back(col);
        }
        CHECK(shrink(residual, columns) == circulant(t, {d}));
      }
}

TEST_CASE("shift residual cycles") {
  CHECK(length_histogram(shift_residual_cycles(5, 8, 4)) == std::map<std::size_t, int>{{10, 4}});
  CHECK(length_histogram(shift_residual_cycles(5, 7, 3)) == std::map<std::size_t, int>{{35, 1}});
  CHECK(length_histogram(shift_residual_cycles(6, 10, 4)) == std::map<std::size_t, int>{{30, 2}});
  const auto trivial = shift_residual_cycles(4, 5, 0);
  CHECK(trivial.degenerate);
  CHECK(length_histogram(trivial) == std::map<std::size_t, int>{{4, 5}});
  CHECK(code_of([] { shift_residual_cycles(4, 6, 4); }) == Errc::Precondition);
}

TEST_CASE("reflection residual cycles") {
  CHECK(length_histogram(reflection_residual_cycles(5, 8, ReflectionKind::NoFixed)) ==
        std::map<std::size_t, int>{{10, 4}});
  CHECK(length_histogram(reflection_residual_cycles(5, 8, ReflectionKind::TwoFixed)) ==
        std::map<std::size_t, int>{{5, 2}, {10, 3}});
  CHECK(length_histogram(reflection_residual_cycles(5, 9, ReflectionKind::OneFixed)) ==
        std::map<std::size_t, int>{{10, 4}, {5, 1}});
  CHECK(code_of([] { reflection_residual_cycles(5, 9, ReflectionKind::NoFixed); }) == Errc::InvalidKind);
}

TEST_CASE("fiber and residual cycles partition every bundle") {
  for (int s = 3; s <= 9; ++s)
    for (int t = 3; t <= 14; ++t) {
      std::vector<BundleSpec> specs;
      for (int d = 0; d < t; ++d) specs.push_back({s, t, Shift{d}});
      if (t % 2 == 0) {
        specs.push_back({s, t, Reflection{ReflectionKind::NoFixed}});
        specs.push_back({s, t, Reflection{ReflectionKind::TwoFixed}});
      } else {
        specs.push_back({s, t, Reflection{ReflectionKind::OneFixed}});
      }
      for (const auto& spec : specs) {
        CAPTURE(spec.s);
        CAPTURE(spec.t);
        const auto g = bundle(spec);
        const auto fib = fiber_cycles(spec);
        const auto res = residual_cycles(spec);
        check_cycles_in(g, fib);
        check_cycles_in(g, res);
        CHECK(merged(cycle_edges(fib), cycle_edges(res)) == g.edges());

        if (const auto* shift = std::get_if<Shift>(&spec.phi)) {
          const int d = shift->d;
          if (d == 0) continue;
          const int gc = std::gcd(t, d);
          CHECK(length_histogram(res) == std::map<std::size_t, int>{{static_cast<std::size_t>(s * t / gc), gc}});
        } else {
          const auto kind = std::get<Reflection>(spec.phi).kind;
          const std::size_t expect =
              kind == ReflectionKind::NoFixed ? t / 2 : kind == ReflectionKind::TwoFixed ? t / 2 + 1 : (t + 1) / 2;
          CHECK(res.cycles.size() == expect);
        }
      }
    }
}

TEST_CASE("diophantine position") {
  CHECK(solve_position(4, 7, 1).x0 == 2);
  CHECK(solve_position(3, 5, 1).x0 == 2);
  CHECK(solve_position(1, 9, 4).x0 == 4);
  CHECK(code_of([] { solve_position(4, 8, 1); }) == Errc::NoUniqueSolution);

  for (std::int64_t b = 1; b <= 40; ++b)
    for (std::int64_t a = 1; a <= 40; ++a) {
      if (std::gcd(a, b) != 1) continue;
      for (std::int64_t c = -3; c <= 12; ++c) {
        const auto sol = solve_position(a, b, c);
        CHECK(sol.x0 == brute::position(a, b, c));
        CHECK(a * sol.x0 + b * sol.y0 == c);
        CHECK(sol.position() == 1 + sol.x0);
      }
    }
}

TEST_CASE("circulant reduction certificates") {
  const auto r = to_circulant(5, 7, 3);
  CHECK(r.n == 35);
  CHECK(r.jump == 10);
  // Labels run from (0,0) toward (1,0); (0,1) then sits one jump behind 0.
  const BundleSpec fig{5, 7, Shift{3}};
  CHECK(r.relabel[fig.vertex(0, 0)] == 0);
  CHECK(r.relabel[fig.vertex(1, 0)] == 1);
  CHECK(r.relabel[fig.vertex(0, 1)] == 25);
  CHECK(check_isomorphism(bundle(fig), circulant(35, {1, 10}), r.relabel));

  const auto small = to_circulant(3, 3, 1);
  CHECK(small.n == 9);
  CHECK(small.raw_jump == 6);
  CHECK(small.jump == 3);
  CHECK(check_isomorphism(bundle({3, 3, Shift{1}}), circulant(9, {1, 3}), small.relabel));

  CHECK(code_of([] { to_circulant(4, 8, 2); }) == Errc::NotReducible);
  CHECK(code_of([] { to_circulant(4, 8, 0); }) == Errc::Precondition);

  for (int s = 3; s <= 12; ++s)
    for (int t = 3; t <= 12; ++t)
      for (int d = 1; d < t; ++d) {
        if (std::gcd(t, d) != 1) continue;
        const BundleSpec spec{s, t, Shift{d}};
        const auto red = to_circulant(spec);
        CAPTURE(s);
        CAPTURE(t);
        CAPTURE(d);
        CHECK(check_isomorphism(bundle(spec), circulant(red.n, {1, red.jump}), red.relabel));
      }
}
