#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bookbind/graph.hpp"

namespace bookbind {

enum class DecompositionKind { Fiber, ShiftResidual, ReflectionResidual, Circulant };

const char* to_string(DecompositionKind kind);

/// Edge-disjoint cycles, each an ordered vertex sequence (closing edge implied).
/// `degenerate` marks the trivial-shift residual, whose cycles are the t
/// rung/seam s-cycles of the Cartesian product.
struct Decomposition {
  DecompositionKind kind = DecompositionKind::Fiber;
  std::vector<std::vector<Vertex>> cycles;
  bool degenerate = false;
};

/// All cycle edges in canonical form, sorted. Duplicates are kept so that an
/// overlap between cycles shows up as a repeated entry.
std::vector<Edge> cycle_edges(const Decomposition& d);

/// The s fiber cycles A_i = ((i,0),(i,1),...,(i,t-1)).
Decomposition fiber_cycles(const BundleSpec& spec);

/// C(Z_t, {d}) as gcd(t,d) cycles; cycle k visits k, k+d, k+2d, ... (mod t).
/// Throws Error(HalfJump) for d = t/2 and Error(InvalidJump) outside [1, t).
Decomposition single_jump_cycles(int t, int d);

/// Contracts each part to a single vertex, dropping edges inside a part and
/// collapsing parallel edges. Vertices of the result are the classes
/// (parts and untouched singletons) numbered in order of their smallest member.
Graph shrink(const Graph& g, std::span<const std::vector<Vertex>> parts);

/// Class index of each vertex under the labelling used by shrink().
std::vector<Vertex> shrink_labels(int n, std::span<const std::vector<Vertex>> parts);

/// Residual cycles H_k of bundle(s, t, Shift(d)) for 0 <= d <= t/2. Cycle k
/// starts at (0,k) and runs along the rungs to (s-1,k), across the seam to
/// (0,k+d), and so on. d = 0 yields the t product s-cycles with `degenerate` set.
Decomposition shift_residual_cycles(int s, int t, int d);

/// Residual cycles D_j of a reflection bundle, one per orbit of the reflection
/// on Z_t, ordered by smallest fiber index. Fixed fibers give s-cycles.
Decomposition reflection_residual_cycles(int s, int t, ReflectionKind kind);

/// Dispatches to the shift or reflection residual decomposition. Shift specs
/// are normalized first.
Decomposition residual_cycles(const BundleSpec& spec);

// ---------------------------------------------------------------------------

/// Solution of a*x + b*y = c with 0 <= x0 <= b-1.
struct DiophantineSolution {
  std::int64_t x0 = 0;
  std::int64_t y0 = 0;

  /// 1-based position of 1+c in the sequence 1, 1+a, 1+2a, ... (mod b).
  std::int64_t position() const { return 1 + x0; }
};

/// Throws Error(NoUniqueSolution) when gcd(a,b) != 1, Error(Precondition) when b < 1.
DiophantineSolution solve_position(std::int64_t a, std::int64_t b, std::int64_t c);

/// Isomorphism bundle(s,t,Shift(d)) -> C(Z_{st}, {1, jump}) for gcd(t,d) = 1.
struct CirculantReduction {
  int n = 0;
  int jump = 0;
  /// Unnormalized jump s*x0. Fiber vertex (0,1) carries label n - raw_jump.
  int raw_jump = 0;
  /// relabel[v] is the Z_n label of flat bundle vertex v.
  std::vector<Vertex> relabel;
};

/// Labels the Hamilton residual cycle consecutively from (0,0) toward (1,0).
/// Throws Error(NotReducible) when gcd(t,d) != 1 and Error(Precondition) when
/// d lies outside [1, t/2].
CirculantReduction to_circulant(int s, int t, int d);

/// Same for any shift 1 <= d < t: a shift above t/2 is first mirrored onto
/// t-d through (p,q) -> (p,-q), so the relabel applies to bundle(spec) itself.
CirculantReduction to_circulant(const BundleSpec& spec);

}  // namespace bookbind
