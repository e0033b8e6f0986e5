#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "bookbind/graph.hpp"
#include "bookbind/layout.hpp"

namespace bookbind {

/// Caps for the exhaustive search. Every cap must be positive; running out of
/// any of them turns the affected page count into "unknown".
struct SearchBudget {
  std::uint64_t max_orders = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  double time_limit = std::numeric_limits<double>::infinity();

  void validate() const;
};

enum class MbtKind { Exact, LowerBoundOnly, Inconclusive };

const char* to_string(MbtKind kind);

struct SearchStats {
  std::uint64_t orders = 0;
  std::uint64_t nodes = 0;
  /// Page counts proven infeasible by exhausting every spine order.
  std::vector<int> refuted;
  bool budget_exhausted = false;
};

/// Exact(m): witness on m pages and m-1 refuted (or m equal to the degree
/// bound). LowerBoundOnly(m): m-1 refuted, m undecided. Inconclusive: nothing
/// beyond the static bound was established; `value` carries lower_bound(g).
struct MbtResult {
  MbtKind kind = MbtKind::Inconclusive;
  int value = 0;
  std::optional<BookEmbedding> witness;
  SearchStats explored;
};

struct SearchOptions {
  /// Try only this page count.
  std::optional<int> pages;
  /// First page count tried; 0 means the maximum degree.
  int start = 0;
  /// Worker threads; 0 reads BOOKBIND_THREADS (default 1).
  unsigned threads = 0;
};

/// Max degree, raised by one for regular non-bipartite graphs.
int lower_bound(const Graph& g);

/// Exhaustive matching-book-thickness search. Spine orders are enumerated in
/// lexicographic order with vertex 0 pinned first and mirror images skipped;
/// each order is decided by exact colouring of its conflict graph. Results are
/// identical for identical inputs and budgets regardless of thread count
/// (the wall-clock limit aside).
MbtResult brute_force_mbt(const Graph& g, const SearchBudget& budget = {}, const SearchOptions& options = {});

/// True iff `map` carries the edge set of g exactly onto the edge set of h.
/// Throws Error(InvalidCertificate) if `map` is not a bijection between the
/// vertex sets.
bool check_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> map);

struct Certification {
  bool certified = false;
  int pages = 0;
};

/// Certified(m) when the embedding meets lower_bound(bundle(spec)) exactly.
/// Throws Error(InvalidEmbedding) when the embedding does not validate.
Certification certify(const BundleSpec& spec, const BookEmbedding& emb);

}  // namespace bookbind
