#pragma once

#include <string>
#include <vector>

#include "bookbind/graph.hpp"

namespace bookbind {

/// Cyclic spine order: order()[k] is the vertex at clockwise position k.
class CircularLayout {
 public:
  CircularLayout() = default;

  /// Throws Error(InvalidEmbedding) unless `order` is a permutation of 0..n-1.
  explicit CircularLayout(std::vector<Vertex> order);

  const std::vector<Vertex>& order() const { return order_; }
  int size() const { return static_cast<int>(order_.size()); }
  int position(Vertex v) const { return position_[v]; }
  bool contains(Vertex v) const { return v >= 0 && v < size(); }

  bool operator==(const CircularLayout& other) const { return order_ == other.order_; }

 private:
  std::vector<Vertex> order_;
  std::vector<int> position_;
};

struct PagedEdge {
  Edge edge;
  int page = 0;
  bool operator==(const PagedEdge&) const = default;
};

/// Spine order plus a page (colour) for every edge; pages are 0..m-1.
struct BookEmbedding {
  CircularLayout layout;
  std::vector<PagedEdge> pages;
  int m = 1;
};

/// True iff the chords share no endpoint and interleave along the circle.
bool chords_cross(const CircularLayout& layout, Edge a, Edge b);

enum class ViolationReason { SharedEndpoint, Crossing };

const char* to_string(ViolationReason reason);

struct Violation {
  Edge first;
  Edge second;
  ViolationReason reason = ViolationReason::SharedEndpoint;
  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  bool is_proper = true;
  bool is_noncrossing = true;
  int pages_used = 0;
  /// Sorted by (first, second, reason) with first < second.
  std::vector<Violation> violations;

  bool valid() const { return is_proper && is_noncrossing; }
};

/// Checks that `emb` is a matching book embedding of g. Structural problems
/// (layout over the wrong vertex set, missing or extra edges, page indices
/// outside [0, m)) throw Error(Coverage) / Error(InvalidEmbedding); colouring
/// problems are reported as violations.
ValidationReport validate(const Graph& g, const BookEmbedding& emb);

enum class Dispersability { Dispersable, NearlyDispersable, Neither };

const char* to_string(Dispersability d);

/// Classifies a valid embedding by its page count relative to the maximum degree.
/// Throws Error(InvalidEmbedding) if validation fails.
Dispersability classify(const Graph& g, const BookEmbedding& emb);

}  // namespace bookbind
