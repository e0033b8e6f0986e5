#pragma once

#include <string>
#include <variant>
#include <vector>

#include "bookbind/graph.hpp"
#include "bookbind/layout.hpp"

namespace bookbind {

/// The five named page colours. The numeric value is the colour's rank when
/// pages are assigned: used colours are mapped to dense pages in this order.
enum class Color { Yellow = 0, Green = 1, Purple = 2, Red = 3, Blue = 4 };

inline constexpr int kColorCount = 5;

const char* to_string(Color c);

/// Ordered vertex sequences used to lay out bundle vertices on the spine.
/// Every index is 1-based (base index i in 1..s, fiber index j taken mod t into
/// 1..t); returned sequences hold flat 0-based vertex ids.
class SequenceCatalog {
 public:
  explicit SequenceCatalog(const BundleSpec& spec);

  const BundleSpec& spec() const { return spec_; }

  /// Flat id of (i, j); i in 1..s, any integer j (reduced mod t).
  Vertex at(int i, int j) const;

  /// Fiber order A_i = (i,1), (i,2), ..., (i,t).
  std::vector<Vertex> fiber(int i) const;
  /// Column order B_j = (1,j), (2,j), ..., (s,j).
  std::vector<Vertex> column(int j) const;
  /// Residual-cycle order V_k of a shift bundle: (1,k), ..., (s,k), (1,k+d), ...
  std::vector<Vertex> residual(int k) const;
  /// The 4-periodic interleave X of residual(1) and residual(2).
  std::vector<Vertex> interleave() const;
  /// U: the zig-zag rearrangement of columns 1 and t used by the
  /// one-fixed-point reflection with even s.
  std::vector<Vertex> zigzag() const;
  /// Column ends (1,j), (s,j).
  std::vector<Vertex> column_ends(int j) const;
  /// Column interior (2,j), ..., (s-1,j).
  std::vector<Vertex> column_inner(int j) const;
  /// column_ends(j) followed by column_ends(t+1-j).
  std::vector<Vertex> end_pair(int j) const;
  /// column_inner(j) followed by reversed column_inner(t+1-j).
  std::vector<Vertex> inner_pair(int j) const;

  /// Index k in 1..g of the residual cycle holding fiber index j (shift bundles).
  int residual_index(int j) const;

 private:
  BundleSpec spec_;
  int gcd_ = 1;
};

/// Result of one explicit construction. `colors[p]` names the colour drawn on
/// page p; `recolored` is set when the spine had to be recoloured from scratch
/// because the explicit colour classes could not be completed.
struct ConstructionResult {
  BundleSpec spec;
  BookEmbedding embedding;
  int claimed_pages = 0;
  std::string lemma;
  std::vector<std::string> colors;
  bool recolored = false;
};

struct Unsupported {
  std::string reason;
};

struct EmbedOptions {
  /// When set, an explicit colouring that cannot be completed is an error
  /// instead of falling back to a full recolouring of the same spine.
  bool strict = false;
};

/// Shift bundle with gcd(t,d) even; 1 <= d <= t/2.
ConstructionResult embed_shift_even_gcd(int s, int t, int d, const EmbedOptions& options = {});

/// Shift bundle with gcd(t,d) odd and greater than 1; 1 <= d <= t/2.
ConstructionResult embed_shift_odd_gcd(int s, int t, int d, const EmbedOptions& options = {});

/// Reflection bundle with odd s.
ConstructionResult embed_reflection_s_odd(int s, int t, ReflectionKind kind, const EmbedOptions& options = {});

/// Reflection bundle with even s.
ConstructionResult embed_reflection_s_even(int s, int t, ReflectionKind kind, const EmbedOptions& options = {});

/// Dispatches on the (normalized) automorphism. Unsupported for the trivial
/// shift and for gcd(t,d) = 1, whose embeddings are not constructed here.
std::variant<ConstructionResult, Unsupported> embed(const BundleSpec& spec, const EmbedOptions& options = {});

}  // namespace bookbind
