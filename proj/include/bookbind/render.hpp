#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bookbind/graph.hpp"
#include "bookbind/layout.hpp"

namespace bookbind {

enum class LabelMode { Paired, Flat };

/// Drawing options. Paired labels "(p,q)" are 1-based and need the bundle
/// spec; without one the flat vertex id is printed.
struct RenderSpec {
  double radius = 200.0;
  LabelMode labels = LabelMode::Paired;
  std::vector<std::string> palette{"yellow", "green", "purple", "red", "blue"};
  std::optional<BundleSpec> bundle;
};

/// SVG with vertices evenly spaced clockwise from the top in spine order and
/// one straight chord per edge, stroked with palette[page]. Output is a pure
/// function of the inputs.
/// Throws Error(InvalidGraph) for a graph without edges, Error(InvalidEmbedding)
/// when the embedding does not validate, Error(Precondition) when the palette
/// is shorter than the page count or the radius is not positive.
std::string render_svg(const Graph& g, const BookEmbedding& emb, const RenderSpec& spec = {});

}  // namespace bookbind
