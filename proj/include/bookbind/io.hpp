#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bookbind/constructions.hpp"
#include "bookbind/decomp.hpp"
#include "bookbind/graph.hpp"
#include "bookbind/layout.hpp"
#include "bookbind/oracle.hpp"

namespace bookbind {

using Json = nlohmann::ordered_json;

struct CirculantSpec {
  int n = 0;
  std::vector<int> jumps;
  bool operator==(const CirculantSpec&) const = default;
};

using GraphSpec = std::variant<BundleSpec, CirculantSpec>;

/// Text forms "s=5,t=7,phi=shift:3", "s=8,t=10,phi=refl:none|one|two" and
/// "circulant:n=35,S=1,10". Malformed text throws Error(Parse); well-formed
/// text with unusable values is left for validation (InvalidSpec and friends).
GraphSpec parse_spec(std::string_view text);
BundleSpec parse_bundle_spec(std::string_view text);
std::string format_spec(const BundleSpec& spec);
std::string format_spec(const CirculantSpec& spec);

Graph build_graph(const GraphSpec& spec);

Json to_json(const Graph& g);
Json to_json(const BookEmbedding& emb);
Json to_json(const ConstructionResult& result);
Json to_json(const ValidationReport& report);
Json to_json(const MbtResult& result);
/// Vertices are written as [p, q] pairs with p = v / t, q = v % t.
Json to_json(const Decomposition& d, int t);
Json to_json(const CirculantReduction& r, int t);

/// Both readers throw Error(Parse) on structurally wrong documents; graph
/// validity errors (loops, duplicates) keep their own codes.
Graph graph_from_json(const Json& j);
BookEmbedding embedding_from_json(const Json& j);

/// Graphviz rendering of the graph.
std::string to_dot(const Graph& g);

/// File access; any failure to open or parse throws Error(Io).
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace bookbind
