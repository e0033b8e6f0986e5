#include "bookbind/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "bookbind/error.hpp"

namespace bookbind {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto at = text.find(sep, start);
    out.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end)
    throw Error(Errc::Parse, "expected an integer for " + std::string(what) + ", got '" + std::string(token) + "'");
  return value;
}

Automorphism parse_phi(std::string_view value) {
  const auto colon = value.find(':');
  if (colon == std::string_view::npos) throw Error(Errc::Parse, "phi must be shift:D or refl:none|one|two");
  const auto family = value.substr(0, colon);
  const auto arg = value.substr(colon + 1);
  if (family == "shift") return Shift{parse_int(arg, "shift")};
  if (family == "refl") {
    if (arg == "none") return Reflection{ReflectionKind::NoFixed};
    if (arg == "one") return Reflection{ReflectionKind::OneFixed};
    if (arg == "two") return Reflection{ReflectionKind::TwoFixed};
    throw Error(Errc::Parse, "reflection kind must be none, one or two, got '" + std::string(arg) + "'");
  }
  throw Error(Errc::Parse, "unknown automorphism family '" + std::string(family) + "'");
}

CirculantSpec parse_circulant(std::string_view body) {
  CirculantSpec out;
  bool have_n = false, have_s = false, in_jumps = false;
  for (auto token : split(body, ',')) {
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) {
      if (!in_jumps) throw Error(Errc::Parse, "stray token '" + std::string(token) + "'");
      out.jumps.push_back(parse_int(token, "jump"));
      continue;
    }
    const auto key = token.substr(0, eq);
    const auto value = token.substr(eq + 1);
    in_jumps = false;
    if (key == "n" && !have_n) {
      out.n = parse_int(value, "n");
      have_n = true;
    } else if (key == "S" && !have_s) {
      out.jumps.push_back(parse_int(value, "jump"));
      have_s = in_jumps = true;
    } else {
      throw Error(Errc::Parse, "unexpected or repeated key '" + std::string(key) + "'");
    }
  }
  if (!have_n || !have_s) throw Error(Errc::Parse, "circulant spec needs n= and S=");
  return out;
}

}  // namespace

GraphSpec parse_spec(std::string_view text) {
  constexpr std::string_view prefix = "circulant:";
  if (text.substr(0, prefix.size()) == prefix) return parse_circulant(text.substr(prefix.size()));

  std::optional<int> s, t;
  std::optional<Automorphism> phi;
  for (auto token : split(text, ',')) {
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) throw Error(Errc::Parse, "expected key=value, got '" + std::string(token) + "'");
    const auto key = token.substr(0, eq);
    const auto value = token.substr(eq + 1);
    if (key == "s" && !s) {
      s = parse_int(value, "s");
    } else if (key == "t" && !t) {
      t = parse_int(value, "t");
    } else if (key == "phi" && !phi) {
      phi = parse_phi(value);
    } else {
      throw Error(Errc::Parse, "unexpected or repeated key '" + std::string(key) + "'");
    }
  }
  if (!s || !t || !phi) throw Error(Errc::Parse, "bundle spec needs s=, t= and phi=");
  return BundleSpec{*s, *t, *phi};
}

BundleSpec parse_bundle_spec(std::string_view text) {
  auto spec = parse_spec(text);
  if (const auto* b = std::get_if<BundleSpec>(&spec)) return *b;
  throw Error(Errc::Parse, "expected a bundle spec, got a circulant");
}

std::string format_spec(const BundleSpec& spec) {
  std::string out = "s=" + std::to_string(spec.s) + ",t=" + std::to_string(spec.t) + ",phi=";
  if (const auto* shift = std::get_if<Shift>(&spec.phi)) return out + "shift:" + std::to_string(shift->d);
  switch (std::get<Reflection>(spec.phi).kind) {
    case ReflectionKind::NoFixed: return out + "refl:none";
    case ReflectionKind::OneFixed: return out + "refl:one";
    case ReflectionKind::TwoFixed: return out + "refl:two";
  }
  return out;
}

std::string format_spec(const CirculantSpec& spec) {
  std::string out = "circulant:n=" + std::to_string(spec.n) + ",S=";
  for (std::size_t i = 0; i < spec.jumps.size(); ++i) out += (i ? "," : "") + std::to_string(spec.jumps[i]);
  return out;
}

Graph build_graph(const GraphSpec& spec) {
  if (const auto* b = std::get_if<BundleSpec>(&spec)) return bundle(*b);
  const auto& c = std::get<CirculantSpec>(spec);
  return circulant(c.n, c.jumps);
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Json to_json(const BookEmbedding& emb) {
  Json pages = Json::array();
  for (const auto& pe : emb.pages) pages.push_back({pe.edge.u, pe.edge.v, pe.page});
  return {{"order", emb.layout.order()}, {"pages", std::move(pages)}, {"m", emb.m}};
}

Json to_json(const ConstructionResult& result) {
  Json out = {{"spec", format_spec(result.spec)},
              {"lemma", result.lemma},
              {"claimed_pages", result.claimed_pages},
              {"recolored", result.recolored},
              {"colors", result.colors}};
  const Json body = to_json(result.embedding);
  for (const auto& [key, value] : body.items()) out[key] = value;
  return out;
}

Json to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back(
        {{"first", {v.first.u, v.first.v}}, {"second", {v.second.u, v.second.v}}, {"reason", to_string(v.reason)}});
  return {{"valid", report.valid()},
          {"is_proper", report.is_proper},
          {"is_noncrossing", report.is_noncrossing},
          {"pages_used", report.pages_used},
          {"violations", std::move(violations)}};
}

Json to_json(const MbtResult& result) {
  Json value = {{"kind", to_string(result.kind)}, {"m", result.value}};
  Json explored = {{"orders", result.explored.orders},
                   {"nodes", result.explored.nodes},
                   {"refuted", result.explored.refuted},
                   {"budget_exhausted", result.explored.budget_exhausted}};
  return {{"value", std::move(value)},
          {"witness", result.witness ? to_json(*result.witness) : Json(nullptr)},
          {"explored", std::move(explored)}};
}

Json to_json(const Decomposition& d, int t) {
  Json cycles = Json::array();
  for (const auto& cycle : d.cycles) {
    Json c = Json::array();
    for (Vertex v : cycle) c.push_back({v / t, v % t});
    cycles.push_back(std::move(c));
  }
  return {{"kind", to_string(d.kind)}, {"degenerate", d.degenerate}, {"cycles", std::move(cycles)}};
}

Json to_json(const CirculantReduction& r, int t) {
  Json relabel = Json::array();
  for (std::size_t v = 0; v < r.relabel.size(); ++v)
    relabel.push_back({static_cast<int>(v) / t, static_cast<int>(v) % t, r.relabel[v]});
  return {{"n", r.n}, {"jump", r.jump}, {"relabel", std::move(relabel)}};
}

Graph graph_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(Errc::Parse, "graph edges must be [u, v] pairs");
      edges.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
    }
    return Graph(n, std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::Parse, std::string("malformed graph JSON: ") + ex.what());
  }
}

BookEmbedding embedding_from_json(const Json& j) {
  try {
    BookEmbedding emb;
    emb.layout = CircularLayout(j.at("order").get<std::vector<Vertex>>());
    emb.m = j.at("m").get<int>();
    for (const auto& p : j.at("pages")) {
      if (!p.is_array() || p.size() != 3) throw Error(Errc::Parse, "pages must be [u, v, page] triples");
      emb.pages.push_back({make_edge(p[0].get<int>(), p[1].get<int>()), p[2].get<int>()});
    }
    return emb;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::Parse, std::string("malformed embedding JSON: ") + ex.what());
  }
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::Io, "cannot parse " + path.string() + ": " + ex.what());
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(Errc::Io, "failed writing " + path.string());
}

}  // namespace bookbind
