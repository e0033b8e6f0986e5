// bookbind: build bundles and circulants, construct and check matching book
// embeddings, search for matching book thickness, and draw layouts.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bookbind/constructions.hpp"
#include "bookbind/decomp.hpp"
#include "bookbind/error.hpp"
#include "bookbind/io.hpp"
#include "bookbind/oracle.hpp"
#include "bookbind/render.hpp"
#include "bookbind/sweep.hpp"

using namespace bookbind;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInconclusive = 4;
constexpr int kExitParse = 64;
constexpr int kExitParams = 65;
constexpr int kExitIo = 66;

int exit_code(Errc code) {
  switch (code) {
    case Errc::Parse: return kExitParse;
    case Errc::Io: return kExitIo;
    default: return kExitParams;
  }
}

std::string out_path;

void emit(const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    write_text_file(out_path, text);
  }
}

void emit(const Json& j) { emit(j.dump() + "\n"); }

// A file argument that exists only as a document; parse problems count as I/O.
Graph load_graph(const std::string& path) {
  try {
    return graph_from_json(read_json_file(path));
  } catch (const Error& ex) {
    if (ex.code() == Errc::Parse) throw Error(Errc::Io, ex.what());
    throw;
  }
}

BookEmbedding parse_embedding(const Json& j) {
  try {
    return embedding_from_json(j);
  } catch (const Error& ex) {
    if (ex.code() == Errc::Parse) throw Error(Errc::Io, ex.what());
    throw;
  }
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw Error(Errc::Parse, "range must be LO:HI or a single integer, got '" + text + "'");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching book embeddings of cycle bundles and circulant graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", out_path, "Write output to this file instead of standard output");

  std::string spec_text, graph_path, emb_path;

  auto* build = app.add_subcommand("build", "Print the graph for a spec");
  std::string build_format = "json";
  build->add_option("spec", spec_text, "s=S,t=T,phi=shift:D|refl:none|one|two or circulant:n=N,S=k1,k2")->required();
  build->add_option("--format", build_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* embed_cmd = app.add_subcommand("embed", "Construct a matching book embedding of a bundle");
  bool strict = false;
  embed_cmd->add_option("spec", spec_text, "Bundle spec")->required();
  embed_cmd->add_flag("--strict", strict, "Fail instead of recolouring when fixed colour classes cannot be completed");

  auto* reduce = app.add_subcommand("reduce", "Relabel a coprime shift bundle as a circulant graph");
  reduce->add_option("spec", spec_text, "Bundle spec with phi=shift:D")->required();

  auto* decompose = app.add_subcommand("decompose", "Fiber or residual cycle decomposition of a bundle");
  bool fibers = false;
  decompose->add_option("spec", spec_text, "Bundle spec")->required();
  decompose->add_flag("--fibers", fibers, "Fiber cycles instead of residual cycles");

  auto* verify = app.add_subcommand("verify", "Check an embedding against a graph");
  verify->add_option("graph", graph_path, "Graph JSON")->required();
  verify->add_option("embedding", emb_path, "Embedding JSON")->required();

  auto* mbt = app.add_subcommand("mbt", "Exhaustive matching book thickness search");
  SearchBudget budget;
  std::optional<int> pages;
  unsigned threads = 0;
  mbt->add_option("graph", graph_path, "Graph JSON")->required();
  mbt->add_option("--max-orders", budget.max_orders, "Cap on spine orders explored");
  mbt->add_option("--max-nodes", budget.max_nodes, "Cap on colouring backtrack nodes");
  mbt->add_option("--time-limit", budget.time_limit, "Wall-clock limit in seconds");
  mbt->add_option("--pages", pages, "Try only this page count");
  mbt->add_option("--threads", threads, "Worker threads (default: BOOKBIND_THREADS or 1)");

  auto* render = app.add_subcommand("render", "Draw an embedding as SVG");
  RenderSpec render_spec;
  std::string palette, labels = "paired", render_bundle;
  render->add_option("graph", graph_path, "Graph JSON")->required();
  render->add_option("embedding", emb_path, "Embedding JSON")->required();
  render->add_option("--palette", palette, "Comma separated colour per page");
  render->add_option("--labels", labels, "paired or flat")->check(CLI::IsMember({"paired", "flat"}));
  render->add_option("--radius", render_spec.radius, "Circle radius");
  render->add_option("--spec", render_bundle, "Bundle spec for paired labels");

  auto* sweep = app.add_subcommand("sweep", "Construct, validate and certify a range of bundles");
  std::string s_range = "3:8", t_range = "4:14", families = "shift,reflection", sweep_format = "table";
  sweep->add_option("--s", s_range, "Base cycle length range LO:HI");
  sweep->add_option("--t", t_range, "Fiber cycle length range LO:HI");
  sweep->add_option("--family", families, "shift, shift-even-gcd, shift-odd-gcd, reflection (comma separated)");
  sweep->add_option("--format", sweep_format, "table or json")->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (build->parsed()) {
      const auto g = build_graph(parse_spec(spec_text));
      emit(build_format == "dot" ? to_dot(g) : to_json(g).dump() + "\n");
      return 0;
    }

    if (embed_cmd->parsed()) {
      const auto spec = parse_bundle_spec(spec_text);
      spec.validate();
      auto made = embed(spec, EmbedOptions{strict});
      if (const auto* result = std::get_if<ConstructionResult>(&made)) {
        emit(to_json(*result));
        return 0;
      }
      Json report = {{"unsupported", std::get<Unsupported>(made).reason}};
      try {
        report["reduction"] = to_json(to_circulant(spec), spec.t);
      } catch (const Error&) {
        // The trivial shift has no reduction; the reason alone is reported.
      }
      emit(report);
      return kExitUnsupported;
    }

    if (reduce->parsed()) {
      const auto spec = parse_bundle_spec(spec_text);
      emit(to_json(to_circulant(spec), spec.t));
      return 0;
    }

    if (decompose->parsed()) {
      const auto spec = parse_bundle_spec(spec_text);
      emit(to_json(fibers ? fiber_cycles(spec) : residual_cycles(spec), spec.t));
      return 0;
    }

    if (verify->parsed()) {
      const auto g = load_graph(graph_path);
      const auto doc = read_json_file(emb_path);
      try {
        const auto emb = parse_embedding(doc);
        const auto report = validate(g, emb);
        emit(to_json(report));
        return report.valid() ? 0 : kExitInvalid;
      } catch (const Error& ex) {
        if (ex.code() != Errc::Coverage && ex.code() != Errc::InvalidEmbedding) throw;
        emit(Json{{"valid", false}, {"error", ex.what()}});
        return kExitInvalid;
      }
    }

    if (mbt->parsed()) {
      const auto g = load_graph(graph_path);
      SearchOptions options;
      options.pages = pages;
      options.threads = threads;
      const auto result = brute_force_mbt(g, budget, options);
      emit(to_json(result));
      return result.kind == MbtKind::Exact ? 0 : kExitInconclusive;
    }

    if (render->parsed()) {
      const auto g = load_graph(graph_path);
      const auto doc = read_json_file(emb_path);
      render_spec.labels = labels == "flat" ? LabelMode::Flat : LabelMode::Paired;
      if (!palette.empty()) {
        render_spec.palette = split_list(palette);
      } else if (doc.contains("colors") && doc["colors"].is_array() && !doc["colors"].empty()) {
        render_spec.palette = doc["colors"].get<std::vector<std::string>>();
      }
      if (!render_bundle.empty()) {
        render_spec.bundle = parse_bundle_spec(render_bundle);
      } else if (doc.contains("spec") && doc["spec"].is_string()) {
        render_spec.bundle = parse_bundle_spec(doc["spec"].get<std::string>());
      }
      try {
        emit(render_svg(g, parse_embedding(doc), render_spec));
      } catch (const Error& ex) {
        if (ex.code() != Errc::InvalidEmbedding && ex.code() != Errc::Coverage) throw;
        std::cerr << "bookbind: " << ex.what() << "\n";
        return kExitInvalid;
      }
      return 0;
    }

    if (sweep->parsed()) {
      const auto [s_lo, s_hi] = parse_range(s_range);
      const auto [t_lo, t_hi] = parse_range(t_range);
      std::vector<SweepFamily> fams;
      for (const auto& name : split_list(families)) fams.push_back(parse_family(name));
      const auto specs = sweep_specs({s_lo, s_hi, t_lo, t_hi}, fams);
      bool all_ok = true;
      Json rows = Json::array();
      std::string table = "spec                       predicted pages valid certified status\n";
      for (const auto& spec : specs) {
        const auto row = sweep_row(spec);
        all_ok = all_ok && row.ok();
        rows.push_back({{"spec", format_spec(spec)},
                        {"predicted", row.predicted},
                        {"pages", row.pages},
                        {"valid", row.valid},
                        {"certified", row.certified},
                        {"lemma", row.lemma},
                        {"recolored", row.recolored},
                        {"ok", row.ok()},
                        {"error", row.error}});
        char line[160];
        std::snprintf(line, sizeof line, "%-26s %9d %5d %5s %9s %s\n", format_spec(spec).c_str(), row.predicted,
                      row.pages, row.valid ? "yes" : "no", row.certified ? "yes" : "no",
                      row.ok() ? "ok" : ("FAIL " + row.error).c_str());
        table += line;
      }
      emit(sweep_format == "json" ? rows.dump() + "\n" : table);
      return all_ok ? 0 : 1;
    }
  } catch (const Error& ex) {
    std::cerr << "bookbind: " << to_string(ex.code()) << ": " << ex.what() << "\n";
    return exit_code(ex.code());
  }
  return 0;
}
