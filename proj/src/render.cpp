#include "bookbind/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "bookbind/error.hpp"

namespace bookbind {

namespace {

std::string stroke_for(const std::string& name) {
  if (name == "yellow") return "#e0b400";
  if (name == "green") return "#2e9e44";
  if (name == "purple") return "#7d3c98";
  if (name == "red") return "#d62728";
  if (name == "blue") return "#1f5fbf";
  return name;
}

std::string format(const char* fmt, auto... args) {
  const int len = std::snprintf(nullptr, 0, fmt, args...);
  std::string out(static_cast<std::size_t>(len) + 1, '\0');
  std::snprintf(out.data(), out.size(), fmt, args...);
  out.pop_back();
  return out;
}

}  // namespace

std::string render_svg(const Graph& g, const BookEmbedding& emb, const RenderSpec& spec) {
  if (g.size() == 0) throw Error(Errc::InvalidGraph, "nothing to render: the graph has no edges");
  if (!(spec.radius > 0)) throw Error(Errc::Precondition, "radius must be positive");
  const auto report = validate(g, emb);
  if (!report.valid()) throw Error(Errc::InvalidEmbedding, "embedding does not validate");
  if (static_cast<int>(spec.palette.size()) < emb.m)
    throw Error(Errc::Precondition, "palette has " + std::to_string(spec.palette.size()) + " colours for " +
                                        std::to_string(emb.m) + " pages");
  const bool paired = spec.labels == LabelMode::Paired && spec.bundle &&
                      spec.bundle->vertex_count() == g.order();

  const int n = g.order();
  const double margin = 40.0;
  const double centre = spec.radius + margin;
  std::vector<double> x(n), y(n);
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n - std::numbers::pi / 2.0;
    const Vertex v = emb.layout.order()[k];
    x[v] = centre + spec.radius * std::cos(angle);
    y[v] = centre + spec.radius * std::sin(angle);
  }

  std::string out;
  out += format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                2 * centre, 2 * centre, 2 * centre, 2 * centre);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += format("<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"none\" stroke=\"#cccccc\"/>\n", centre, centre,
                spec.radius);
  for (const auto& pe : emb.pages)
    out += format("<line class=\"chord\" data-page=\"%d\" x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"%s\" stroke-width=\"1.5\"/>\n",
                  pe.page, x[pe.edge.u], y[pe.edge.u], x[pe.edge.v], y[pe.edge.v],
                  stroke_for(spec.palette[pe.page]).c_str());
  for (Vertex v = 0; v < n; ++v) {
    const double lx = centre + (x[v] - centre) * (1.0 + 18.0 / spec.radius);
    const double ly = centre + (y[v] - centre) * (1.0 + 18.0 / spec.radius);
    const std::string label = paired ? format("(%d,%d)", spec.bundle->coords(v).p + 1, spec.bundle->coords(v).q + 1)
                                     : std::to_string(v);
    out += format("<circle class=\"vertex\" cx=\"%.3f\" cy=\"%.3f\" r=\"3\" fill=\"black\"/>\n", x[v], y[v]);
    out += format("<text x=\"%.3f\" y=\"%.3f\" font-size=\"9\" text-anchor=\"middle\" dominant-baseline=\"middle\">%s</text>\n",
                  lx, ly, label.c_str());
  }
  out += "</svg>\n";
  return out;
}

}  // namespace bookbind
