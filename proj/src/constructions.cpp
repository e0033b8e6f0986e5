#include "bookbind/constructions.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bookbind/coloring.hpp"
#include "bookbind/error.hpp"

namespace bookbind {

const char* to_string(Color c) {
  switch (c) {
    case Color::Yellow: return "yellow";
    case Color::Green: return "green";
    case Color::Purple: return "purple";
    case Color::Red: return "red";
    case Color::Blue: return "blue";
  }
  return "unknown";
}

namespace {

int wrap(int j, int t) { return ((j - 1) % t + t) % t + 1; }

std::vector<Vertex> reversed(std::vector<Vertex> seq) {
  std::reverse(seq.begin(), seq.end());
  return seq;
}

void append(std::vector<Vertex>& spine, const std::vector<Vertex>& seq) {
  spine.insert(spine.end(), seq.begin(), seq.end());
}

}  // namespace

// ---------------------------------------------------------------------------
// SequenceCatalog

SequenceCatalog::SequenceCatalog(const BundleSpec& spec) : spec_(spec) {
  spec_.validate();
  if (const auto* shift = std::get_if<Shift>(&spec_.phi)) gcd_ = std::gcd(spec_.t, shift->d);
}

Vertex SequenceCatalog::at(int i, int j) const {
  if (i < 1 || i > spec_.s) throw std::out_of_range("base index " + std::to_string(i) + " outside 1..s");
  return spec_.vertex(i - 1, wrap(j, spec_.t) - 1);
}

std::vector<Vertex> SequenceCatalog::fiber(int i) const {
  std::vector<Vertex> out;
  for (int j = 1; j <= spec_.t; ++j) out.push_back(at(i, j));
  return out;
}

std::vector<Vertex> SequenceCatalog::column(int j) const {
  std::vector<Vertex> out;
  for (int i = 1; i <= spec_.s; ++i) out.push_back(at(i, j));
  return out;
}

std::vector<Vertex> SequenceCatalog::residual(int k) const {
  const auto* shift = std::get_if<Shift>(&spec_.phi);
  if (shift == nullptr || shift->d == 0) throw std::logic_error("residual orders need a nontrivial shift");
  std::vector<Vertex> out;
  for (int l = 0; l < spec_.t / gcd_; ++l)
    for (int i = 1; i <= spec_.s; ++i) out.push_back(at(i, k + l * shift->d));
  return out;
}

std::vector<Vertex> SequenceCatalog::interleave() const {
  const auto v1 = residual(1);
  const auto v2 = residual(2);
  const std::size_t len = v1.size();
  std::vector<Vertex> out;
  // Quadruples V1[a], V2[a], V2[a+1], V1[a+1]; an odd length ends with V1[len], V2[len].
  const std::size_t paired = len - len % 2;
  for (std::size_t a = 0; a < paired; a += 2) {
    out.push_back(v1[a]);
    out.push_back(v2[a]);
    out.push_back(v2[a + 1]);
    out.push_back(v1[a + 1]);
  }
  if (len % 2 == 1) {
    out.push_back(v1[len - 1]);
    out.push_back(v2[len - 1]);
  }
  return out;
}

std::vector<Vertex> SequenceCatalog::zigzag() const {
  const int s = spec_.s;
  const int t = spec_.t;
  std::vector<Vertex> out;
  for (int i = s; i >= 2; --i) {
    if ((s - i) % 2 == 0) {
      out.push_back(at(i, 1));
      out.push_back(at(i, t));
    } else {
      out.push_back(at(i, t));
      out.push_back(at(i, 1));
    }
  }
  // The listing closes with (1,1), (1,t) regardless of the alternation.
  out.push_back(at(1, 1));
  out.push_back(at(1, t));
  return out;
}

std::vector<Vertex> SequenceCatalog::column_ends(int j) const { return {at(1, j), at(spec_.s, j)}; }

std::vector<Vertex> SequenceCatalog::column_inner(int j) const {
  std::vector<Vertex> out;
  for (int i = 2; i < spec_.s; ++i) out.push_back(at(i, j));
  return out;
}

std::vector<Vertex> SequenceCatalog::end_pair(int j) const {
  auto out = column_ends(j);
  append(out, column_ends(spec_.t + 1 - j));
  return out;
}

std::vector<Vertex> SequenceCatalog::inner_pair(int j) const {
  auto out = column_inner(j);
  append(out, reversed(column_inner(spec_.t + 1 - j)));
  return out;
}

int SequenceCatalog::residual_index(int j) const { return (wrap(j, spec_.t) - 1) % gcd_ + 1; }

// ---------------------------------------------------------------------------

namespace {

using Palette = std::initializer_list<Color>;

std::uint64_t mask_of(Palette colors) {
  std::uint64_t mask = 0;
  for (Color c : colors) mask |= std::uint64_t{1} << static_cast<int>(c);
  return mask;
}

// Collects the explicit colour classes of one construction, then completes the
// remaining edges inside their named palettes.
class Painter {
 public:
  Painter(const SequenceCatalog& catalog, std::vector<Vertex> spine, std::string lemma)
      : catalog_(catalog),
        graph_(bundle(catalog.spec())),
        spine_(std::move(spine)),
        lemma_(std::move(lemma)),
        color_(graph_.size(), -1),
        allowed_(graph_.size(), 0) {}

  const SequenceCatalog& catalog() const { return catalog_; }

  /// Paints the edge {(i1,j1),(i2,j2)} given in 1-based indices.
  void paint(int i1, int j1, int i2, int j2, Color c) { paint_flat(catalog_.at(i1, j1), catalog_.at(i2, j2), c); }

  /// Paints the fiber edge ((i,j),(i,j+1)).
  void fiber(int i, int j, Color c) { paint(i, j, i, j + 1, c); }

  /// Paints the rung ((i,j),(i+1,j)).
  void rung(int i, int j, Color c) { paint(i, j, i + 1, j, c); }

  void paint_flat(Vertex a, Vertex b, Color c) {
    const auto idx = index(a, b);
    const int value = static_cast<int>(c);
    if (color_[idx] != -1 && color_[idx] != value && conflict_.empty()) {
      const auto e = graph_.edges()[idx];
      conflict_ = "explicit classes give edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} both " +
                  to_string(static_cast<Color>(color_[idx])) + " and " + to_string(c);
    }
    color_[idx] = value;
  }

  /// Restricts the completion palette of an edge that is not explicitly painted.
  void allow(Vertex a, Vertex b, Palette colors) {
    const auto idx = index(a, b);
    if (allowed_[idx] == 0) allowed_[idx] = mask_of(colors);
  }

  /// Restricts every consecutive pair (cyclically) of `cycle`.
  void allow_cycle(const std::vector<Vertex>& cycle, Palette colors) {
    for (std::size_t k = 0; k < cycle.size(); ++k) allow(cycle[k], cycle[(k + 1) % cycle.size()], colors);
  }

  void allow_kind(BundleEdgeKind kind, Palette colors) {
    const auto mask = mask_of(colors);
    for (std::size_t idx = 0; idx < graph_.size(); ++idx)
      if (allowed_[idx] == 0 && classify_edge(catalog_.spec(), graph_.edges()[idx]) == kind) allowed_[idx] = mask;
  }

  ConstructionResult finish(int claimed_pages, const EmbedOptions& options) const {
    CircularLayout layout(spine_);
    if (layout.size() != graph_.order()) throw std::logic_error(lemma_ + ": spine is not a permutation of all vertices");

    ConstructionResult result;
    result.spec = catalog_.spec();
    result.claimed_pages = claimed_pages;
    result.lemma = lemma_;

    const auto conflicts = conflict_graph(layout, graph_.edges());
    std::string failure = conflict_;
    std::vector<int> colors;
    if (failure.empty()) {
      ColoringRequest request;
      request.colors = kColorCount;
      request.fixed = color_;
      request.allowed.resize(graph_.size());
      for (std::size_t idx = 0; idx < graph_.size(); ++idx) {
        if (color_[idx] != -1) {
          request.allowed[idx] = std::uint64_t{1} << color_[idx];
        } else if (allowed_[idx] != 0) {
          request.allowed[idx] = allowed_[idx];
        } else {
          const auto e = graph_.edges()[idx];
          throw std::logic_error(lemma_ + ": edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 "} has neither a colour nor a palette");
        }
      }
      request.max_nodes = kCompletionNodes;
      const auto outcome = color_exact(conflicts, request);
      if (outcome.status == ColoringStatus::Colored) {
        colors = outcome.colors;
        std::vector<int> distinct = colors;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (static_cast<int>(distinct.size()) != claimed_pages) {
          failure = "explicit classes use " + std::to_string(distinct.size()) + " colours";
          colors.clear();
        }
      } else {
        failure = outcome.status == ColoringStatus::Infeasible ? "no completion inside the named palettes"
                                                                : "completion search budget exhausted";
      }
    }

    if (!failure.empty()) {
      if (options.strict) throw Error(Errc::ConstructionFailed, lemma_ + ": " + failure);
      ColoringRequest request;
      request.colors = claimed_pages;
      request.max_nodes = kCompletionNodes;
      const auto outcome = color_exact(conflicts, request);
      if (outcome.status != ColoringStatus::Colored)
        throw Error(Errc::ConstructionFailed, lemma_ + ": " + failure + "; spine admits no " +
                                                  std::to_string(claimed_pages) + "-page recolouring");
      colors = outcome.colors;
      result.recolored = true;
    }

    // Dense pages in colour rank order.
    std::array<int, kMaxColors> page_of{};
    page_of.fill(-1);
    for (int c : colors) page_of[c] = 0;
    int pages = 0;
    for (int c = 0; c < kMaxColors; ++c)
      if (page_of[c] == 0) {
        page_of[c] = pages++;
        result.colors.push_back(result.recolored || c >= kColorCount ? to_string(static_cast<Color>(c % kColorCount))
                                                                     : to_string(static_cast<Color>(c)));
      }

    result.embedding.layout = std::move(layout);
    result.embedding.m = pages;
    for (std::size_t idx = 0; idx < graph_.size(); ++idx)
      result.embedding.pages.push_back({graph_.edges()[idx], page_of[colors[idx]]});

    const auto report = validate(graph_, result.embedding);
    if (!report.valid() || report.pages_used != claimed_pages)
      throw std::logic_error(lemma_ + ": generated embedding failed validation");
    return result;
  }

 private:
  static constexpr std::uint64_t kCompletionNodes = 5'000'000;

  std::size_t index(Vertex a, Vertex b) const {
    const auto idx = graph_.edge_index(make_edge(a, b));
    if (!idx) {
      const auto pa = catalog_.spec().coords(a), pb = catalog_.spec().coords(b);
      throw std::logic_error(lemma_ + ": (" + std::to_string(pa.p + 1) + "," + std::to_string(pa.q + 1) + ")-(" +
                             std::to_string(pb.p + 1) + "," + std::to_string(pb.q + 1) + ") is not an edge");
    }
    return *idx;
  }

  const SequenceCatalog& catalog_;
  Graph graph_;
  std::vector<Vertex> spine_;
  std::string lemma_;
  std::vector<int> color_;
  std::vector<std::uint64_t> allowed_;
  std::string conflict_;
};

void require_shift_range(int t, int d) {
  if (d < 1 || d > t / 2)
    throw Error(Errc::Precondition, "shift construction needs 1 <= d <= t/2, got d=" + std::to_string(d));
}

}  // namespace

// ---------------------------------------------------------------------------
// gcd(t,d) even: spine V_1 V_2^- V_3 V_4^- ... V_g^-.

ConstructionResult embed_shift_even_gcd(int s, int t, int d, const EmbedOptions& options) {
  require_shift_range(t, d);
  const int g = std::gcd(t, d);
  if (g % 2 != 0) throw Error(Errc::Precondition, "gcd(t,d) must be even");
  const SequenceCatalog cat({s, t, Shift{d}});

  std::vector<Vertex> spine;
  for (int k = 1; k <= g; ++k) append(spine, k % 2 == 1 ? cat.residual(k) : reversed(cat.residual(k)));
  Painter paint(cat, std::move(spine), "shift-even-gcd");

  // Fiber edges are named by their lower endpoint (i,j) -> (i,j+1).
  const auto last = cat.residual(g);
  const auto split = std::find(last.begin(), last.end(), cat.at(1, t)) - last.begin();
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= t; ++j) {
      const int k = cat.residual_index(j);
      if (k % 2 == 1) {
        paint.fiber(i, j, Color::Yellow);
      } else if (k < g) {
        paint.fiber(i, j, Color::Purple);
      } else {
        const auto pos = std::find(last.begin(), last.end(), cat.at(i, j)) - last.begin();
        paint.fiber(i, j, pos < split ? Color::Purple : Color::Green);
      }
    }

  for (int i = 1; i <= g; ++i) paint.paint(1, i, s, i - d, Color::Red);
  if (s % 2 == 0)
    paint.allow_kind(BundleEdgeKind::Rung, {Color::Red, Color::Green, Color::Purple});
  else
    paint.allow_kind(BundleEdgeKind::Rung, {Color::Red, Color::Green, Color::Blue});
  if (s % 2 == 0)
    paint.allow_kind(BundleEdgeKind::Seam, {Color::Red, Color::Green, Color::Purple});
  else
    paint.allow_kind(BundleEdgeKind::Seam, {Color::Red, Color::Green, Color::Blue});

  return paint.finish(s % 2 == 0 ? 4 : 5, options);
}

// ---------------------------------------------------------------------------
// gcd(t,d) odd and > 1.

namespace {

ConstructionResult shift_odd_bipartite(int s, int t, int d, const EmbedOptions& options) {
  const SequenceCatalog cat({s, t, Shift{d}});
  std::vector<Vertex> spine;
  for (int k = 0; k < t / 2; ++k) {
    append(spine, cat.column(2 * k + 1));
    append(spine, reversed(cat.column(t - 2 * k)));
  }
  Painter paint(cat, std::move(spine), "shift-odd-gcd/bipartite");

  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= t; ++j) paint.fiber(i, j, j % 2 == 0 ? Color::Yellow : Color::Green);
  for (int i = 1; i <= t; ++i) paint.paint(1, i, s, i - d, i % 2 == 1 ? Color::Red : Color::Purple);
  paint.allow_kind(BundleEdgeKind::Rung, {Color::Red, Color::Purple});
  return paint.finish(4, options);
}

ConstructionResult shift_odd_nonbipartite(int s, int t, int d, const EmbedOptions& options) {
  const SequenceCatalog cat({s, t, Shift{d}});
  const int g = std::gcd(t, d);
  const int cycle_length = s * t / g;
  const bool even_cycles = cycle_length % 2 == 0;

  std::vector<Vertex> spine = cat.interleave();
  for (int k = 3; k <= g; ++k) append(spine, k % 2 == 1 ? reversed(cat.residual(k)) : cat.residual(k));
  Painter paint(cat, std::move(spine),
                even_cycles ? "shift-odd-gcd/nonbipartite/even-residual" : "shift-odd-gcd/nonbipartite/odd-residual");
  const auto col = [t](int j) { return wrap(j, t); };

  if (even_cycles) {
    for (int i = 1; i <= s; ++i)
      for (int j = 1; j <= t; ++j) {
        const int k = cat.residual_index(j);
        if (k == 1)
          paint.fiber(i, j, j == 1 ? Color::Yellow : Color::Purple);
        else if (k == g)
          paint.fiber(i, j, j == t ? Color::Purple : Color::Yellow);
        else
          paint.fiber(i, j, k % 2 == 0 ? Color::Green : Color::Yellow);
      }
  } else {
    for (int i = 1; i <= s; ++i)
      for (int j = 1; j <= t; ++j) {
        const int k = cat.residual_index(j);
        // Yellow
        if (k % 2 == 1 && k >= 3 && k <= g - 2) paint.fiber(i, j, Color::Yellow);
        if (k == g && j != t) paint.fiber(i, j, Color::Yellow);
        if (j == 1 && i >= 3) paint.fiber(i, j, Color::Yellow);
        // Green
        if (k % 2 == 0 && k <= g - 1 && !(i == s && j == col(2 - d))) paint.fiber(i, j, Color::Green);
        // Purple
        if (j == t && i >= 2) paint.fiber(i, j, Color::Purple);
        if (k == 1 && j != 1 && !((i == s - 1 || i == s) && j == col(1 - d))) paint.fiber(i, j, Color::Purple);
      }
    paint.fiber(s, 1 - d, Color::Green);
    paint.fiber(s, 2 - d, Color::Blue);
    paint.fiber(2, 1, Color::Blue);
    paint.fiber(1, 1, Color::Purple);
    paint.fiber(1, t, Color::Red);
    paint.fiber(s - 1, 1 - d, Color::Red);
  }

  // Residual cycles H_1 and H_2.
  if (even_cycles) {
    paint.rung(1, 1, Color::Red);
    paint.rung(1, 2, Color::Red);
  } else {
    paint.rung(1, 1, Color::Yellow);
    paint.rung(1, 2, Color::Yellow);
    paint.rung(s - 1, 2 - d, Color::Purple);
    paint.rung(s - 1, 1 - d, Color::Purple);
    paint.paint(1, 1, s, 1 - d, Color::Blue);
    paint.paint(1, 2, s, 2 - d, Color::Red);
    paint.rung(2, 1, Color::Red);
    paint.rung(2, 2, Color::Red);
  }
  paint.allow_cycle(cat.residual(1), {Color::Red, Color::Blue});
  paint.allow_cycle(cat.residual(2), {Color::Red, Color::Blue});

  for (int k = 3; k <= g - 1; ++k) paint.allow_cycle(cat.residual(k), {Color::Red, Color::Purple, Color::Blue});

  // H_g: the seam into (s,t) is blue, column t alternates yellow/red, the rest purple/red.
  paint.paint(s, t, 1, t + d, Color::Blue);
  for (int i = 1; i < s; ++i) paint.allow(cat.at(i, t), cat.at(i + 1, t), {Color::Yellow, Color::Red});
  paint.allow_cycle(cat.residual(g), {Color::Purple, Color::Red});

  return paint.finish(5, options);
}

}  // namespace

ConstructionResult embed_shift_odd_gcd(int s, int t, int d, const EmbedOptions& options) {
  require_shift_range(t, d);
  const int g = std::gcd(t, d);
  if (g % 2 == 0 || g == 1) throw Error(Errc::Precondition, "gcd(t,d) must be odd and greater than 1");
  if (t % 2 == 0 && s % 2 == 1 && d % 2 == 1) return shift_odd_bipartite(s, t, d, options);
  return shift_odd_nonbipartite(s, t, d, options);
}

// ---------------------------------------------------------------------------
// Reflections.

ConstructionResult embed_reflection_s_odd(int s, int t, ReflectionKind kind, const EmbedOptions& options) {
  if (s % 2 == 0) throw Error(Errc::Precondition, "s must be odd");
  const SequenceCatalog cat({s, t, Reflection{kind}});

  std::vector<Vertex> spine;
  for (int i = 1; i <= s; ++i) append(spine, i % 2 == 1 ? reversed(cat.fiber(i)) : cat.fiber(i));
  Painter paint(cat, std::move(spine), "reflection-s-odd");

  for (int i = 1; i <= s - 1; ++i)
    for (int j = 1; j <= t; ++j) paint.rung(i, j, i % 2 == 1 ? Color::Yellow : Color::Green);
  if (kind == ReflectionKind::TwoFixed) {
    for (int i = 2; i <= t; ++i) paint.paint(1, i, s, t + 2 - i, Color::Purple);
    paint.paint(1, 1, s, 1, Color::Blue);
  } else {
    for (int i = 1; i <= t; ++i) paint.paint(s, i, 1, t + 1 - i, Color::Purple);
  }
  if (t % 2 == 0)
    paint.allow_kind(BundleEdgeKind::Fiber, {Color::Yellow, Color::Green, Color::Purple, Color::Red});
  else
    paint.allow_kind(BundleEdgeKind::Fiber, {Color::Yellow, Color::Green, Color::Purple, Color::Red, Color::Blue});

  return paint.finish(kind == ReflectionKind::NoFixed ? 4 : 5, options);
}

namespace {

ConstructionResult reflection_two_fixed_even(int s, int t, const EmbedOptions& options) {
  const SequenceCatalog cat({s, t, Reflection{ReflectionKind::TwoFixed}});
  std::vector<Vertex> spine;
  for (int j = 1; j <= t; ++j) append(spine, j % 2 == 1 ? cat.column(j) : reversed(cat.column(j)));
  Painter paint(cat, std::move(spine), "reflection-s-even/two-fixed");

  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= t; ++j) paint.fiber(i, j, j % 2 == 1 ? Color::Yellow : Color::Green);
  paint.allow_kind(BundleEdgeKind::Rung, {Color::Blue, Color::Red});
  paint.allow_kind(BundleEdgeKind::Seam, {Color::Blue, Color::Red});
  return paint.finish(4, options);
}

ConstructionResult reflection_one_fixed_even(int s, int t, const EmbedOptions& options) {
  const SequenceCatalog cat({s, t, Reflection{ReflectionKind::OneFixed}});
  std::vector<Vertex> spine = reversed(cat.zigzag());
  for (int j = 2; j <= t - 1; ++j) append(spine, j % 2 == 0 ? reversed(cat.column(j)) : cat.column(j));
  Painter paint(cat, std::move(spine), "reflection-s-even/one-fixed");

  for (int i = 1; i <= s; ++i) {
    for (int j = 1; j <= t - 2; j += 2)
      if (!(i == 2 && j == 1)) paint.fiber(i, j, Color::Yellow);
    for (int j = 2; j <= t - 1; j += 2)
      if (!(i == 1 && j == t - 1)) paint.fiber(i, j, Color::Green);
  }
  paint.fiber(2, t, Color::Yellow);
  paint.fiber(1, t, Color::Green);
  paint.fiber(1, t - 1, Color::Blue);
  paint.fiber(2, 1, Color::Red);
  for (int i = 3; i <= s; ++i) paint.fiber(i, t, Color::Red);

  // Residual cycle through columns j and t+1-j (a single column when fixed).
  const auto residual = [&](int j) {
    auto cycle = cat.column(j);
    if (2 * j != t + 1) append(cycle, cat.column(t + 1 - j));
    return cycle;
  };
  for (int i = 1; i <= 2; ++i) {
    paint.rung(1, t + 1 - i, Color::Red);
    paint.paint(1, t + 1 - i, s, i, Color::Purple);
    paint.allow_cycle(residual(i), {Color::Blue, Color::Purple});
  }
  for (int i = 3; i <= (t + 1) / 2; ++i) paint.allow_cycle(residual(i), {Color::Blue, Color::Purple});
  return paint.finish(5, options);
}

ConstructionResult reflection_no_fixed_even(int s, int t, const EmbedOptions& options) {
  const SequenceCatalog cat({s, t, Reflection{ReflectionKind::NoFixed}});
  const int half = t / 2;
  std::vector<Vertex> spine;
  for (int j = 1; j <= half; ++j) append(spine, j % 2 == 0 ? reversed(cat.end_pair(j)) : cat.end_pair(j));
  for (int j = half; j >= 1; --j) append(spine, j % 2 == 1 ? reversed(cat.inner_pair(j)) : cat.inner_pair(j));
  Painter paint(cat, std::move(spine), half % 2 == 1 ? "reflection-s-even/no-fixed/odd-half"
                                                      : "reflection-s-even/no-fixed/even-half");

  const auto is_end = [s](int i) { return i == 1 || i == s; };
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= t; ++j) {
      if (j % 2 == 0 && !(is_end(i) && (j == half || j == t))) paint.fiber(i, j, Color::Green);
      if (j % 2 == 1 && !(is_end(i) && j == half)) paint.fiber(i, j, Color::Yellow);
    }
  for (int j : {half, t}) {
    paint.fiber(1, j, Color::Blue);
    paint.fiber(s, j, Color::Red);
  }

  for (int i : {1, half}) {
    paint.rung(s - 1, i, Color::Purple);
    paint.rung(1, i, Color::Red);
  }
  for (int j : {half + 1, t}) {
    paint.rung(1, j, Color::Purple);
    paint.rung(s - 1, j, Color::Blue);
  }
  // Seam edges ((i,j),(s+1-i,t+1-j)) for (i,j) in the column ends of V_j.
  for (int j = 1; j <= half; ++j) {
    Color c = Color::Red;
    if (j == 1) c = Color::Green;
    if (j == half) c = half % 2 == 1 ? Color::Yellow : Color::Green;
    for (int i : {1, s}) paint.paint(i, j, s + 1 - i, t + 1 - j, c);
  }
  paint.allow_kind(BundleEdgeKind::Rung, {Color::Red, Color::Purple, Color::Blue});
  return paint.finish(5, options);
}

}  // namespace

ConstructionResult embed_reflection_s_even(int s, int t, ReflectionKind kind, const EmbedOptions& options) {
  if (s % 2 != 0) throw Error(Errc::Precondition, "s must be even");
  BundleSpec{s, t, Reflection{kind}}.validate();
  switch (kind) {
    case ReflectionKind::TwoFixed: return reflection_two_fixed_even(s, t, options);
    case ReflectionKind::OneFixed: return reflection_one_fixed_even(s, t, options);
    case ReflectionKind::NoFixed: return reflection_no_fixed_even(s, t, options);
  }
  throw std::logic_error("unhandled reflection kind");
}

// ---------------------------------------------------------------------------

namespace {

// Carries a Shift(t-d) construction over to Shift(d) through (p,q) -> (p,-q).
ConstructionResult mirror_fibers(ConstructionResult result, const BundleSpec& target) {
  const int t = target.t;
  const auto flip = [&](Vertex v) {
    const auto b = target.coords(v);
    return target.vertex(b.p, (t - b.q) % t);
  };
  std::vector<Vertex> order;
  for (Vertex v : result.embedding.layout.order()) order.push_back(flip(v));
  result.embedding.layout = CircularLayout(std::move(order));
  for (auto& pe : result.embedding.pages) pe.edge = make_edge(flip(pe.edge.u), flip(pe.edge.v));
  std::sort(result.embedding.pages.begin(), result.embedding.pages.end(),
            [](const PagedEdge& a, const PagedEdge& b) { return a.edge < b.edge; });
  result.spec = target;
  return result;
}

}  // namespace

std::variant<ConstructionResult, Unsupported> embed(const BundleSpec& spec, const EmbedOptions& options) {
  spec.validate();
  if (const auto* reflection = std::get_if<Reflection>(&spec.phi)) {
    if (spec.s % 2 == 1) return embed_reflection_s_odd(spec.s, spec.t, reflection->kind, options);
    return embed_reflection_s_even(spec.s, spec.t, reflection->kind, options);
  }

  const auto normal = normalize_shift(spec);
  const int d = std::get<Shift>(normal.phi).d;
  if (d == 0) return Unsupported{"trivial shift: the bundle is the Cartesian product C_s x C_t"};
  const int g = std::gcd(spec.t, d);
  if (g == 1)
    return Unsupported{"gcd(t,d) = 1: the bundle is isomorphic to the circulant C(Z_st, {1,k}); use the reduction"};
  auto result = g % 2 == 0 ? embed_shift_even_gcd(spec.s, spec.t, d, options)
                           : embed_shift_odd_gcd(spec.s, spec.t, d, options);
  if (normal == spec) return result;
  return mirror_fibers(std::move(result), spec);
}

}  // namespace bookbind
