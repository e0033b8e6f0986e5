#include "bookbind/decomp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "bookbind/error.hpp"

namespace bookbind {

const char* to_string(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::Fiber: return "fiber";
    case DecompositionKind::ShiftResidual: return "shift-residual";
    case DecompositionKind::ReflectionResidual: return "reflection-residual";
    case DecompositionKind::Circulant: return "circulant";
  }
  return "unknown";
}

std::vector<Edge> cycle_edges(const Decomposition& d) {
  std::vector<Edge> out;
  for (const auto& cycle : d.cycles) {
    const std::size_t len = cycle.size();
    for (std::size_t i = 0; i < len; ++i) out.push_back(make_edge(cycle[i], cycle[(i + 1) % len]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Decomposition fiber_cycles(const BundleSpec& spec) {
  spec.validate();
  Decomposition out{DecompositionKind::Fiber, {}, false};
  for (int i = 0; i < spec.s; ++i) {
    std::vector<Vertex> cycle;
    for (int j = 0; j < spec.t; ++j) cycle.push_back(spec.vertex(i, j));
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

Decomposition single_jump_cycles(int t, int d) {
  if (t < 3) throw Error(Errc::InvalidSize, "modulus must be at least 3");
  if (d < 1 || d >= t) throw Error(Errc::InvalidJump, "jump must satisfy 1 <= d < t");
  if (2 * d == t) throw Error(Errc::HalfJump, "jump t/2 gives a perfect matching, not cycles");
  const int g = std::gcd(t, d);
  Decomposition out{DecompositionKind::Circulant, {}, false};
  for (int k = 0; k < g; ++k) {
    std::vector<Vertex> cycle;
    int v = k;
    do {
      cycle.push_back(v);
      v = (v + d) % t;
    } while (v != k);
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::vector<Vertex> shrink_labels(int n, std::span<const std::vector<Vertex>> parts) {
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw Error(Errc::InvalidPartition, "empty part");
    for (Vertex v : parts[i]) {
      if (v < 0 || v >= n) throw Error(Errc::InvalidPartition, "part vertex out of range");
      if (owner[v] != -1) throw Error(Errc::InvalidPartition, "parts overlap at vertex " + std::to_string(v));
      owner[v] = static_cast<int>(i);
    }
  }
  // A class is numbered when its smallest member is reached in increasing order.
  std::vector<Vertex> label(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> part_label(parts.size(), -1);
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (owner[v] == -1) {
      label[v] = next++;
    } else {
      auto& pl = part_label[owner[v]];
      if (pl == -1) pl = next++;
      label[v] = pl;
    }
  }
  return label;
}

Graph shrink(const Graph& g, std::span<const std::vector<Vertex>> parts) {
  const auto label = shrink_labels(g.order(), parts);
  const int classes = g.order() == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (label[e.u] == label[e.v]) continue;
    edges.push_back(make_edge(label[e.u], label[e.v]));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(classes, std::move(edges));
}

namespace {

// Walks rungs from (0,q) to (s-1,q), crosses the seam, and repeats until the
// walk returns to fiber index `start`.
std::vector<Vertex> residual_walk(const BundleSpec& spec, int start) {
  std::vector<Vertex> cycle;
  int q = start;
  do {
    for (int p = 0; p < spec.s; ++p) cycle.push_back(spec.vertex(p, q));
    q = apply(spec.phi, q, spec.t);
  } while (q != start);
  return cycle;
}

}  // namespace

Decomposition shift_residual_cycles(int s, int t, int d) {
  if (d < 0 || d > t / 2)
    throw Error(Errc::Precondition, "shift residual needs 0 <= d <= t/2, got d=" + std::to_string(d));
  const BundleSpec spec{s, t, Shift{d}};
  spec.validate();
  Decomposition out{DecompositionKind::ShiftResidual, {}, d == 0};
  const int count = d == 0 ? t : std::gcd(t, d);
  for (int k = 0; k < count; ++k) out.cycles.push_back(residual_walk(spec, k));
  return out;
}

Decomposition reflection_residual_cycles(int s, int t, ReflectionKind kind) {
  const BundleSpec spec{s, t, Reflection{kind}};
  spec.validate();
  Decomposition out{DecompositionKind::ReflectionResidual, {}, false};
  std::vector<bool> seen(static_cast<std::size_t>(t), false);
  for (int q = 0; q < t; ++q) {
    if (seen[q]) continue;
    seen[q] = true;
    seen[apply(spec.phi, q, t)] = true;
    out.cycles.push_back(residual_walk(spec, q));
  }
  return out;
}

Decomposition residual_cycles(const BundleSpec& spec) {
  spec.validate();
  const auto normal = normalize_shift(spec);
  if (const auto* shift = std::get_if<Shift>(&normal.phi)) {
    if (shift->d == std::get<Shift>(spec.phi).d) return shift_residual_cycles(spec.s, spec.t, shift->d);
    // Shift(t-d): same column orbits, walked with the original seam.
    Decomposition out{DecompositionKind::ShiftResidual, {}, false};
    const int g = std::gcd(spec.t, shift->d);
    for (int k = 0; k < g; ++k) out.cycles.push_back(residual_walk(spec, k));
    return out;
  }
  return reflection_residual_cycles(spec.s, spec.t, std::get<Reflection>(spec.phi).kind);
}

// ---------------------------------------------------------------------------

DiophantineSolution solve_position(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (b < 1) throw Error(Errc::Precondition, "modulus b must be positive");
  // Extended Euclid on (a mod b, b): old_r = gcd, old_s * a == gcd (mod b).
  std::int64_t old_r = ((a % b) + b) % b, r = b;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1 && b != 1)
    throw Error(Errc::NoUniqueSolution, "gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
  const std::int64_t inverse = ((old_s % b) + b) % b;
  const std::int64_t residue = ((c % b) + b) % b;
  DiophantineSolution out;
  out.x0 = static_cast<std::int64_t>((static_cast<__int128>(inverse) * residue) % b);
  out.y0 = (c - a * out.x0) / b;
  return out;
}

CirculantReduction to_circulant(int s, int t, int d) {
  const BundleSpec spec{s, t, Shift{d}};
  spec.validate();
  if (d < 1 || d > t / 2)
    throw Error(Errc::Precondition, "reduction needs 1 <= d <= t/2, got d=" + std::to_string(d));
  if (std::gcd(t, d) != 1)
    throw Error(Errc::NotReducible, "gcd(t, d) = " + std::to_string(std::gcd(t, d)) + " is not 1");

  CirculantReduction out;
  out.n = s * t;
  out.relabel.assign(static_cast<std::size_t>(out.n), -1);
  const auto hamilton = residual_walk(spec, 0);
  for (std::size_t i = 0; i < hamilton.size(); ++i) out.relabel[hamilton[i]] = static_cast<Vertex>(i);

  // (t-d) x - t y = 1, i.e. (t-d) x = 1 (mod t). With the seam running
  // (s-1,j) -> (0,j+d) the walk reaches fiber index 1 after s*(t-x0) steps,
  // so (0,1) sits at -s*x0 on Z_n; the jump set {1, s*x0} is the same.
  const auto sol = solve_position(t - d, t, 1);
  out.raw_jump = static_cast<int>(s * sol.x0);
  if ((out.relabel[spec.vertex(0, 1)] + out.raw_jump) % out.n != 0)
    throw std::logic_error("residual walk disagrees with the Diophantine jump");
  out.jump = std::min(out.raw_jump, out.n - out.raw_jump);
  return out;
}

CirculantReduction to_circulant(const BundleSpec& spec) {
  spec.validate();
  const auto* shift = std::get_if<Shift>(&spec.phi);
  if (!shift) throw Error(Errc::NotReducible, "only shift bundles reduce to circulants");
  const int s = spec.s, t = spec.t, d = shift->d;
  if (2 * d <= t) return to_circulant(s, t, d);
  auto out = to_circulant(s, t, t - d);
  auto mirrored = out.relabel;
  for (int p = 0; p < s; ++p)
    for (int q = 0; q < t; ++q) mirrored[spec.vertex(p, q)] = out.relabel[spec.vertex(p, (t - q) % t)];
  out.relabel = std::move(mirrored);
  return out;
}

}  // namespace bookbind
