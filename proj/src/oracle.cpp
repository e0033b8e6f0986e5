#include "bookbind/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>

#include "bookbind/coloring.hpp"
#include "bookbind/error.hpp"

namespace bookbind {

void SearchBudget::validate() const {
  if (max_orders == 0) throw Error(Errc::InvalidBudget, "max_orders must be positive");
  if (max_nodes == 0) throw Error(Errc::InvalidBudget, "max_nodes must be positive");
  if (!(time_limit > 0)) throw Error(Errc::InvalidBudget, "time_limit must be positive");
}

const char* to_string(MbtKind kind) {
  switch (kind) {
    case MbtKind::Exact: return "exact";
    case MbtKind::LowerBoundOnly: return "lower-bound-only";
    case MbtKind::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

int lower_bound(const Graph& g) {
  const int delta = max_degree(g);
  if (delta > 0 && is_regular(g, delta) && !is_bipartite(g).bipartite) return delta + 1;
  return delta;
}

namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BOOKBIND_THREADS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value > 0) return static_cast<unsigned>(value);
  }
  return 1;
}

enum class PhaseStatus { Found, Refuted, Exhausted };

struct PhaseOutcome {
  PhaseStatus status = PhaseStatus::Refuted;
  std::vector<Vertex> order;
  std::vector<int> colors;
};

struct OrderVerdict {
  ColoringStatus status = ColoringStatus::Infeasible;
  std::uint64_t nodes = 0;
  std::vector<int> colors;
};

class OrderSearch {
 public:
  OrderSearch(const Graph& g, const SearchBudget& budget, unsigned threads, SearchStats& stats)
      : g_(g), budget_(budget), threads_(threads), stats_(stats), start_(std::chrono::steady_clock::now()) {}

  // Decides whether some spine order admits an m-page matching embedding.
  PhaseOutcome run(int m) {
    const int n = g_.order();
    std::vector<Vertex> rest(static_cast<std::size_t>(std::max(n - 1, 0)));
    std::iota(rest.begin(), rest.end(), 1);
    bool more = true;
    const std::size_t batch_size = 512 * threads_;

    while (more) {
      std::vector<std::vector<Vertex>> batch;
      while (more && batch.size() < batch_size) {
        // Mirror images (same cyclic order read anticlockwise) are skipped.
        if (n < 3 || rest.front() < rest.back()) {
          std::vector<Vertex> order{0};
          order.insert(order.end(), rest.begin(), rest.end());
          batch.push_back(std::move(order));
        }
        more = std::next_permutation(rest.begin(), rest.end());
      }

      std::vector<OrderVerdict> verdicts(batch.size());
      evaluate(batch, m, verdicts);

      // Sequential accounting keeps results independent of the thread count.
      for (std::size_t k = 0; k < batch.size(); ++k) {
        if (stats_.orders >= budget_.max_orders) return exhausted();
        ++stats_.orders;
        stats_.nodes += verdicts[k].nodes;
        if (verdicts[k].status == ColoringStatus::BudgetExhausted || stats_.nodes > budget_.max_nodes)
          return exhausted();
        if (verdicts[k].status == ColoringStatus::Colored)
          return {PhaseStatus::Found, std::move(batch[k]), std::move(verdicts[k].colors)};
      }
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (more && elapsed.count() > budget_.time_limit) return exhausted();
    }
    return {PhaseStatus::Refuted, {}, {}};
  }

 private:
  PhaseOutcome exhausted() {
    stats_.budget_exhausted = true;
    return {PhaseStatus::Exhausted, {}, {}};
  }

  void evaluate(const std::vector<std::vector<Vertex>>& batch, int m, std::vector<OrderVerdict>& out) const {
    const auto work = [&](std::size_t first, std::size_t stride) {
      for (std::size_t k = first; k < batch.size(); k += stride) {
        const CircularLayout layout(batch[k]);
        const auto conflicts = conflict_graph(layout, g_.edges());
        ColoringRequest request;
        request.colors = m;
        request.max_nodes = budget_.max_nodes;
        auto outcome = color_exact(conflicts, request);
        out[k] = {outcome.status, outcome.nodes, std::move(outcome.colors)};
      }
    };
    if (threads_ <= 1 || batch.size() < 2) {
      work(0, 1);
      return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads_; ++w) pool.emplace_back(work, w, threads_);
    for (auto& th : pool) th.join();
  }

  const Graph& g_;
  const SearchBudget& budget_;
  unsigned threads_;
  SearchStats& stats_;
  std::chrono::steady_clock::time_point start_;
};

BookEmbedding make_witness(const Graph& g, std::vector<Vertex> order, const std::vector<int>& colors, int m) {
  BookEmbedding emb;
  emb.layout = CircularLayout(std::move(order));
  emb.m = m;
  for (std::size_t i = 0; i < g.size(); ++i) emb.pages.push_back({g.edges()[i], colors[i]});
  return emb;
}

}  // namespace

MbtResult brute_force_mbt(const Graph& g, const SearchBudget& budget, const SearchOptions& options) {
  budget.validate();
  MbtResult result;
  if (g.size() == 0) {
    result.kind = MbtKind::Exact;
    result.value = 0;
    return result;
  }
  const int delta = max_degree(g);
  const int first = options.pages ? *options.pages : std::max({options.start, delta, 1});
  const int last = options.pages ? *options.pages : std::min<int>(static_cast<int>(g.size()), kMaxColors);
  if (first < 1 || first > kMaxColors) throw Error(Errc::Precondition, "page count must be in [1, 64]");

  OrderSearch search(g, budget, resolve_threads(options.threads), result.explored);
  // Refuting m pages refutes every smaller count too, so the floor only grows.
  int proven_floor = std::max(lower_bound(g), 1);

  for (int m = first; m <= last; ++m) {
    auto phase = search.run(m);
    if (phase.status == PhaseStatus::Found) {
      result.witness = make_witness(g, std::move(phase.order), phase.colors, m);
      result.kind = m <= proven_floor ? MbtKind::Exact : MbtKind::Inconclusive;
      result.value = m <= proven_floor ? m : lower_bound(g);
      if (result.kind == MbtKind::Inconclusive && !result.explored.refuted.empty()) {
        result.kind = MbtKind::LowerBoundOnly;
        result.value = proven_floor;
      }
      return result;
    }
    if (phase.status == PhaseStatus::Exhausted) break;
    result.explored.refuted.push_back(m);
    proven_floor = std::max(proven_floor, m + 1);
  }

  if (result.explored.refuted.empty()) {
    result.kind = MbtKind::Inconclusive;
    result.value = lower_bound(g);
  } else {
    result.kind = MbtKind::LowerBoundOnly;
    result.value = proven_floor;
  }
  return result;
}

bool check_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> map) {
  if (g.order() != h.order() || map.size() != static_cast<std::size_t>(g.order()))
    throw Error(Errc::InvalidCertificate, "map must cover equally sized vertex sets");
  std::vector<bool> hit(map.size(), false);
  for (Vertex v : map) {
    if (v < 0 || v >= h.order() || hit[v]) throw Error(Errc::InvalidCertificate, "map is not a bijection");
    hit[v] = true;
  }
  if (g.size() != h.size()) return false;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return h.has_edge(map[e.u], map[e.v]); });
}

Certification certify(const BundleSpec& spec, const BookEmbedding& emb) {
  const auto g = bundle(spec);
  const auto report = validate(g, emb);
  if (!report.valid()) throw Error(Errc::InvalidEmbedding, "embedding does not validate against the bundle");
  const int bound = lower_bound(g);
  return {report.pages_used == bound, report.pages_used};
}

}  // namespace bookbind
