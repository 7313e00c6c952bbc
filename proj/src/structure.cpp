#include "colorpass/structure.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace colorpass {

namespace {

// count >= d/q  <=>  q*count >= d (exact: both sides representable)
bool at_least(std::int64_t count, int q, double d) { return static_cast<double>(q * count) >= d; }
bool less_than(std::int64_t count, int q, double d) { return static_cast<double>(q * count) < d; }
bool more_than(std::int64_t count, int q, double d) { return static_cast<double>(q * count) > d; }

void check_planted_args(const Graph& g, const Coloring& planted, double d) {
  if (planted.n() != g.n) throw std::invalid_argument("core: coloring size mismatch");
  if (!planted.fully_assigned()) throw std::invalid_argument("core: planted must be fully assigned");
  if (!(d > 0.0)) throw std::invalid_argument("core: d must be positive");
}

}  // namespace

CoreSet extract_core(const Graph& g, const Coloring& planted, double d) {
  check_planted_args(g, planted, d);
  const int n = g.n;
  const int k = planted.k;

  CoreSet core;
  core.d = d;
  core.in_core.assign(static_cast<std::size_t>(n), 0);

  // Seed set: >= d/4 neighbors in every other planted class, counted in G.
  std::vector<std::int32_t> class_count(static_cast<std::size_t>(n) * k, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v))
      ++class_count[static_cast<std::size_t>(v) * k + planted[u]];
  for (int v = 0; v < n; ++v) {
    bool ok = true;
    for (int c = 0; c < k && ok; ++c) {
      if (c == planted[v]) continue;
      ok = at_least(class_count[static_cast<std::size_t>(v) * k + c], 4, d);
    }
    core.in_core[static_cast<std::size_t>(v)] = ok ? 1 : 0;
  }

  // Per-vertex tallies restricted to the current set, maintained under
  // deletion. Deleting a vertex can only make neighbors more deletable.
  std::vector<std::int32_t> in_set(static_cast<std::size_t>(n) * k, 0);
  std::vector<std::int32_t> outside(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) {
      if (core.in_core[static_cast<std::size_t>(u)])
        ++in_set[static_cast<std::size_t>(v) * k + planted[u]];
      else
        ++outside[static_cast<std::size_t>(v)];
    }

  auto deletable = [&](int v) {
    if (more_than(outside[static_cast<std::size_t>(v)], 20, d)) return true;
    for (int c = 0; c < k; ++c) {
      if (c == planted[v]) continue;
      if (less_than(in_set[static_cast<std::size_t>(v) * k + c], 5, d)) return true;
    }
    return false;
  };

  std::deque<int> work;
  for (int v = 0; v < n; ++v)
    if (core.in_core[static_cast<std::size_t>(v)]) work.push_back(v);
  while (!work.empty()) {
    const int v = work.front();
    work.pop_front();
    if (!core.in_core[static_cast<std::size_t>(v)] || !deletable(v)) continue;
    core.in_core[static_cast<std::size_t>(v)] = 0;
    for (int u : g.neighbors(v)) {
      --in_set[static_cast<std::size_t>(u) * k + planted[v]];
      ++outside[static_cast<std::size_t>(u)];
      if (core.in_core[static_cast<std::size_t>(u)]) work.push_back(u);
    }
  }

  for (int v = 0; v < n; ++v)
    if (core.in_core[static_cast<std::size_t>(v)]) core.members.push_back(v);
  return core;
}

CoreSet extract_core(const PlantedInstance& inst, double d) {
  return extract_core(inst.graph, inst.planted, d);
}

bool verify_core(const Graph& g, const Coloring& planted, double d,
                 const std::vector<int>& members) {
  check_planted_args(g, planted, d);
  const int k = planted.k;
  std::vector<char> in_set(static_cast<std::size_t>(g.n), 0);
  for (int v : members) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("verify_core: vertex out of range");
    in_set[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<std::int64_t> tallies(static_cast<std::size_t>(k));
  for (int v : members) {
    std::fill(tallies.begin(), tallies.end(), 0);
    std::int64_t out_count = 0;
    for (int u : g.neighbors(v)) {
      if (in_set[static_cast<std::size_t>(u)])
        ++tallies[static_cast<std::size_t>(planted[u])];
      else
        ++out_count;
    }
    for (int c = 0; c < k; ++c) {
      if (c == planted[v]) continue;
      if (!at_least(tallies[static_cast<std::size_t>(c)], 5, d)) return false;
    }
    if (more_than(out_count, 20, d)) return false;
  }
  return true;
}

bool verify_core(const PlantedInstance& inst, double d, const std::vector<int>& members) {
  return verify_core(inst.graph, inst.planted, d, members);
}

ComponentReport noncore_components(const Graph& g, const CoreSet& core) {
  ComponentReport report;
  std::vector<char> in_core = core.in_core;
  if (in_core.empty()) {
    in_core.assign(static_cast<std::size_t>(g.n), 0);
    for (int v : core.members) in_core[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  auto skip = [&](int v) { return in_core[static_cast<std::size_t>(v)] != 0; };
  for (int start = 0; start < g.n; ++start) {
    if (seen[static_cast<std::size_t>(start)] || skip(start)) continue;
    Component comp;
    std::deque<int> queue{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      comp.vertices.push_back(v);
      for (int u : g.neighbors(v)) {
        if (skip(u)) continue;
        ++comp.edge_count;  // both endpoints non-core; counted twice
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          queue.push_back(u);
        }
      }
    }
    comp.edge_count /= 2;
    std::sort(comp.vertices.begin(), comp.vertices.end());
    comp.has_cycle = comp.edge_count >= static_cast<std::int64_t>(comp.vertices.size());
    report.max_size = std::max(report.max_size, static_cast<std::int64_t>(comp.vertices.size()));
    if (comp.has_cycle) ++report.cycle_count;
    report.components.push_back(std::move(comp));
  }
  return report;
}

namespace {

DensestSubgraph densest_exact(const Graph& g, int max_size) {
  if (g.n > 24 || max_size > 12)
    throw std::invalid_argument("densest_small_subgraph: exact mode requires n <= 24, max_size <= 12");
  DensestSubgraph best;
  best.exact = true;
  if (g.n == 0) return best;

  std::vector<std::uint32_t> adj_mask(static_cast<std::size_t>(g.n), 0);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.neighbors(v)) adj_mask[static_cast<std::size_t>(v)] |= 1u << u;

  std::int64_t best_twice_edges = -1;
  int best_size = 1;
  std::uint32_t best_mask = 0;
  const std::uint32_t end = g.n >= 32 ? 0 : (1u << g.n);
  for (std::uint32_t mask = 1; mask != end; ++mask) {
    const int size = std::popcount(mask);
    if (size > max_size) continue;
    std::int64_t twice_edges = 0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      twice_edges += std::popcount(adj_mask[static_cast<std::size_t>(v)] & mask);
    }
    // maximize twice_edges / size by integer cross-multiplication
    if (best_twice_edges < 0 || twice_edges * best_size > best_twice_edges * size) {
      best_twice_edges = twice_edges;
      best_size = size;
      best_mask = mask;
    }
  }
  for (int v = 0; v < g.n; ++v)
    if (best_mask & (1u << v)) best.vertices.push_back(v);
  best.average_degree = static_cast<double>(best_twice_edges) / best_size;
  return best;
}

DensestSubgraph densest_peeling(const Graph& g, int max_size) {
  DensestSubgraph best;
  best.exact = false;
  if (g.n == 0) return best;

  std::vector<std::int64_t> degree(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) degree[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<char> removed(static_cast<std::size_t>(g.n), 0);
  std::vector<int> removal_order;
  removal_order.reserve(static_cast<std::size_t>(g.n));

  std::int64_t edges = g.m;
  int alive = g.n;
  std::int64_t best_twice_edges = -1;
  int best_alive = 1;
  int best_removed_prefix = 0;

  auto consider = [&](int removed_count) {
    if (alive == 0 || alive > max_size) return;
    if (best_twice_edges < 0 || 2 * edges * best_alive > best_twice_edges * alive) {
      best_twice_edges = 2 * edges;
      best_alive = alive;
      best_removed_prefix = removed_count;
    }
  };
  consider(0);
  while (alive > 1) {
    int victim = -1;
    for (int v = 0; v < g.n; ++v) {
      if (removed[static_cast<std::size_t>(v)]) continue;
      if (victim < 0 || degree[static_cast<std::size_t>(v)] < degree[static_cast<std::size_t>(victim)])
        victim = v;
    }
    removed[static_cast<std::size_t>(victim)] = 1;
    removal_order.push_back(victim);
    edges -= degree[static_cast<std::size_t>(victim)];
    --alive;
    for (int u : g.neighbors(victim))
      if (!removed[static_cast<std::size_t>(u)]) --degree[static_cast<std::size_t>(u)];
    consider(static_cast<int>(removal_order.size()));
  }

  std::vector<char> gone(static_cast<std::size_t>(g.n), 0);
  for (int i = 0; i < best_removed_prefix; ++i)
    gone[static_cast<std::size_t>(removal_order[static_cast<std::size_t>(i)])] = 1;
  for (int v = 0; v < g.n; ++v)
    if (!gone[static_cast<std::size_t>(v)]) best.vertices.push_back(v);
  best.average_degree = static_cast<double>(best_twice_edges) / best_alive;
  return best;
}

}  // namespace

DensestSubgraph densest_small_subgraph(const Graph& g, int max_size, DensestMode mode) {
  if (max_size < 1) throw std::invalid_argument("densest_small_subgraph: max_size must be >= 1");
  return mode == DensestMode::Exact ? densest_exact(g, max_size) : densest_peeling(g, max_size);
}

}  // namespace colorpass
