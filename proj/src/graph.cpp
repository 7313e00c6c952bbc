#include "colorpass/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace colorpass {

bool Graph::has_edge(int u, int v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("Graph::from_edges: negative vertex count");
  Graph g;
  g.n = n;
  g.m = static_cast<std::int64_t>(edges.size());
  std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("Graph::from_edges: endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph::from_edges: self-loop");
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  g.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v)
    g.offsets[static_cast<std::size_t>(v) + 1] =
        g.offsets[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v)];
  g.adjacency.resize(static_cast<std::size_t>(2) * edges.size());
  std::vector<std::int64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adjacency[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = v;
    g.adjacency[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = u;
  }
  for (int v = 0; v < n; ++v) {
    auto first = g.adjacency.begin() + g.offsets[static_cast<std::size_t>(v)];
    auto last = g.adjacency.begin() + g.offsets[static_cast<std::size_t>(v) + 1];
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last)
      throw std::invalid_argument("Graph::from_edges: duplicate edge");
  }
  return g;
}

bool validate_graph(const Graph& g, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (g.n < 0) return fail("negative n");
  if (g.offsets.size() != static_cast<std::size_t>(g.n) + 1) return fail("offsets size != n+1");
  if (g.offsets.front() != 0) return fail("offsets[0] != 0");
  if (g.offsets.back() != static_cast<std::int64_t>(g.adjacency.size()))
    return fail("offsets[n] != adjacency size");
  std::int64_t total = 0;
  for (int v = 0; v < g.n; ++v) {
    const auto nb = g.neighbors(v);
    total += static_cast<std::int64_t>(nb.size());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const int u = nb[i];
      if (u < 0 || u >= g.n) return fail("neighbor out of range");
      if (u == v) return fail("self-loop at vertex " + std::to_string(v));
      if (i > 0 && nb[i - 1] >= u) return fail("neighbor list not sorted/unique");
      if (!g.has_edge(u, v)) return fail("asymmetric edge");
    }
  }
  if (total != 2 * g.m) return fail("m != half the adjacency total");
  return true;
}

double estimate_degree(const Graph& g) {
  if (g.n == 0) return 0.0;
  return 2.0 * static_cast<double>(g.m) / static_cast<double>(g.n);
}

int ceil_log2(std::int64_t n) {
  int t = 0;
  std::int64_t pow = 1;
  while (pow < n) {
    pow *= 2;
    ++t;
  }
  return t;
}

}  // namespace colorpass
