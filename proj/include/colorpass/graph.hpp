#pragma once
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace colorpass {

// Undirected simple graph in compressed adjacency form. Neighbor lists are
// sorted ascending; every edge appears in both endpoint lists.
struct Graph {
  int n = 0;
  std::int64_t m = 0;
  std::vector<std::int64_t> offsets;  // size n + 1
  std::vector<int> adjacency;         // size 2m

  std::span<const int> neighbors(int v) const {
    return {adjacency.data() + offsets[static_cast<std::size_t>(v)],
            adjacency.data() + offsets[static_cast<std::size_t>(v) + 1]};
  }
  int degree(int v) const {
    return static_cast<int>(offsets[static_cast<std::size_t>(v) + 1] -
                            offsets[static_cast<std::size_t>(v)]);
  }
  bool has_edge(int u, int v) const;

  // Builds from an edge list; rejects self-loops and duplicate edges.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
};

// Checks simplicity, symmetry, sortedness and the m bookkeeping. On failure
// returns false and, when `why` is given, a one-line reason.
bool validate_graph(const Graph& g, std::string* why = nullptr);

// Average degree 2m/n (0 for the empty vertex set).
double estimate_degree(const Graph& g);

// Smallest t with 2^t >= n (0 for n <= 1).
int ceil_log2(std::int64_t n);

}  // namespace colorpass
