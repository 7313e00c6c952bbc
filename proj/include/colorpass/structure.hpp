#pragma once
#include <cstdint>
#include <vector>

#include "colorpass/planted.hpp"

namespace colorpass {

// A vertex set in which every member has at least d/5 member-neighbors in
// each planted class other than its own and at most d/20 neighbors outside
// the set. Threshold comparisons are exact: counts are compared against d
// after multiplying out the denominator, so fractional d never float-ties.
struct CoreSet {
  std::vector<int> members;   // ascending
  std::vector<char> in_core;  // size n indicator
  double d = 0.0;

  std::int64_t size() const { return static_cast<std::int64_t>(members.size()); }
};

// Constructive extraction: start from all vertices with >= d/4 neighbors in
// each other planted class, then repeatedly delete any vertex with < d/5
// same-set neighbors in some other class or > d/20 neighbors outside the set.
// The deletion rule is monotone, so the fixpoint is order-independent.
CoreSet extract_core(const Graph& g, const Coloring& planted, double d);
CoreSet extract_core(const PlantedInstance& inst, double d);

// Checks both membership conditions for every vertex of `members`.
bool verify_core(const Graph& g, const Coloring& planted, double d,
                 const std::vector<int>& members);
bool verify_core(const PlantedInstance& inst, double d, const std::vector<int>& members);

struct Component {
  std::vector<int> vertices;  // ascending
  std::int64_t edge_count = 0;
  bool has_cycle = false;  // edges >= vertices in a connected component
};

struct ComponentReport {
  std::vector<Component> components;
  std::int64_t max_size = 0;
  std::int64_t cycle_count = 0;
};

// Connected components of the subgraph induced on the vertices outside the
// core.
ComponentReport noncore_components(const Graph& g, const CoreSet& core);

enum class DensestMode { Exact, Peeling };

struct DensestSubgraph {
  std::vector<int> vertices;
  double average_degree = 0.0;
  bool exact = false;  // peeling results are lower-bound witnesses only
};

// Exact mode enumerates all subsets of size <= max_size (requires n <= 24,
// max_size <= 12). Peeling mode greedily removes minimum-degree vertices and
// reports the densest prefix of size <= max_size seen on the way down.
DensestSubgraph densest_small_subgraph(const Graph& g, int max_size, DensestMode mode);

}  // namespace colorpass
