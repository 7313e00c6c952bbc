#pragma once
#include <cstdint>
#include <vector>

#include "colorpass/coloring.hpp"
#include "colorpass/graph.hpp"

namespace colorpass {

// A graph drawn from the planted distribution: a hidden balanced k-partition
// is fixed first and every cross-class pair is included with probability p.
struct PlantedInstance {
  Graph graph;
  Coloring planted;                     // the hidden proper coloring
  std::vector<std::vector<int>> classes;  // k sorted vertex lists
  double p = 0.0;
  std::uint64_t seed = 0;
};

// Deterministic for fixed (n, k, p, seed). Class sizes differ by at most one
// when k does not divide n.
PlantedInstance generate_planted(int n, int k, double p, std::uint64_t seed);

// p such that the expected degree p*(k-1)*n/k equals d.
double edge_probability_for_degree(int n, int k, double d);

}  // namespace colorpass
