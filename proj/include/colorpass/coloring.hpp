#pragma once
#include <cstdint>
#include <vector>

#include "colorpass/graph.hpp"

namespace colorpass {

// Colors are 0-based internally ({0..k-1}); file and CLI I/O is 1-based with
// 0 meaning unassigned.
inline constexpr int kUnassigned = -1;

struct Coloring {
  int k = 0;
  std::vector<int> colors;  // entries in {0..k-1} or kUnassigned

  Coloring() = default;
  Coloring(int n, int k_, int fill = kUnassigned)
      : k(k_), colors(static_cast<std::size_t>(n), fill) {}

  int n() const { return static_cast<int>(colors.size()); }
  int operator[](int v) const { return colors[static_cast<std::size_t>(v)]; }
  int& operator[](int v) { return colors[static_cast<std::size_t>(v)]; }

  bool fully_assigned() const;
  std::int64_t assigned_count() const;
  std::int64_t unassigned_count() const { return n() - assigned_count(); }

  bool operator==(const Coloring&) const = default;
};

// Raw Hamming distance over vertices; kUnassigned differs from every color.
std::int64_t coloring_distance(const Coloring& a, const Coloring& b);

struct PermutedDistance {
  std::int64_t distance = 0;
  std::vector<int> permutation;  // color c of `a` relabeled to permutation[c]
};

// Minimum coloring_distance over all k! relabelings of a's colors. k <= 5.
PermutedDistance permuted_distance(const Coloring& a, const Coloring& b);

// Flips exactly `flips` distinct vertices to a uniformly chosen different
// color; requires phi fully assigned.
Coloring perturb(const Coloring& phi, std::int64_t flips, std::uint64_t seed);

// True iff no edge has both endpoints assigned the same color; unassigned
// endpoints never conflict.
bool is_proper(const Graph& g, const Coloring& phi);

}  // namespace colorpass
