#pragma once
#include <array>
#include <cstdint>
#include <vector>

#include "colorpass/graph.hpp"

namespace colorpass {

// Bipartite variable/constraint structure for coloring: variables are the
// vertices of G, constraints are its edges. Directed message slots are
// addressed as 2*j + side, where side selects the endpoint of constraint j.
struct FactorGraph {
  int n_variables = 0;
  std::int64_t n_constraints = 0;
  std::vector<std::array<int, 2>> constraint_vars;  // endpoints, ascending
  std::vector<std::int64_t> var_offsets;            // size n_variables + 1
  std::vector<std::int64_t> var_slots;              // slot ids per variable

  std::int64_t slot_count() const { return 2 * n_constraints; }
  int slot_variable(std::int64_t slot) const {
    return constraint_vars[static_cast<std::size_t>(slot >> 1)][slot & 1];
  }
  int slot_other_variable(std::int64_t slot) const {
    return constraint_vars[static_cast<std::size_t>(slot >> 1)][(slot & 1) ^ 1];
  }
  std::span<const std::int64_t> slots_of(int v) const {
    return {var_slots.data() + var_offsets[static_cast<std::size_t>(v)],
            var_slots.data() + var_offsets[static_cast<std::size_t>(v) + 1]};
  }
};

FactorGraph build_factor_graph(const Graph& g);

}  // namespace colorpass
