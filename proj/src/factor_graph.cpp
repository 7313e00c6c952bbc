#include "colorpass/factor_graph.hpp"

namespace colorpass {

FactorGraph build_factor_graph(const Graph& g) {
  FactorGraph fg;
  fg.n_variables = g.n;
  fg.n_constraints = g.m;
  fg.constraint_vars.reserve(static_cast<std::size_t>(g.m));
  for (int u = 0; u < g.n; ++u)
    for (int v : g.neighbors(u))
      if (u < v) fg.constraint_vars.push_back({u, v});

  fg.var_offsets.assign(static_cast<std::size_t>(g.n) + 1, 0);
  for (const auto& [u, v] : fg.constraint_vars) {
    ++fg.var_offsets[static_cast<std::size_t>(u) + 1];
    ++fg.var_offsets[static_cast<std::size_t>(v) + 1];
  }
  for (int v = 0; v < g.n; ++v)
    fg.var_offsets[static_cast<std::size_t>(v) + 1] += fg.var_offsets[static_cast<std::size_t>(v)];

  fg.var_slots.resize(static_cast<std::size_t>(fg.slot_count()));
  std::vector<std::int64_t> cursor(fg.var_offsets.begin(), fg.var_offsets.end() - 1);
  for (std::int64_t j = 0; j < fg.n_constraints; ++j) {
    const auto& [u, v] = fg.constraint_vars[static_cast<std::size_t>(j)];
    fg.var_slots[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = 2 * j;
    fg.var_slots[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = 2 * j + 1;
  }
  return fg;
}

}  // namespace colorpass
