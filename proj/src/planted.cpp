#include "colorpass/planted.hpp"

#include <stdexcept>

#include "colorpass/rng.hpp"

namespace colorpass {

PlantedInstance generate_planted(int n, int k, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("generate_planted: p must be in [0,1]");
  if (k < 2) throw std::invalid_argument("generate_planted: k must be >= 2");
  if (n < k) throw std::invalid_argument("generate_planted: n must be >= k");

  PlantedInstance inst;
  inst.p = p;
  inst.seed = seed;

  // Balanced partition: the first n mod k classes get one extra vertex, then
  // the label vector is shuffled.
  std::vector<int> labels(static_cast<std::size_t>(n));
  {
    const int base = n / k;
    const int extra = n % k;
    std::size_t pos = 0;
    for (int c = 0; c < k; ++c) {
      const int size = base + (c < extra ? 1 : 0);
      for (int i = 0; i < size; ++i) labels[pos++] = c;
    }
    Rng part = Rng::substream(seed, RngStream::Partition);
    part.shuffle(labels);
  }

  inst.planted.k = k;
  inst.planted.colors = labels;
  inst.classes.assign(static_cast<std::size_t>(k), {});
  for (int v = 0; v < n; ++v)
    inst.classes[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)])].push_back(v);

  // Cross-class pairs in canonical (u, v) order, one Bernoulli draw each.
  std::vector<std::pair<int, int>> edges;
  Rng edge_rng = Rng::substream(seed, RngStream::Edges);
  if (p >= 1.0) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (labels[static_cast<std::size_t>(u)] != labels[static_cast<std::size_t>(v)])
          edges.emplace_back(u, v);
  } else if (p > 0.0) {
    for (int u = 0; u < n; ++u) {
      const int lu = labels[static_cast<std::size_t>(u)];
      for (int v = u + 1; v < n; ++v) {
        if (lu == labels[static_cast<std::size_t>(v)]) continue;
        if (edge_rng.bernoulli(p)) edges.emplace_back(u, v);
      }
    }
  }
  inst.graph = Graph::from_edges(n, edges);
  return inst;
}

double edge_probability_for_degree(int n, int k, double d) {
  if (n <= 0 || k < 2) throw std::invalid_argument("edge_probability_for_degree: bad n or k");
  const double cross = static_cast<double>(n) * (k - 1) / k;
  if (cross <= 0.0) throw std::invalid_argument("edge_probability_for_degree: no cross pairs");
  const double p = d / cross;
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge_probability_for_degree: degree out of range for n, k");
  return p;
}

}  // namespace colorpass
