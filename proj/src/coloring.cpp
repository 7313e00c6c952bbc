#include "colorpass/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "colorpass/rng.hpp"

namespace colorpass {

bool Coloring::fully_assigned() const {
  return std::all_of(colors.begin(), colors.end(), [](int c) { return c != kUnassigned; });
}

std::int64_t Coloring::assigned_count() const {
  return std::count_if(colors.begin(), colors.end(), [](int c) { return c != kUnassigned; });
}

std::int64_t coloring_distance(const Coloring& a, const Coloring& b) {
  if (a.n() != b.n() || a.k != b.k)
    throw std::invalid_argument("coloring_distance: size or k mismatch");
  std::int64_t d = 0;
  for (int v = 0; v < a.n(); ++v)
    if (a[v] != b[v]) ++d;
  return d;
}

PermutedDistance permuted_distance(const Coloring& a, const Coloring& b) {
  if (a.n() != b.n() || a.k != b.k)
    throw std::invalid_argument("permuted_distance: size or k mismatch");
  if (a.k > 5) throw std::invalid_argument("permuted_distance: k must be <= 5");
  std::vector<int> perm(static_cast<std::size_t>(a.k));
  std::iota(perm.begin(), perm.end(), 0);
  PermutedDistance best;
  best.distance = -1;
  do {
    std::int64_t d = 0;
    for (int v = 0; v < a.n(); ++v) {
      const int ca = a[v];
      const int relabeled = (ca == kUnassigned) ? kUnassigned : perm[static_cast<std::size_t>(ca)];
      if (relabeled != b[v]) ++d;
    }
    if (best.distance < 0 || d < best.distance) {
      best.distance = d;
      best.permutation = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Coloring perturb(const Coloring& phi, std::int64_t flips, std::uint64_t seed) {
  if (!phi.fully_assigned()) throw std::invalid_argument("perturb: phi must be fully assigned");
  if (flips < 0 || flips > phi.n()) throw std::invalid_argument("perturb: flips must be in [0, n]");
  if (phi.k < 2 && flips > 0) throw std::invalid_argument("perturb: k < 2 leaves no other color");
  Coloring out = phi;
  Rng rng = Rng::substream(seed, RngStream::Perturb);
  const std::vector<int> victims = rng.sample_distinct(phi.n(), static_cast<int>(flips));
  for (int v : victims) {
    // uniform over the k-1 colors different from the current one
    const int offset = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(phi.k - 1)));
    out[v] = (phi[v] + offset) % phi.k;
  }
  return out;
}

bool is_proper(const Graph& g, const Coloring& phi) {
  if (phi.n() != g.n) throw std::invalid_argument("is_proper: size mismatch");
  for (int v = 0; v < g.n; ++v) {
    const int cv = phi[v];
    if (cv == kUnassigned) continue;
    for (int u : g.neighbors(v)) {
      if (u > v) break;  // lists are sorted; check each edge once
      if (phi[u] == cv) return false;
    }
  }
  return true;
}

}  // namespace colorpass
