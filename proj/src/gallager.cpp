#include "colorpass/gallager.hpp"

#include <stdexcept>

#include "colorpass/structure.hpp"

namespace colorpass {

namespace {
constexpr int kMaxColors = 32;
}

int message_decision(std::span<const std::int32_t> tallies, int tau) {
  int below = 0;
  int best = 0;
  for (int c = 0; c < static_cast<int>(tallies.size()); ++c) {
    if (tallies[static_cast<std::size_t>(c)] < tau) ++below;
    if (tallies[static_cast<std::size_t>(c)] < tallies[static_cast<std::size_t>(best)]) best = c;
  }
  if (below >= 2) return kUnassigned;
  return best;
}

GallagerEngine::GallagerEngine(const Graph& g, const Coloring& phi0, int tau, ExecMode mode)
    : fg_(build_factor_graph(g)), k_(phi0.k), tau_(tau), mode_(mode) {
  if (phi0.n() != g.n) throw std::invalid_argument("GallagerEngine: coloring size mismatch");
  if (tau < 1) throw std::invalid_argument("GallagerEngine: tau must be >= 1");
  if (k_ < 1 || k_ > kMaxColors) throw std::invalid_argument("GallagerEngine: unsupported k");
  var_to_con_.resize(static_cast<std::size_t>(fg_.slot_count()));
  for (std::int64_t s = 0; s < fg_.slot_count(); ++s) {
    const int c = phi0[fg_.slot_variable(s)];
    var_to_con_[static_cast<std::size_t>(s)] = c == kUnassigned ? kUndecidedMsg : static_cast<Msg>(c);
  }
  // No constraint has spoken yet; the first sweep counts as a change.
  con_to_var_.assign(static_cast<std::size_t>(fg_.slot_count()), kUndecidedMsg);
  next_.resize(static_cast<std::size_t>(fg_.slot_count()));
}

void GallagerEngine::sweep_con_to_var(std::vector<Msg>& out) const {
  // Constraints are repeaters: the message to one endpoint is the other
  // endpoint's current message.
  for_index(fg_.slot_count(), mode_, [&](std::int64_t s) {
    out[static_cast<std::size_t>(s)] = var_to_con_[static_cast<std::size_t>(s ^ 1)];
  });
}

void GallagerEngine::sweep_var_to_con(std::vector<Msg>& out) const {
  for_index(fg_.n_variables, mode_, [&](std::int64_t v) {
    std::int32_t tallies[kMaxColors] = {};
    const auto slots = fg_.slots_of(static_cast<int>(v));
    for (std::int64_t s : slots) {
      const Msg incoming = con_to_var_[static_cast<std::size_t>(s)];
      if (incoming != kUndecidedMsg) ++tallies[incoming];
    }
    for (std::int64_t s : slots) {
      const Msg excluded = con_to_var_[static_cast<std::size_t>(s)];
      if (excluded != kUndecidedMsg) --tallies[excluded];
      const int vote = message_decision({tallies, static_cast<std::size_t>(k_)}, tau_);
      out[static_cast<std::size_t>(s)] = vote == kUnassigned ? kUndecidedMsg : static_cast<Msg>(vote);
      if (excluded != kUndecidedMsg) ++tallies[excluded];
    }
  });
}

std::int64_t GallagerEngine::step() {
  std::int64_t changed = 0;
  sweep_con_to_var(next_);
  for (std::size_t s = 0; s < next_.size(); ++s)
    if (next_[s] != con_to_var_[s]) ++changed;
  con_to_var_.swap(next_);

  sweep_var_to_con(next_);
  for (std::size_t s = 0; s < next_.size(); ++s)
    if (next_[s] != var_to_con_[s]) ++changed;
  var_to_con_.swap(next_);

  ++iteration_;
  return changed;
}

Coloring GallagerEngine::decode() const {
  Coloring out(fg_.n_variables, k_);
  for_index(fg_.n_variables, mode_, [&](std::int64_t v) {
    std::int32_t tallies[kMaxColors] = {};
    for (std::int64_t s : fg_.slots_of(static_cast<int>(v))) {
      const Msg incoming = con_to_var_[static_cast<std::size_t>(s)];
      if (incoming != kUndecidedMsg) ++tallies[incoming];
    }
    out[static_cast<int>(v)] = message_decision({tallies, static_cast<std::size_t>(k_)}, tau_);
  });
  return out;
}

bool GallagerEngine::sends_wrong_message(int v, int color) const {
  for (std::int64_t s : fg_.slots_of(v))
    if (var_to_con_[static_cast<std::size_t>(s)] != static_cast<Msg>(color)) return true;
  return false;
}

GallagerResult run_gallager(const Graph& g, const Coloring& phi0, const GallagerOptions& opt) {
  if (!phi0.fully_assigned())
    throw std::invalid_argument("run_gallager: phi0 must be fully assigned");
  const int max_iters =
      opt.max_iters > 0 ? opt.max_iters : std::max(1, 10 * ceil_log2(g.n));

  GallagerEngine engine(g, phi0, opt.tau, opt.mode);

  std::vector<int> core_members;
  if (opt.planted != nullptr) {
    const double d = opt.degree_hint > 0 ? opt.degree_hint : estimate_degree(g);
    core_members = extract_core(g, *opt.planted, d).members;
  }
  auto wrong_core = [&]() {
    std::int64_t count = 0;
    for (int v : core_members)
      if (engine.sends_wrong_message(v, (*opt.planted)[v])) ++count;
    return count;
  };

  GallagerResult result;
  if (opt.planted != nullptr) result.trace.wrong_core_counts.push_back(wrong_core());
  for (int it = 1; it <= max_iters; ++it) {
    const std::int64_t changed = engine.step();
    result.trace.changed_messages.push_back(changed);
    if (opt.planted != nullptr) result.trace.wrong_core_counts.push_back(wrong_core());
    if (changed == 0) {
      result.trace.converged_at = it;
      result.status = RunStatus::Converged;
      break;
    }
  }
  result.decoded = engine.decode();
  result.iterations = engine.iteration();
  return result;
}

}  // namespace colorpass
