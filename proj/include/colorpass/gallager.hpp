#pragma once
#include <cstdint>
#include <span>
#include <vector>

#include "colorpass/coloring.hpp"
#include "colorpass/factor_graph.hpp"
#include "colorpass/parallel.hpp"

namespace colorpass {

// Message values: a color in {0..k-1} or undecided.
using Msg = std::int8_t;
inline constexpr Msg kUndecidedMsg = -1;

enum class RunStatus { Converged, MaxIters };

// The hard-decision vote shared by variable messages and the final decode:
// undecided when at least two colors have tally < tau, otherwise the color of
// minimum tally (ties to the lowest color index). Undecided incoming messages
// must already be excluded from the tallies.
int message_decision(std::span<const std::int32_t> tallies, int tau);

struct ConvergenceTrace {
  // wrong_core_counts[i] = |U_i|: core vertices with some outgoing message
  // different from the planted color. Index 0 is the initial message load.
  // Filled only when a planted coloring is supplied.
  std::vector<std::int64_t> wrong_core_counts;
  std::vector<std::int64_t> changed_messages;  // changed_messages[i-1] for iteration i
  int converged_at = -1;                       // -1 = never converged
};

// Synchronous two-buffer message passing on the coloring factor graph.
// One iteration updates all constraint->variable messages in parallel from
// the current variable->constraint buffer, then all variable->constraint
// messages in parallel from the fresh constraint->variable buffer.
class GallagerEngine {
 public:
  // phi0 may be partial; unassigned vertices load undecided messages.
  GallagerEngine(const Graph& g, const Coloring& phi0, int tau,
                 ExecMode mode = ExecMode::Parallel);

  // Runs one iteration; returns how many messages changed (both directions).
  std::int64_t step();

  // Per-vertex decode over all incoming constraint->variable messages.
  Coloring decode() const;

  int iteration() const { return iteration_; }
  int k() const { return k_; }
  const FactorGraph& factor_graph() const { return fg_; }
  const std::vector<Msg>& var_to_con() const { return var_to_con_; }
  const std::vector<Msg>& con_to_var() const { return con_to_var_; }

  // True iff vertex v currently sends a message different from `color` on
  // some incident constraint.
  bool sends_wrong_message(int v, int color) const;

 private:
  void sweep_con_to_var(std::vector<Msg>& out) const;
  void sweep_var_to_con(std::vector<Msg>& out) const;

  FactorGraph fg_;
  int k_ = 0;
  int tau_ = 1;
  ExecMode mode_ = ExecMode::Parallel;
  int iteration_ = 0;
  std::vector<Msg> var_to_con_;
  std::vector<Msg> con_to_var_;
  std::vector<Msg> next_;  // scratch for the synchronous swap
};

struct GallagerOptions {
  int tau = 1;
  int max_iters = -1;                 // -1: 10 * ceil_log2(n), at least 1
  const Coloring* planted = nullptr;  // enables the wrong-core trace
  double degree_hint = -1.0;          // d for core extraction; -1: 2m/n
  ExecMode mode = ExecMode::Parallel;
};

struct GallagerResult {
  Coloring decoded;  // partial coloring from the per-vertex decode
  ConvergenceTrace trace;
  RunStatus status = RunStatus::MaxIters;
  int iterations = 0;
};

// Full run per the synchronous schedule: initialize every variable message to
// phi0's color, iterate until no message changes or max_iters, then decode.
GallagerResult run_gallager(const Graph& g, const Coloring& phi0,
                            const GallagerOptions& opt = {});

}  // namespace colorpass
