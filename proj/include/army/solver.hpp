#pragma once

#include <cstdint>
#include <optional>

#include "army/bounds.hpp"
#include "army/engine.hpp"

namespace army {

struct SearchConfig {
  std::optional<BoardWindow> window;       // defaults to default_window
  int max_size = 0;                        // 0 = up to the region size
  uint64_t node_budget = 50'000'000;       // per candidate army
  uint64_t total_node_budget = 4'000'000'000;
  double time_limit_sec = 0;               // 0 = unlimited
  int threads = 1;
  bool zero_slack_only = false;            // search zero-slack candidates only
  int tt_log2 = 20;                        // transposition slots per worker
  bool progress = false;                   // per-size progress lines on stderr
};

enum class SolveStatus { Optimal, Feasible, Infeasible, Timeout };
const char* name(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::Timeout;
  int best_size = -1;                 // size of the witness, when any
  int proven_lower_bound = 0;         // every smaller size is impossible
  std::optional<Solution> witness;
  uint64_t nodes = 0;
  double seconds = 0;
};

// Exact minimum army search within the window. Candidate sizes run upward
// from the published-style lower bound; per size, candidate armies are
// enumerated as exponent profiles of the basic field (slack >= 0 plus the
// sound slack quantization filter), placements expanded up to mirror
// symmetry, and each start tested by game search with exact weight pruning.
SolveResult minimum_army(GeometryKind g, int level, const SearchConfig& cfg = {});

enum class ReachOutcome { Found, Exhausted, Budget };
const char* name(ReachOutcome o);

struct ReachResult {
  ReachOutcome outcome = ReachOutcome::Exhausted;
  std::optional<Solution> solution;
  uint64_t nodes = 0;
};

// Can `start` put a man on the target? Weight pruning uses the basic field;
// zero_slack_only restricts moves to lossless jumps (complete for zero-slack
// starts). Exhausted is a proof of unreachability within the window.
ReachResult reachability_search(GeometryKind g, int level, const BoardWindow& w,
                                const std::vector<Cell>& start, bool zero_slack_only,
                                uint64_t node_budget = 50'000'000);

}  // namespace army
