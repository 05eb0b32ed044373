#pragma once

#include <optional>
#include <string>
#include <vector>

#include "army/bounds.hpp"
#include "army/pagoda.hpp"

namespace army {

// Integer program over one window: binary start variables STA_m per cell and
// nonnegative jump counts J_n, tied by STA_m + sum_n A_{m,n} J_n = FIN_m.
// Each jump column holds -1 at from, -1 at over, +1 at to.
struct IPModel {
  GeometryKind geom = GeometryKind::Conway;
  int level = 1;
  BoardWindow window;
  std::vector<Cell> cells;
  std::vector<Jump> jumps;
  std::vector<int> smin, smax, fin;  // per cell

  struct CountConstraint {
    std::string label;
    std::vector<int> indices;  // cell ids or jump ids
    int rhs;
  };
  std::vector<CountConstraint> exp_constraints;   // over STA variables
  std::vector<CountConstraint> loss_constraints;  // over J variables

  int cell_id(Cell c) const;  // -1 when absent
};

enum class FinishKind { Target, Anchors };

// SMAX = 1 on the starting region, 0 above it; SMIN = 0; FIN = 1 at the
// target, or at the designated improved field's anchor cells.
IPModel build_ip(GeometryKind g, int level, const BoardWindow& w,
                 FinishKind finish = FinishKind::Target);

// Adds sum_{cells with exponent e} STA = n rows for each (e, n).
void add_exponent_constraints(IPModel& m, const PagodaField& f,
                              const std::vector<std::pair<int, int>>& counts);

// Adds a "exactly one jump losing sigma^j" row.
void add_loss_constraint(IPModel& m, const PagodaField& f, int loss_exponent);

// Plain LP-format text (Minimize / Subject To / Bounds / Binaries / Generals).
// Variables are STA_<x>_<y> with 'm' prefixed to negative coordinates, and
// J_<index>.
std::string export_lp(const IPModel& m);

struct LpSummary {
  int binaries = 0;
  int generals = 0;
  int constraints = 0;
};
LpSummary parse_lp_summary(const std::string& lp_text);

enum class LatticeResult { Feasible, Infeasible, Indeterminate };
const char* name(LatticeResult r);

// Existence of an integer jump vector balancing some start within bounds.
// Signed mode decides via a Hermite basis of the jump lattice (branching over
// unpinned start cells, budget-capped); unsigned mode runs a bounded
// exhaustive search and reports Indeterminate when the budget trips first.
LatticeResult lattice_check(const IPModel& m, bool signed_jumps,
                            uint64_t budget = 20'000'000);

// Verifies a concrete jump-count vector: balance, start bounds, and J >= 0
// when unsigned. A witness makes the unsigned question decidable directly.
bool lattice_check_witness(const IPModel& m, const std::vector<long long>& jump_counts,
                           bool signed_jumps);

}  // namespace army
