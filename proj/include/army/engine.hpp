#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "army/pagoda.hpp"

namespace army {

// A run of jumps from a starting army; replaying it must be legal throughout
// and finish with a man on the target cell.
struct Solution {
  GeometryKind geom = GeometryKind::Conway;
  int level = 1;
  std::vector<Cell> start;
  std::vector<Jump> jumps;
  friend bool operator==(const Solution&, const Solution&) = default;
};

// Windowed board with dense cell ids, the jump table, and per-jump loss data.
// Search state fits in a few machine words.
class Board {
 public:
  static constexpr int kMaxWords = 6;  // up to 384 domain cells

  Board(GeometryKind g, const BoardWindow& w);

  GeometryKind geometry() const { return geom_; }
  const BoardWindow& window() const { return window_; }
  int cell_count() const { return (int)cells_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }
  int id_of(Cell c) const;  // -1 when off the board
  Cell cell_of(int id) const { return cells_[id]; }
  int target_id() const { return target_id_; }
  int mirror_id(int id) const { return mirror_id_[id]; }  // -1 if outside

  struct BoardJump {
    int from, over, to;
    Jump cells;
  };
  const std::vector<BoardJump>& jumps() const { return jumps_; }

 private:
  GeometryKind geom_;
  BoardWindow window_;
  std::vector<Cell> cells_;
  std::vector<int> grid_;  // (x,y) -> id or -1
  std::vector<int> mirror_id_;
  std::vector<BoardJump> jumps_;
  int target_id_ = -1;
  int grid_index(Cell c) const;
};

struct BoardState {
  const Board* board = nullptr;
  std::array<uint64_t, Board::kMaxWords> occ{};

  explicit BoardState(const Board& b) : board(&b) {}
  BoardState(const Board& b, const std::vector<Cell>& men);

  bool occupied(int id) const { return (occ[id >> 6] >> (id & 63)) & 1; }
  void set(int id) { occ[id >> 6] |= (uint64_t)1 << (id & 63); }
  void clear(int id) { occ[id >> 6] &= ~((uint64_t)1 << (id & 63)); }
  int man_count() const;
  std::vector<Cell> men() const;
  friend bool operator==(const BoardState& a, const BoardState& b) {
    return a.occ == b.occ;
  }
};

bool jump_legal(const BoardState& s, const Board::BoardJump& j);
std::vector<Jump> legal_jumps(const BoardState& s);
void apply_jump(BoardState& s, const Board::BoardJump& j);   // throws if illegal
void undo_jump(BoardState& s, const Board::BoardJump& j);    // throws if not undoable

struct VerifyResult {
  bool ok = false;
  int jump_index = -1;  // first offending jump, -1 when the start is bad
  std::string message;
};

// Window-free replay on the infinite board: the start must lie in the
// starting region, every jump must be legal, and the target must end occupied.
VerifyResult verify_solution(const Solution& sol);

// Total weight of the position before any jump and after each jump.
std::vector<SigmaValue> weight_trace(const Solution& sol, const PagodaField& f);

// For zero-slack starts: checks the trace is constant and every jump is the
// lossless run-down pattern (a,a-1,a-2); loss-free Mixed jumps pass too.
bool check_zero_slack_play(const Solution& sol, const PagodaField& f);

enum class OrderOutcome { Ordered, Impossible, Budget };
struct OrderResult {
  OrderOutcome outcome;
  std::optional<Solution> solution;
  uint64_t nodes = 0;
};

// Arranges a multiset of jumps into a legal play from `start`, if possible.
// Backtracking prefers jumps whose cells feed the fewest remaining jumps.
OrderResult order_jumps(GeometryKind g, int level, const std::vector<Cell>& start,
                        const std::vector<Jump>& multiset,
                        uint64_t node_budget = 10'000'000);

// Rewrites a hexagonal solution as a skew solution on the doubled lattice;
// throws std::invalid_argument if any jump is horizontal.
Solution hex_to_skew(const Solution& hex_solution);

// Line-oriented text format:
//   <geometry> <level>
//   start:
//   x,y per line
//   jumps:
//   fx,fy -> tx,ty per line   (the jumped-over cell is the midpoint)
std::string write_solution(const Solution& sol);
Solution read_solution(std::istream& in);
Solution read_solution_text(const std::string& text);

}  // namespace army
