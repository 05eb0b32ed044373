#include "army/engine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace army {

int Board::grid_index(Cell c) const {
  if (!window_.contains(c)) return -1;
  int w = window_.xmax - window_.xmin + 1;
  return c.y * w + (c.x - window_.xmin);
}

Board::Board(GeometryKind g, const BoardWindow& w) : geom_(g), window_(w) {
  int gw = w.xmax - w.xmin + 1;
  grid_.assign((size_t)gw * (w.ymax + 1), -1);
  for (int y = 0; y <= w.ymax; ++y)
    for (int x = w.xmin; x <= w.xmax; ++x) {
      Cell c{x, y};
      if (in_domain(g, c)) {
        grid_[grid_index(c)] = (int)cells_.size();
        cells_.push_back(c);
      }
    }
  if ((int)cells_.size() > kMaxWords * 64)
    throw std::invalid_argument("window too large for search board (" +
                                std::to_string(cells_.size()) + " cells)");
  target_id_ = id_of(target_cell());
  if (target_id_ < 0) throw std::invalid_argument("window must contain the target");
  mirror_id_.resize(cells_.size());
  for (size_t i = 0; i < cells_.size(); ++i)
    mirror_id_[i] = id_of(mirror_cell(g, cells_[i]));
  for (const Jump& j : enumerate_jumps(g, w))
    jumps_.push_back({id_of(j.from), id_of(j.over), id_of(j.to), j});
}

int Board::id_of(Cell c) const {
  int gi = grid_index(c);
  return gi < 0 ? -1 : grid_[gi];
}

BoardState::BoardState(const Board& b, const std::vector<Cell>& men) : board(&b) {
  for (const Cell& c : men) {
    int id = b.id_of(c);
    if (id < 0) throw std::invalid_argument("man outside the board");
    if (occupied(id)) throw std::invalid_argument("duplicate man");
    set(id);
  }
}

int BoardState::man_count() const {
  int n = 0;
  for (uint64_t w : occ) n += __builtin_popcountll(w);
  return n;
}

std::vector<Cell> BoardState::men() const {
  std::vector<Cell> out;
  for (int id = 0; id < board->cell_count(); ++id)
    if (occupied(id)) out.push_back(board->cell_of(id));
  return out;
}

bool jump_legal(const BoardState& s, const Board::BoardJump& j) {
  return s.occupied(j.from) && s.occupied(j.over) && !s.occupied(j.to);
}

std::vector<Jump> legal_jumps(const BoardState& s) {
  std::vector<Jump> out;
  for (const auto& j : s.board->jumps())
    if (jump_legal(s, j)) out.push_back(j.cells);
  return out;
}

void apply_jump(BoardState& s, const Board::BoardJump& j) {
  if (!jump_legal(s, j)) throw std::invalid_argument("illegal jump");
  s.clear(j.from);
  s.clear(j.over);
  s.set(j.to);
}

void undo_jump(BoardState& s, const Board::BoardJump& j) {
  if (!(!s.occupied(j.from) && !s.occupied(j.over) && s.occupied(j.to)))
    throw std::invalid_argument("jump cannot be undone from this state");
  s.set(j.from);
  s.set(j.over);
  s.clear(j.to);
}

namespace {

bool direction_ok(GeometryKind g, Cell d) {
  for (const Cell& v : jump_directions(g))
    if (v == d) return true;
  return false;
}

std::optional<std::string> jump_shape_error(GeometryKind g, const Jump& j) {
  Cell d{j.to.x - j.over.x, j.to.y - j.over.y};
  if (j.over.x - j.from.x != d.x || j.over.y - j.from.y != d.y)
    return "jumped-over cell is not the midpoint";
  if (!direction_ok(g, d)) return "direction not allowed in this geometry";
  if (!in_domain(g, j.from) || !in_domain(g, j.over) || !in_domain(g, j.to))
    return "jump leaves the board domain";
  return std::nullopt;
}

}  // namespace

VerifyResult verify_solution(const Solution& sol) {
  std::set<Cell> occ;
  for (const Cell& c : sol.start) {
    if (c.y < sol.level || !in_domain(sol.geom, c))
      return {false, -1, "start cell outside the starting region"};
    if (!occ.insert(c).second) return {false, -1, "duplicate start cell"};
  }
  for (size_t i = 0; i < sol.jumps.size(); ++i) {
    const Jump& j = sol.jumps[i];
    if (auto err = jump_shape_error(sol.geom, j)) return {false, (int)i, *err};
    if (!occ.count(j.from)) return {false, (int)i, "jumping man is missing"};
    if (!occ.count(j.over)) return {false, (int)i, "no man to jump over"};
    if (occ.count(j.to)) return {false, (int)i, "landing cell is occupied"};
    occ.erase(j.from);
    occ.erase(j.over);
    occ.insert(j.to);
  }
  if (!occ.count(target_cell())) return {false, -1, "target cell not reached"};
  return {true, -1, ""};
}

std::vector<SigmaValue> weight_trace(const Solution& sol, const PagodaField& f) {
  std::vector<SigmaValue> trace;
  SigmaValue w = sigma_zero();
  for (const Cell& c : sol.start) w += f.weight(c);
  trace.push_back(w);
  for (const Jump& j : sol.jumps) {
    w -= f.weight(j.from) + f.weight(j.over) - f.weight(j.to);
    trace.push_back(w);
  }
  return trace;
}

bool check_zero_slack_play(const Solution& sol, const PagodaField& f) {
  std::vector<Cell> start = sol.start;
  if (!slack(f, start).is_zero()) return false;
  for (const Jump& j : sol.jumps) {
    JumpClass cls = classify_jump(f, j);
    if (!cls.loss.is_zero()) return false;
    if (cls.type != JumpLossType::T131 && cls.type != JumpLossType::Mixed)
      return false;
  }
  return true;
}

OrderResult order_jumps(GeometryKind g, int level, const std::vector<Cell>& start,
                        const std::vector<Jump>& multiset, uint64_t node_budget) {
  for (const Jump& j : multiset)
    if (auto err = jump_shape_error(g, j))
      throw std::invalid_argument("bad jump in multiset: " + *err);

  std::set<Cell> occ(start.begin(), start.end());
  std::vector<Jump> remaining = multiset;
  std::sort(remaining.begin(), remaining.end());
  std::vector<bool> used(remaining.size(), false);
  std::vector<Jump> order;
  uint64_t nodes = 0;
  bool budget_hit = false;

  // States repeat across orderings of the same applied sub-multiset; remember
  // failed occupancy sets to avoid re-deriving them.
  std::set<std::vector<Cell>> failed;

  auto key = [&]() {
    std::vector<Cell> k(occ.begin(), occ.end());
    return k;
  };

  auto search = [&](auto&& self) -> bool {
    if (order.size() == remaining.size()) return occ.count(target_cell()) > 0;
    if (++nodes > node_budget) {
      budget_hit = true;
      return false;
    }
    auto k = key();
    if (failed.count(k)) return false;

    // most-constrained first: fewest other remaining jumps touching its cells
    std::vector<std::pair<int, size_t>> cand;
    std::map<Cell, int> uses;
    for (size_t i = 0; i < remaining.size(); ++i) {
      if (used[i]) continue;
      uses[remaining[i].from]++;
      uses[remaining[i].over]++;
    }
    for (size_t i = 0; i < remaining.size(); ++i) {
      if (used[i]) continue;
      if (i > 0 && remaining[i] == remaining[i - 1] && !used[i - 1]) continue;
      const Jump& j = remaining[i];
      if (!occ.count(j.from) || !occ.count(j.over) || occ.count(j.to)) continue;
      cand.push_back({uses[j.from] + uses[j.over] - 2, i});
    }
    std::sort(cand.begin(), cand.end());
    for (auto [score, i] : cand) {
      const Jump& j = remaining[i];
      used[i] = true;
      occ.erase(j.from);
      occ.erase(j.over);
      occ.insert(j.to);
      order.push_back(j);
      if (self(self)) return true;
      order.pop_back();
      occ.insert(j.from);
      occ.insert(j.over);
      occ.erase(j.to);
      used[i] = false;
      if (budget_hit) return false;
    }
    failed.insert(std::move(k));
    return false;
  };

  if (search(search))
    return {OrderOutcome::Ordered, Solution{g, level, start, order}, nodes};
  return {budget_hit ? OrderOutcome::Budget : OrderOutcome::Impossible, std::nullopt,
          nodes};
}

Solution hex_to_skew(const Solution& hex_solution) {
  if (hex_solution.geom != GeometryKind::Hexagonal)
    throw std::invalid_argument("hex_to_skew expects a hexagonal solution");
  auto tr = [](Cell c) { return Cell{2 * c.x - c.y, c.y}; };
  Solution out;
  out.geom = GeometryKind::Skew;
  out.level = hex_solution.level;
  for (const Cell& c : hex_solution.start) out.start.push_back(tr(c));
  std::sort(out.start.begin(), out.start.end());
  for (const Jump& j : hex_solution.jumps) {
    if (j.from.y == j.over.y)
      throw std::invalid_argument("solution uses a horizontal jump; not translatable");
    out.jumps.push_back({tr(j.from), tr(j.over), tr(j.to)});
  }
  return out;
}

std::string write_solution(const Solution& sol) {
  std::ostringstream out;
  out << name(sol.geom) << ' ' << sol.level << '\n';
  out << "start:\n";
  for (const Cell& c : sol.start) out << c.x << ',' << c.y << '\n';
  out << "jumps:\n";
  for (const Jump& j : sol.jumps)
    out << j.from.x << ',' << j.from.y << " -> " << j.to.x << ',' << j.to.y << '\n';
  return out.str();
}

namespace {

Cell parse_cell(const std::string& tok) {
  size_t comma = tok.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("bad cell: " + tok);
  return {std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))};
}

}  // namespace

Solution read_solution(std::istream& in) {
  Solution sol;
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty solution file");
  {
    std::istringstream hdr(line);
    std::string gname;
    if (!(hdr >> gname >> sol.level)) throw std::invalid_argument("bad header");
    auto g = geometry_from_name(gname);
    if (!g) throw std::invalid_argument("unknown geometry: " + gname);
    sol.geom = *g;
  }
  if (!std::getline(in, line) || line != "start:")
    throw std::invalid_argument("expected 'start:'");
  while (std::getline(in, line)) {
    if (line == "jumps:") break;
    if (line.empty()) continue;
    sol.start.push_back(parse_cell(line));
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, arrow, b;
    if (!(ls >> a >> arrow >> b) || arrow != "->")
      throw std::invalid_argument("bad jump line: " + line);
    Cell from = parse_cell(a), to = parse_cell(b);
    if ((from.x + to.x) % 2 != 0 || (from.y + to.y) % 2 != 0)
      throw std::invalid_argument("jump endpoints have no midpoint: " + line);
    Cell over{(from.x + to.x) / 2, (from.y + to.y) / 2};
    sol.jumps.push_back({from, over, to});
  }
  return sol;
}

Solution read_solution_text(const std::string& text) {
  std::istringstream in(text);
  return read_solution(in);
}

}  // namespace army
