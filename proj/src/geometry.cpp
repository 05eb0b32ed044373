#include "army/geometry.hpp"

#include <cstdlib>
#include <stdexcept>

namespace army {

const char* name(GeometryKind g) {
  switch (g) {
    case GeometryKind::Conway: return "conway";
    case GeometryKind::Skew: return "skew";
    case GeometryKind::Diagonal: return "diagonal";
    case GeometryKind::Hexagonal: return "hexagonal";
    case GeometryKind::Pablito: return "pablito";
  }
  return "?";
}

std::optional<GeometryKind> geometry_from_name(const std::string& s) {
  for (GeometryKind g : kAllGeometries)
    if (s == name(g)) return g;
  return std::nullopt;
}

bool in_domain(GeometryKind g, Cell c) {
  switch (g) {
    case GeometryKind::Skew:
      return ((c.x + c.y) & 1) == 0;
    case GeometryKind::Pablito:
      return c.x >= 0 && c.x <= c.y && c.y >= 0;
    default:
      return true;
  }
}

const std::vector<Cell>& jump_directions(GeometryKind g) {
  static const std::vector<Cell> orth = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  static const std::vector<Cell> diag = {{1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
  static const std::vector<Cell> king = {{1, 0},  {-1, 0},  {0, 1},  {0, -1},
                                         {1, 1},  {-1, -1}, {1, -1}, {-1, 1}};
  static const std::vector<Cell> hex = {{1, 0}, {-1, 0}, {0, 1},
                                        {0, -1}, {1, 1}, {-1, -1}};
  switch (g) {
    case GeometryKind::Conway: return orth;
    case GeometryKind::Skew: return diag;
    case GeometryKind::Diagonal: return king;
    case GeometryKind::Hexagonal:
    case GeometryKind::Pablito: return hex;
  }
  return king;
}

BoardWindow default_window(GeometryKind g, int level) {
  if (g == GeometryKind::Pablito) {
    int depth = level + 4;
    return {0, depth, depth};
  }
  int r = level + 6;
  return {-r, r, r};
}

std::vector<Cell> starting_region(GeometryKind g, int level, const BoardWindow& w) {
  if (w.ymax < level)
    throw std::invalid_argument("window shallower than the starting line");
  std::vector<Cell> cells;
  for (int y = level; y <= w.ymax; ++y)
    for (int x = w.xmin; x <= w.xmax; ++x)
      if (in_domain(g, {x, y})) cells.push_back({x, y});
  return cells;
}

std::vector<Jump> enumerate_jumps(GeometryKind g, const BoardWindow& w) {
  const auto& dirs = jump_directions(g);
  std::vector<Jump> jumps;
  for (int y = 0; y <= w.ymax; ++y)
    for (int x = w.xmin; x <= w.xmax; ++x) {
      Cell to{x, y};
      if (!in_domain(g, to)) continue;
      for (const Cell& d : dirs) {
        Cell over{x - d.x, y - d.y};
        Cell from{x - 2 * d.x, y - 2 * d.y};
        if (in_board(g, w, over) && in_board(g, w, from))
          jumps.push_back({from, over, to});
      }
    }
  return jumps;
}

int metric_distance(GeometryKind g, Cell a, Cell b) {
  int dx = a.x - b.x;
  int dy = a.y - b.y;
  switch (g) {
    case GeometryKind::Conway:
      return std::abs(dx) + std::abs(dy);
    case GeometryKind::Skew:
    case GeometryKind::Diagonal:
      return std::max(std::abs(dx), std::abs(dy));
    case GeometryKind::Hexagonal:
    case GeometryKind::Pablito:
      if ((dx >= 0 && dy >= 0) || (dx <= 0 && dy <= 0))
        return std::max(std::abs(dx), std::abs(dy));
      return std::abs(dx) + std::abs(dy);
  }
  return 0;
}

Cell mirror_cell(GeometryKind g, Cell c) {
  switch (g) {
    case GeometryKind::Hexagonal:
    case GeometryKind::Pablito:
      return {c.y - c.x, c.y};
    default:
      return {-c.x, c.y};
  }
}

std::string render_board(GeometryKind g, const BoardWindow& w,
                         const std::set<Cell>& men) {
  std::string out;
  for (int y = 0; y <= w.ymax; ++y) {
    std::string line;
    if (g == GeometryKind::Pablito)
      line.assign(static_cast<size_t>(w.ymax - y), ' ');
    int xhi = (g == GeometryKind::Pablito) ? std::min(w.xmax, y) : w.xmax;
    for (int x = w.xmin; x <= xhi; ++x) {
      Cell c{x, y};
      char ch;
      if (!in_domain(g, c))
        ch = '#';
      else if (men.count(c))
        ch = 'o';
      else if (c == target_cell())
        ch = 'X';
      else
        ch = '.';
      line.push_back(ch);
    }
    out += line;
    out.push_back('\n');
  }
  return out;
}

}  // namespace army
