#pragma once

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace army {

// The five army variants. Coordinates put the target at (0,0) with rows
// growing away from it, so the starting line for level n is the row y = n.
enum class GeometryKind { Conway, Skew, Diagonal, Hexagonal, Pablito };

inline constexpr std::array<GeometryKind, 5> kAllGeometries = {
    GeometryKind::Conway, GeometryKind::Skew, GeometryKind::Diagonal,
    GeometryKind::Hexagonal, GeometryKind::Pablito};

const char* name(GeometryKind g);
std::optional<GeometryKind> geometry_from_name(const std::string& s);

struct Cell {
  int x = 0;
  int y = 0;
  // row-major order: rows first, matching board scans and text formats
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
  friend bool operator==(const Cell&, const Cell&) = default;
};

inline Cell target_cell() { return {0, 0}; }

// Inclusive bounds; rows run 0..ymax. Pablito windows keep xmin = 0 and use
// ymax as the triangle depth.
struct BoardWindow {
  int xmin = 0;
  int xmax = 0;
  int ymax = 0;
  friend auto operator<=>(const BoardWindow&, const BoardWindow&) = default;
  bool contains(Cell c) const {
    return c.x >= xmin && c.x <= xmax && c.y >= 0 && c.y <= ymax;
  }
};

// Board-domain rule: Skew keeps the target-colour checkerboard cells,
// Pablito the triangle 0 <= x <= y, the rest the full lattice.
bool in_domain(GeometryKind g, Cell c);

inline bool in_board(GeometryKind g, const BoardWindow& w, Cell c) {
  return w.contains(c) && in_domain(g, c);
}

// Unit step directions jumps may follow: 4/4/8/6/6 entries.
const std::vector<Cell>& jump_directions(GeometryKind g);

BoardWindow default_window(GeometryKind g, int level);

// All in-window domain cells of rows >= level, sorted by (y, x).
std::vector<Cell> starting_region(GeometryKind g, int level, const BoardWindow& w);

struct Jump {
  Cell from;
  Cell over;
  Cell to;
  friend auto operator<=>(const Jump&, const Jump&) = default;
};

// Every jump whose three cells are all on the board, exactly once, sorted by
// destination and then direction index.
std::vector<Jump> enumerate_jumps(GeometryKind g, const BoardWindow& w);

// Minimal number of unit steps between two cells: L1 for Conway, L-infinity
// for Skew/Diagonal, the 6-direction lattice distance for Hexagonal and
// Pablito.
int metric_distance(GeometryKind g, Cell a, Cell b);

// Left-right board reflection fixing the target.
Cell mirror_cell(GeometryKind g, Cell c);

// Text rendering: 'o' man, '.' empty, 'X' target, '#' out of domain.
// Pablito rows are left-padded into a triangle.
std::string render_board(GeometryKind g, const BoardWindow& w,
                         const std::set<Cell>& men);

}  // namespace army
