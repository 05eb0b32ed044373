#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>

#include "army/geometry.hpp"

using namespace army;

namespace {

// reference distance: breadth-first search over unit steps within the domain
int bfs_distance(GeometryKind g, Cell a, Cell b) {
  if (a == b) return 0;
  std::map<Cell, int> dist{{a, 0}};
  std::queue<Cell> q;
  q.push(a);
  while (!q.empty()) {
    Cell c = q.front();
    q.pop();
    for (const Cell& d : jump_directions(g)) {
      Cell n{c.x + d.x, c.y + d.y};
      if (std::abs(n.x) > 40 || n.y < -40 || n.y > 40) continue;
      if (g == GeometryKind::Pablito && !in_domain(g, n)) continue;
      if (dist.count(n)) continue;
      dist[n] = dist[c] + 1;
      if (n == b) return dist[n];
      q.push(n);
    }
  }
  return -1;
}

}  // namespace

TEST_CASE("direction sets") {
  CHECK(jump_directions(GeometryKind::Conway).size() == 4);
  CHECK(jump_directions(GeometryKind::Skew).size() == 4);
  CHECK(jump_directions(GeometryKind::Diagonal).size() == 8);
  CHECK(jump_directions(GeometryKind::Hexagonal).size() == 6);
  CHECK(jump_directions(GeometryKind::Pablito).size() == 6);

  auto has = [](GeometryKind g, Cell d) {
    const auto& v = jump_directions(g);
    return std::find(v.begin(), v.end(), d) != v.end();
  };
  for (Cell d : {Cell{1, 0}, Cell{-1, 0}, Cell{0, 1}, Cell{0, -1}})
    CHECK(has(GeometryKind::Conway, d));
  for (int dx : {-1, 1})
    for (int dy : {-1, 1}) CHECK(has(GeometryKind::Diagonal, {dx, dy}));
  CHECK(has(GeometryKind::Hexagonal, {1, 1}));
  CHECK(has(GeometryKind::Hexagonal, {-1, -1}));
  CHECK(!has(GeometryKind::Hexagonal, {1, -1}));
}

TEST_CASE("starting regions") {
  auto conway = starting_region(GeometryKind::Conway, 4, {-8, 8, 10});
  CHECK(conway.size() == 17 * 7);
  for (const Cell& c : conway) CHECK(c.y >= 4);

  // the skew front holds every other cell of each row
  auto skew = starting_region(GeometryKind::Skew, 3, {-6, 6, 3});
  for (const Cell& c : skew) CHECK((c.x + c.y) % 2 == 0);
  CHECK(skew.size() == 6);  // row 3, x odd, |x| <= 6

  auto pablito = starting_region(GeometryKind::Pablito, 5, {0, 7, 7});
  CHECK(pablito.size() == 6 + 7 + 8);

  CHECK_THROWS_AS(starting_region(GeometryKind::Conway, 4, {-4, 4, 3}),
                  std::invalid_argument);
}

TEST_CASE("jump enumeration") {
  CHECK(enumerate_jumps(GeometryKind::Conway, {-1, 1, 0}).size() == 2);
  CHECK(enumerate_jumps(GeometryKind::Diagonal, {-1, 1, 2}).size() == 16);
  CHECK(enumerate_jumps(GeometryKind::Pablito, {0, 2, 2}).size() == 6);
}

TEST_CASE("jump enumeration matches a brute-force scan") {
  for (GeometryKind g : kAllGeometries) {
    BoardWindow w = (g == GeometryKind::Pablito) ? BoardWindow{0, 5, 5}
                                                 : BoardWindow{-3, 3, 4};
    std::set<Jump> got;
    for (const Jump& j : enumerate_jumps(g, w)) {
      CHECK(got.insert(j).second);  // no duplicates
      // midpoint invariant
      CHECK(j.over.x * 2 == j.from.x + j.to.x);
      CHECK(j.over.y * 2 == j.from.y + j.to.y);
      CHECK(in_board(g, w, j.from));
      CHECK(in_board(g, w, j.over));
      CHECK(in_board(g, w, j.to));
    }
    size_t count = 0;
    for (int y = 0; y <= w.ymax; ++y)
      for (int x = w.xmin; x <= w.xmax; ++x)
        for (const Cell& d : jump_directions(g)) {
          Jump j{{x, y}, {x + d.x, y + d.y}, {x + 2 * d.x, y + 2 * d.y}};
          if (in_board(g, w, j.from) && in_board(g, w, j.over) && in_board(g, w, j.to)) {
            ++count;
            CHECK(got.count(j));
          }
        }
    CHECK(got.size() == count);
  }
}

TEST_CASE("metric distances") {
  CHECK(metric_distance(GeometryKind::Conway, {3, 4}, {0, 0}) == 7);
  CHECK(metric_distance(GeometryKind::Diagonal, {3, 4}, {0, 0}) == 4);
  for (int n = 1; n <= 6; ++n)
    CHECK(metric_distance(GeometryKind::Hexagonal, {-1, n}, {0, 0}) == n + 1);
  CHECK(metric_distance(GeometryKind::Pablito, {2, 5}, {0, 0}) == 5);
}

TEST_CASE("metric distance equals step distance") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-6, 6);
  for (GeometryKind g : kAllGeometries) {
    for (int trial = 0; trial < 60; ++trial) {
      Cell a{coord(rng), std::abs(coord(rng))};
      Cell b{coord(rng), std::abs(coord(rng))};
      if (g == GeometryKind::Skew && (a.x + a.y + b.x + b.y) % 2 != 0) continue;
      if (g == GeometryKind::Skew) {
        if ((a.x + a.y) % 2 != 0) a.x += 1;
        if ((b.x + b.y) % 2 != 0) b.x += 1;
      }
      if (g == GeometryKind::Pablito) {
        a.x = std::min(std::abs(a.x), a.y);
        b.x = std::min(std::abs(b.x), b.y);
      }
      int bfs = bfs_distance(g, a, b);
      if (g == GeometryKind::Skew) bfs = bfs < 0 ? -1 : bfs;  // unreachable parity never here
      CHECK(metric_distance(g, a, b) == bfs);
      // symmetry
      CHECK(metric_distance(g, a, b) == metric_distance(g, b, a));
    }
  }
}

TEST_CASE("metric triangle inequality") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coord(-8, 8);
  for (GeometryKind g : {GeometryKind::Conway, GeometryKind::Diagonal, GeometryKind::Hexagonal}) {
    for (int trial = 0; trial < 300; ++trial) {
      Cell a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)}, c{coord(rng), coord(rng)};
      CHECK(metric_distance(g, a, c) <=
            metric_distance(g, a, b) + metric_distance(g, b, c));
    }
  }
}

TEST_CASE("mirror fixes the target and preserves rows") {
  for (GeometryKind g : kAllGeometries) {
    CHECK(mirror_cell(g, target_cell()) == target_cell());
    for (int y = 0; y <= 6; ++y)
      for (int x = (g == GeometryKind::Pablito ? 0 : -6); x <= 6; ++x) {
        Cell c{x, y};
        if (!in_domain(g, c)) continue;
        Cell m = mirror_cell(g, c);
        CHECK(m.y == c.y);
        CHECK(in_domain(g, m));
        CHECK(mirror_cell(g, m) == c);
        CHECK(metric_distance(g, m, target_cell()) ==
              metric_distance(g, c, target_cell()));
      }
  }
}

TEST_CASE("board rendering") {
  std::set<Cell> men = {{0, 1}, {0, 2}};
  std::string s = render_board(GeometryKind::Conway, {-1, 1, 2}, men);
  CHECK(s == ".X.\n.o.\n.o.\n");
  std::string skew = render_board(GeometryKind::Skew, {-1, 1, 1}, {});
  CHECK(skew == "#X#\n.#.\n");
  std::string tri = render_board(GeometryKind::Pablito, {0, 2, 2}, {{0, 1}, {1, 1}});
  CHECK(tri == "  X\n oo\n...\n");
}
