#pragma once

#include <optional>
#include <string>
#include <vector>

#include "army/pagoda.hpp"

namespace army {

// Exact total weight of the fully occupied row n under the basic field of g.
SigmaValue row_weight(GeometryKind g, int n);

// Exact total weight of rows n and beyond; equals row_weight(g,n) +
// tail_weight(g,n+1).
SigmaValue tail_weight(GeometryKind g, int n);

// Largest n whose tail weight strictly exceeds 1. Level n+1 has tail <= 1 and
// no finite army can get there.
int max_level(GeometryKind g);

// F_{level+2}: any army must contain at least this many men.
long long fibonacci_bound(int level);

// Smallest k whose k heaviest starting cells reach total weight >= 1;
// nullopt when even the full in-window region stays below 1.
std::optional<int> greedy_size_bound(const PagodaField& f, int level);

// Wide window used for bound and case-table computations, so that every
// exponent the greedy or case analysis touches is fully inside.
BoardWindow bounds_window(GeometryKind g, int level);

// Per-level size lower bound: max of the designated field's greedy bound and
// the Fibonacci bound. Finish-conditional fields contribute from level 2 up.
// nullopt = level unreachable.
std::optional<int> lower_bound(GeometryKind g, int level);

struct LowerBoundTable {
  int max_table_level = 9;
  // cell(level, geometry) convention of render_lower_bound_table
  std::vector<std::vector<std::optional<int>>> rows;  // [level-1][geometry]
  std::vector<long long> fibonacci;                   // per level
};
LowerBoundTable lower_bound_table();
std::string render_lower_bound_table();

// Upper bounds on reachable level per geometry, rendered as a one-row table.
std::string render_max_level_table();

// Number of field cells with the given exponent inside the starting region.
int capacity(const PagodaField& f, int level, int exponent);

// Counts of men per exponent for a fixed army size.
struct ExponentProfile {
  int level = 0;
  int base_exp = 0;           // exponent of counts[0]
  std::vector<int> counts;    // trailing zeros trimmed
  SigmaValue slack;

  int size() const {
    int s = 0;
    for (int c : counts) s += c;
    return s;
  }
  int count_at(int e) const {
    int i = e - base_exp;
    return (i >= 0 && i < (int)counts.size()) ? counts[i] : 0;
  }
  int max_exp() const;  // largest exponent with a positive count
  friend bool operator==(const ExponentProfile&, const ExponentProfile&) = default;
};

struct ProfileFilters {
  bool no_interior_zeros = false;  // no n_i = 0 strictly between positives
  bool top_monotone = false;       // n_{E-1} >= n_E at the top exponent E
  bool prop1_slack = false;        // slack = 0 or slack >= sigma^E
  // slack = 0 or a single power sigma^j, j <= max{i : n_i >= 2}; the loss a
  // single jump can shed once removable top men are excluded.
  bool single_loss_slack = false;

  static ProfileFilters none() { return {}; }
  static ProfileFilters sound() { return {false, false, true, false}; }
  static ProfileFilters all() { return {true, true, true, true}; }
};

// All profiles with sum = size, counts within capacities, slack >= 0 and the
// selected filters, sorted by counts lexicographically descending.
std::vector<ExponentProfile> enumerate_profiles(const PagodaField& f, int level,
                                                int size, const ProfileFilters& filters);

std::string render_profile_table(const std::vector<ExponentProfile>& profiles,
                                 int from_exp);

// Published reference values, served as constants rather than recomputed.
std::optional<int> published_ip_bound(GeometryKind g, int level);
struct PublishedMinimum {
  int lo = 0;
  int hi = 0;  // lo != hi only for the one open case
  bool exact() const { return lo == hi; }
};
std::optional<PublishedMinimum> published_minimum(GeometryKind g, int level);
std::string render_published_minimums();

}  // namespace army
