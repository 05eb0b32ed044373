#include "army/bounds.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace army {

SigmaValue row_weight(GeometryKind g, int n) {
  if (n < 0) throw std::invalid_argument("row index must be >= 0");
  switch (g) {
    case GeometryKind::Conway:
      return sigma_pow(n - 3);
    case GeometryKind::Skew:
      return (int128)(n + 1) * sigma_pow(n) + 2 * sigma_pow(n + 1);
    case GeometryKind::Diagonal:
      return (int128)(2 * n) * sigma_pow(n) + sigma_pow(n - 3);
    case GeometryKind::Hexagonal:
      return (int128)(n + 1) * sigma_pow(n) + 2 * sigma_pow(n - 1);
    case GeometryKind::Pablito:
      return (int128)(n + 1) * sigma_pow(n);
  }
  return sigma_zero();
}

SigmaValue tail_weight(GeometryKind g, int n) {
  if (n < 0) throw std::invalid_argument("row index must be >= 0");
  switch (g) {
    case GeometryKind::Conway:
      return sigma_pow(n - 5);
    case GeometryKind::Skew:
      return sigma_pow(n - 3) * SigmaValue{3, n - 1};
    case GeometryKind::Diagonal:
      return sigma_pow(n - 5) * SigmaValue{3 - 2 * n, 4 * n - 2};
    case GeometryKind::Hexagonal:
      return sigma_pow(n - 3) * SigmaValue{3, n + 1};
    case GeometryKind::Pablito:
      return sigma_pow(n - 3) * SigmaValue{1, n + 1};
  }
  return sigma_zero();
}

int max_level(GeometryKind g) {
  // Reachability needs strictly more weight available than the target's 1:
  // a tail of exactly 1 is only met in the infinite limit.
  int n = 0;
  while (tail_weight(g, n + 1) > sigma_one()) ++n;
  return n;
}

long long fibonacci_bound(int level) {
  return (long long)fibonacci(level + 2);
}

std::optional<int> greedy_size_bound(const PagodaField& f, int level) {
  std::vector<int> exps;
  for (const Cell& c : starting_region(f.geometry(), level, f.window())) {
    int e = f.exponent(c);
    if (e < kInfExponent) exps.push_back(e);
  }
  std::sort(exps.begin(), exps.end());
  SigmaValue sum = sigma_zero();
  for (size_t k = 0; k < exps.size(); ++k) {
    sum += sigma_pow(exps[k]);
    if (sum >= sigma_one()) return (int)k + 1;
  }
  return std::nullopt;
}

BoardWindow bounds_window(GeometryKind g, int level) {
  if (g == GeometryKind::Pablito) {
    int depth = level + 10;
    return {0, depth, depth};
  }
  int r = level + 10;
  return {-r, r, r};
}

std::optional<int> lower_bound(GeometryKind g, int level) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  if (level > max_level(g)) return std::nullopt;
  long long best = fibonacci_bound(level);
  PagodaField f = designated_field(g, bounds_window(g, level));
  if (!f.finish_conditional() || level >= 2) {
    auto greedy = greedy_size_bound(f, level);
    if (greedy && *greedy > best) best = *greedy;
  }
  return (int)best;
}

namespace {
// Table column order used by the published grids.
constexpr GeometryKind kTableOrder[5] = {
    GeometryKind::Conway, GeometryKind::Skew, GeometryKind::Pablito,
    GeometryKind::Hexagonal, GeometryKind::Diagonal};
}

LowerBoundTable lower_bound_table() {
  LowerBoundTable t;
  for (int level = 1; level <= t.max_table_level; ++level) {
    t.fibonacci.push_back(fibonacci_bound(level));
    std::vector<std::optional<int>> row;
    for (GeometryKind g : kTableOrder) row.push_back(lower_bound(g, level));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_lower_bound_table() {
  LowerBoundTable t = lower_bound_table();
  std::ostringstream out;
  out << "level  F(n+2)      conway        skew     pablito   hexagonal    diagonal\n";
  for (int level = 1; level <= t.max_table_level; ++level) {
    char buf[160];
    auto cell = [&](int gi) {
      auto v = t.rows[level - 1][gi];
      return v ? std::to_string(*v) : std::string("Impossible");
    };
    std::snprintf(buf, sizeof buf, "%5d  %6lld  %10s  %10s  %10s  %10s  %10s\n", level,
                  t.fibonacci[level - 1], cell(0).c_str(), cell(1).c_str(),
                  cell(2).c_str(), cell(3).c_str(), cell(4).c_str());
    out << buf;
  }
  return out.str();
}

std::string render_max_level_table() {
  std::ostringstream out;
  out << "conway  skew  pablito  hexagonal  diagonal\n";
  char buf[96];
  std::snprintf(buf, sizeof buf, "%6d  %4d  %7d  %9d  %8d\n",
                max_level(GeometryKind::Conway), max_level(GeometryKind::Skew),
                max_level(GeometryKind::Pablito), max_level(GeometryKind::Hexagonal),
                max_level(GeometryKind::Diagonal));
  out << buf;
  return out.str();
}

int capacity(const PagodaField& f, int level, int exponent) {
  int n = 0;
  for (const Cell& c : starting_region(f.geometry(), level, f.window()))
    if (f.exponent(c) == exponent) ++n;
  return n;
}

int ExponentProfile::max_exp() const {
  for (int i = (int)counts.size(); i-- > 0;)
    if (counts[i] > 0) return base_exp + i;
  return base_exp;
}

namespace {

bool is_single_sigma_power(const SigmaValue& v, int* j_out) {
  if (v.sign() <= 0) return false;
  for (int j = -60; j <= 180; ++j) {
    SigmaValue p = sigma_pow(j);
    if (v == p) {
      if (j_out) *j_out = j;
      return true;
    }
    if (p < v) break;  // powers only shrink from here on
  }
  return false;
}

bool passes_filters(const ExponentProfile& p, const ProfileFilters& flt) {
  int E = p.max_exp();
  if (flt.no_interior_zeros) {
    bool seen = false, gap = false;
    for (int c : p.counts) {
      if (c > 0) {
        if (seen && gap) return false;
        seen = true;
        gap = false;
      } else if (seen) {
        gap = true;
      }
    }
  }
  if (flt.top_monotone) {
    if (p.count_at(E - 1) < p.count_at(E)) return false;
  }
  if (flt.prop1_slack) {
    if (!p.slack.is_zero() && p.slack < exponent_weight(E)) return false;
  }
  if (flt.single_loss_slack && !p.slack.is_zero()) {
    int e2 = -1;
    for (int i = 0; i < (int)p.counts.size(); ++i)
      if (p.counts[i] >= 2) e2 = p.base_exp + i;
    if (e2 < 0) e2 = E;
    int j = 0;
    if (!is_single_sigma_power(p.slack, &j)) return false;
    if (j > e2) return false;
  }
  return true;
}

}  // namespace

std::vector<ExponentProfile> enumerate_profiles(const PagodaField& f, int level,
                                                int size, const ProfileFilters& filters) {
  if (size < 1) throw std::invalid_argument("army size must be >= 1");
  std::map<int, int> caps_by_exp;
  for (const Cell& c : starting_region(f.geometry(), level, f.window())) {
    int e = f.exponent(c);
    if (e < kInfExponent) caps_by_exp[e]++;
  }
  if (caps_by_exp.empty()) return {};
  int base = caps_by_exp.begin()->first;
  int last = caps_by_exp.rbegin()->first;
  int width = last - base + 1;
  std::vector<int> caps(width, 0);
  for (auto [e, c] : caps_by_exp) caps[e - base] = c;
  std::vector<long long> suffix_cap(width + 1, 0);
  for (int i = width; i-- > 0;) suffix_cap[i] = suffix_cap[i + 1] + caps[i];

  std::vector<SigmaValue> pow(width);
  for (int i = 0; i < width; ++i) pow[i] = sigma_pow(base + i);

  // Best additional weight from filling m men into capacities i..end.
  auto fill_bound = [&](int i, int m) {
    SigmaValue s = sigma_zero();
    for (int k = i; k < width && m > 0; ++k) {
      int take = std::min(caps[k], m);
      s += (int128)take * pow[k];
      m -= take;
    }
    return s;
  };

  std::vector<ExponentProfile> out;
  std::vector<int> counts(width, 0);
  auto emit = [&](const SigmaValue& weight) {
    SigmaValue sl = weight - sigma_one();
    if (sl.sign() < 0) return;
    ExponentProfile p;
    p.level = level;
    p.base_exp = base;
    p.counts = counts;
    while (!p.counts.empty() && p.counts.back() == 0) p.counts.pop_back();
    p.slack = sl;
    if (passes_filters(p, filters)) out.push_back(std::move(p));
  };

  // Counts run from the largest value down, so profiles come out sorted by
  // count vector, lexicographically descending.
  auto dfs = [&](auto&& self, int i, int men_left, SigmaValue weight) -> void {
    if (men_left == 0) {
      for (int k = i; k < width; ++k) counts[k] = 0;
      emit(weight);
      return;
    }
    if (i >= width) return;
    if (suffix_cap[i] < men_left) return;
    if (weight + fill_bound(i, men_left) < sigma_one()) return;
    for (int n = std::min(caps[i], men_left); n >= 0; --n) {
      counts[i] = n;
      self(self, i + 1, men_left - n, weight + (int128)n * pow[i]);
    }
    counts[i] = 0;
  };
  dfs(dfs, 0, size, sigma_zero());
  return out;
}

std::string render_profile_table(const std::vector<ExponentProfile>& profiles,
                                 int from_exp) {
  std::ostringstream out;
  int last = from_exp;
  for (const auto& p : profiles) last = std::max(last, p.max_exp());
  out << "case  men";
  for (int e = from_exp; e <= last; ++e) out << "  n" << e;
  out << "  slack\n";
  int idx = 1;
  for (const auto& p : profiles) {
    out << idx++ << "  " << p.size();
    for (int e = from_exp; e <= last; ++e) out << "  " << p.count_at(e);
    out << "  " << to_string(p.slack) << "\n";
  }
  return out.str();
}

std::optional<int> published_ip_bound(GeometryKind g, int level) {
  using G = GeometryKind;
  static const std::map<std::pair<G, int>, int> table = {
      {{G::Conway, 4}, 20},  {{G::Skew, 5}, 19},    {{G::Pablito, 5}, 19},
      {{G::Hexagonal, 5}, 17}, {{G::Skew, 6}, 46},  {{G::Pablito, 6}, 53},
      {{G::Hexagonal, 6}, 36}, {{G::Hexagonal, 7}, 144}};
  auto it = table.find({g, level});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::optional<PublishedMinimum> published_minimum(GeometryKind g, int level) {
  using G = GeometryKind;
  static const std::map<std::pair<G, int>, PublishedMinimum> table = {
      {{G::Conway, 1}, {2, 2}},   {{G::Conway, 2}, {4, 4}},
      {{G::Conway, 3}, {8, 8}},   {{G::Conway, 4}, {20, 20}},
      {{G::Skew, 1}, {2, 2}},     {{G::Skew, 2}, {3, 3}},
      {{G::Skew, 3}, {5, 5}},     {{G::Skew, 4}, {9, 9}},
      {{G::Skew, 5}, {19, 19}},   {{G::Skew, 6}, {46, 46}},
      {{G::Pablito, 1}, {2, 2}},  {{G::Pablito, 2}, {3, 3}},
      {{G::Pablito, 3}, {5, 5}},  {{G::Pablito, 4}, {9, 9}},
      {{G::Pablito, 5}, {19, 19}}, {{G::Pablito, 6}, {53, 53}},
      {{G::Hexagonal, 1}, {2, 2}}, {{G::Hexagonal, 2}, {3, 3}},
      {{G::Hexagonal, 3}, {5, 5}}, {{G::Hexagonal, 4}, {9, 9}},
      {{G::Hexagonal, 5}, {17, 17}}, {{G::Hexagonal, 6}, {36, 36}},
      {{G::Hexagonal, 7}, {144, 145}},
      {{G::Diagonal, 1}, {2, 2}}, {{G::Diagonal, 2}, {3, 3}},
      {{G::Diagonal, 3}, {5, 5}}, {{G::Diagonal, 4}, {8, 8}},
      {{G::Diagonal, 5}, {13, 13}}, {{G::Diagonal, 6}, {23, 23}},
      {{G::Diagonal, 7}, {46, 46}}, {{G::Diagonal, 8}, {123, 123}}};
  auto it = table.find({g, level});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string render_published_minimums() {
  std::ostringstream out;
  out << "level      conway        skew     pablito   hexagonal    diagonal   (published minimum sizes)\n";
  for (int level = 1; level <= 9; ++level) {
    char buf[160];
    auto cell = [&](GeometryKind g) -> std::string {
      if (level > max_level(g)) return "Impossible";
      auto v = published_minimum(g, level);
      if (!v) return "?";
      if (v->exact()) return std::to_string(v->lo);
      return std::to_string(v->lo) + " or " + std::to_string(v->hi);
    };
    std::snprintf(buf, sizeof buf, "%5d  %10s  %10s  %10s  %10s  %10s\n", level,
                  cell(GeometryKind::Conway).c_str(), cell(GeometryKind::Skew).c_str(),
                  cell(GeometryKind::Pablito).c_str(),
                  cell(GeometryKind::Hexagonal).c_str(),
                  cell(GeometryKind::Diagonal).c_str());
    out << buf;
  }
  return out.str();
}

}  // namespace army
