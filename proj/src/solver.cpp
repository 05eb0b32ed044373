#include "army/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace army {

const char* name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Feasible: return "feasible";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Timeout: return "timeout";
  }
  return "?";
}

const char* name(ReachOutcome o) {
  switch (o) {
    case ReachOutcome::Found: return "found";
    case ReachOutcome::Exhausted: return "exhausted";
    case ReachOutcome::Budget: return "budget";
  }
  return "?";
}

namespace {

// sign of a + b*sigma for small components (|a|,|b| far below 2^61)
inline int small_sigma_sign(long long a, long long b) {
  if (a >= 0 && b >= 0) return (a | b) ? 1 : 0;
  if (a <= 0 && b <= 0) return (a | b) ? -1 : 0;
  __int128 u = 2 * (__int128)a - b;
  __int128 v = b;
  int su = (u > 0) - (u < 0);
  int sv = (v > 0) - (v < 0);
  if (su == 0) return sv;
  if (su == sv) return su;
  __int128 u2 = u * u;
  __int128 v25 = 5 * v * v;
  if (u2 == v25) return 0;  // unreachable: 5 is not a square
  return u2 > v25 ? su : sv;
}

struct SearchJump {
  int from, over, to;
  long long loss_a, loss_b;  // exact loss in its direction
  bool lossless;
  Jump cells;
};

using OccWords = std::array<uint64_t, Board::kMaxWords>;

struct TransTable {
  std::vector<OccWords> keys;
  std::vector<uint8_t> used;
  uint64_t mask = 0;

  explicit TransTable(int log2) {
    size_t n = (size_t)1 << log2;
    keys.resize(n);
    used.assign(n, 0);
    mask = n - 1;
  }
  static uint64_t hash(const OccWords& k) {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint64_t w : k) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ull;
      h ^= h >> 31;
    }
    return h;
  }
  bool contains(const OccWords& k) const {
    size_t i = hash(k) & mask;
    return used[i] && keys[i] == k;
  }
  void insert(const OccWords& k) {
    size_t i = hash(k) & mask;
    keys[i] = k;
    used[i] = 1;
  }
};

// Shared per-(geometry, window) search tables: the board, basic-field
// weights, and jumps ordered lossless-first, target-seeking, indexed by the
// jumping man's cell so move generation only touches occupied cells.
struct SearchContext {
  Board board;
  PagodaField field;
  std::vector<std::pair<long long, long long>> weight;  // per cell id
  std::vector<int> exponent;                            // per cell id
  std::vector<SearchJump> jumps;
  std::vector<std::vector<int>> from_jumps;           // all jumps by from-cell
  std::vector<std::vector<int>> lossless_from_jumps;  // the lossless subset

  SearchContext(GeometryKind g, const BoardWindow& w)
      : board(g, w), field(basic_field(g, w)) {
    int n = board.cell_count();
    weight.resize(n);
    exponent.resize(n);
    for (int id = 0; id < n; ++id) {
      int e = field.exponent(board.cell_of(id));
      exponent[id] = e;
      SigmaValue sv = exponent_weight(e);
      weight[id] = {(long long)sv.a, (long long)sv.b};
    }
    for (const auto& bj : board.jumps()) {
      SigmaValue loss = field.weight(bj.cells.from) + field.weight(bj.cells.over) -
                        field.weight(bj.cells.to);
      SearchJump sj{bj.from, bj.over, bj.to, (long long)loss.a, (long long)loss.b,
                    loss.is_zero(), bj.cells};
      jumps.push_back(sj);
    }
    std::stable_sort(jumps.begin(), jumps.end(), [&](const SearchJump& x, const SearchJump& y) {
      if (x.lossless != y.lossless) return x.lossless;
      return exponent[x.to] < exponent[y.to];
    });
    from_jumps.resize(n);
    lossless_from_jumps.resize(n);
    for (size_t k = 0; k < jumps.size(); ++k) {
      from_jumps[jumps[k].from].push_back((int)k);
      if (jumps[k].lossless) lossless_from_jumps[jumps[k].from].push_back((int)k);
    }
  }

  std::pair<long long, long long> config_weight(const std::vector<int>& ids) const {
    long long a = 0, b = 0;
    for (int id : ids) {
      a += weight[id].first;
      b += weight[id].second;
    }
    return {a, b};
  }
};

struct Reach {
  const SearchContext& ctx;
  TransTable& tt;
  uint64_t budget;
  uint64_t nodes = 0;
  bool tripped = false;
  bool zero_slack_only = false;
  OccWords occ{};
  std::vector<int> line;  // chosen jump indices

  Reach(const SearchContext& c, TransTable& t, uint64_t b, bool zs)
      : ctx(c), tt(t), budget(b), zero_slack_only(zs) {}

  bool occupied(int id) const { return (occ[id >> 6] >> (id & 63)) & 1; }
  void flip(int id) { occ[id >> 6] ^= (uint64_t)1 << (id & 63); }

  bool try_jump(int k, long long slack_a, long long slack_b) {
    const SearchJump& j = ctx.jumps[k];
    if (!occupied(j.over) || occupied(j.to)) return false;
    long long na = slack_a, nb = slack_b;
    if (!j.lossless) {
      na -= j.loss_a;
      nb -= j.loss_b;
      if (small_sigma_sign(na, nb) < 0) return false;
    }
    line.push_back(k);
    flip(j.from);
    flip(j.over);
    flip(j.to);
    if (j.to == ctx.board.target_id()) return true;
    bool hit = false;
    if (!tt.contains(occ)) {
      hit = dfs(na, nb);
      if (!hit && !tripped) tt.insert(occ);
    }
    if (hit) return true;
    flip(j.from);
    flip(j.over);
    flip(j.to);
    line.pop_back();
    return false;
  }

  bool dfs(long long slack_a, long long slack_b) {
    if (++nodes > budget) {
      tripped = true;
      return false;
    }
    const auto& lists = zero_slack_only ? ctx.lossless_from_jumps : ctx.from_jumps;
    for (int wi = 0; wi < Board::kMaxWords; ++wi) {
      uint64_t bits = occ[wi];
      while (bits) {
        int id = wi * 64 + __builtin_ctzll(bits);
        bits &= bits - 1;
        for (int k : lists[id]) {
          if (try_jump(k, slack_a, slack_b)) return true;
          if (tripped) return false;
        }
      }
    }
    return false;
  }
};

ReachResult run_reach(const SearchContext& ctx, TransTable& tt, int level,
                      const std::vector<int>& start_ids, bool zero_slack_only,
                      uint64_t budget) {
  Reach r(ctx, tt, budget, zero_slack_only);
  auto [wa, wb] = ctx.config_weight(start_ids);
  long long sa = wa - 1, sb = wb;  // slack = weight - 1
  if (small_sigma_sign(sa, sb) < 0) return {ReachOutcome::Exhausted, std::nullopt, 1};
  for (int id : start_ids) r.flip(id);
  bool found = r.dfs(sa, sb);
  ReachResult res;
  res.nodes = r.nodes;
  if (found) {
    Solution sol;
    sol.geom = ctx.board.geometry();
    sol.level = level;
    for (int id : start_ids) sol.start.push_back(ctx.board.cell_of(id));
    std::sort(sol.start.begin(), sol.start.end());
    for (int k : r.line) sol.jumps.push_back(ctx.jumps[k].cells);
    res.outcome = ReachOutcome::Found;
    res.solution = std::move(sol);
  } else {
    res.outcome = r.tripped ? ReachOutcome::Budget : ReachOutcome::Exhausted;
  }
  return res;
}

// Streams the cell placements of one exponent profile: a combination odometer
// over the cells of each occupied exponent.
class PlacementGen {
 public:
  PlacementGen(const std::vector<std::vector<int>>& groups,
               const std::vector<int>& take)
      : groups_(groups), take_(take) {
    for (size_t g = 0; g < groups_.size(); ++g) {
      std::vector<int> idx(take_[g]);
      for (int i = 0; i < take_[g]; ++i) idx[i] = i;
      picks_.push_back(std::move(idx));
      if (take_[g] > (int)groups_[g].size()) done_ = true;
    }
  }

  bool next(std::vector<int>& out) {
    if (done_) return false;
    out.clear();
    for (size_t g = 0; g < groups_.size(); ++g)
      for (int i : picks_[g]) out.push_back(groups_[g][i]);
    advance();
    return true;
  }

 private:
  void advance() {
    for (size_t g = picks_.size(); g-- > 0;) {
      if (advance_combination(picks_[g], (int)groups_[g].size())) return;
      for (int i = 0; i < take_[g]; ++i) picks_[g][i] = i;
    }
    done_ = true;
  }
  static bool advance_combination(std::vector<int>& idx, int n) {
    int k = (int)idx.size();
    for (int i = k - 1; i >= 0; --i) {
      if (idx[i] < n - k + i) {
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<int>>& groups_;
  std::vector<int> take_;
  std::vector<std::vector<int>> picks_;
  bool done_ = false;
};

// keep the lexicographically smaller of a placement and its mirror image
bool mirror_canonical(const Board& board, const std::vector<int>& ids) {
  std::vector<int> mirrored;
  mirrored.reserve(ids.size());
  for (int id : ids) {
    int m = board.mirror_id(id);
    if (m < 0) return true;  // mirror leaves the window: nothing to compare
    mirrored.push_back(m);
  }
  std::sort(mirrored.begin(), mirrored.end());
  std::vector<int> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  return sorted <= mirrored;
}

}  // namespace

ReachResult reachability_search(GeometryKind g, int level, const BoardWindow& w,
                                const std::vector<Cell>& start, bool zero_slack_only,
                                uint64_t node_budget) {
  SearchContext ctx(g, w);
  TransTable tt(18);
  std::vector<int> ids;
  for (const Cell& c : start) {
    int id = ctx.board.id_of(c);
    if (id < 0) throw std::invalid_argument("start cell outside the window");
    ids.push_back(id);
  }
  return run_reach(ctx, tt, level, ids, zero_slack_only, node_budget);
}

SolveResult minimum_army(GeometryKind g, int level, const SearchConfig& cfg) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  if (level > max_level(g))
    throw std::invalid_argument("level exceeds the reachability bound for " +
                                std::string(name(g)));
  auto t0 = std::chrono::steady_clock::now();
  BoardWindow w = cfg.window ? *cfg.window : default_window(g, level);
  SearchContext ctx(g, w);

  // candidate profiles come from the basic field on the search window
  PagodaField basic = ctx.field;
  std::vector<Cell> region = starting_region(g, level, w);
  int region_size = (int)region.size();

  // region cells grouped by exponent; within a group, centered cells first,
  // since winning armies hug the mirror axis
  std::vector<std::vector<int>> group_ids;  // index: exponent - base
  int base_exp = kInfExponent, max_exp = 0;
  for (const Cell& c : region) {
    int e = basic.exponent(c);
    base_exp = std::min(base_exp, e);
    max_exp = std::max(max_exp, e);
  }
  group_ids.assign(max_exp - base_exp + 1, {});
  for (const Cell& c : region)
    group_ids[basic.exponent(c) - base_exp].push_back(ctx.board.id_of(c));
  auto centrality = [&](int id) {
    Cell c = ctx.board.cell_of(id);
    Cell m = mirror_cell(g, c);
    return std::abs(c.x - m.x);  // twice the distance to the mirror axis
  };
  for (auto& ids : group_ids)
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      if (centrality(a) != centrality(b)) return centrality(a) < centrality(b);
      return a < b;
    });

  int start_k = 2;
  if (auto lb = lower_bound(g, level)) start_k = *lb;
  int cap_k = cfg.max_size > 0 ? std::min(cfg.max_size, region_size) : region_size;

  int threads = std::max(1, cfg.threads);
  std::vector<std::unique_ptr<TransTable>> tts;
  for (int t = 0; t < threads; ++t)
    tts.push_back(std::make_unique<TransTable>(cfg.tt_log2));

  SolveResult result;
  result.proven_lower_bound = start_k;
  std::atomic<uint64_t> total_nodes{0};

  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  auto out_of_time = [&] {
    if (cfg.time_limit_sec > 0 && elapsed() > cfg.time_limit_sec) return true;
    if (total_nodes.load() > cfg.total_node_budget) return true;
    return false;
  };

  int proven = start_k;
  for (int k = start_k; k <= cap_k; ++k) {
    auto profiles = enumerate_profiles(basic, level, k, ProfileFilters::sound());
    if (cfg.zero_slack_only) {
      std::erase_if(profiles, [](const ExponentProfile& p) { return !p.slack.is_zero(); });
    }
    std::sort(profiles.begin(), profiles.end(),
              [](const ExponentProfile& x, const ExponentProfile& y) {
                if (x.slack != y.slack) return x.slack < y.slack;
                return x.counts > y.counts;
              });

    if (cfg.progress)
      std::fprintf(stderr, "[%s %d] size %d: %zu candidate profiles\n", name(g), level,
                   k, profiles.size());
    std::atomic<bool> exhausted_all{true};
    std::atomic<bool> stop_all{false};
    std::optional<Solution> witness;
    std::mutex mu;  // guards gen + witness

    size_t profile_no = 0;
    for (const ExponentProfile& profile : profiles) {
      if (witness || out_of_time()) break;
      ++profile_no;
      bool zero = profile.slack.is_zero();
      std::atomic<uint64_t> tried{0};
      std::vector<std::vector<int>> groups;
      std::vector<int> take;
      for (int i = 0; i < (int)profile.counts.size(); ++i) {
        if (profile.counts[i] == 0) continue;
        groups.push_back(group_ids[profile.base_exp - base_exp + i]);
        take.push_back(profile.counts[i]);
      }
      PlacementGen gen(groups, take);

      auto worker = [&](int tid) {
        std::vector<int> placement;
        std::vector<std::vector<int>> batch;
        while (true) {
          batch.clear();
          {
            std::lock_guard<std::mutex> lock(mu);
            if (stop_all.load()) return;
            for (int i = 0; i < 32; ++i) {
              if (!gen.next(placement)) break;
              batch.push_back(placement);
            }
          }
          if (batch.empty()) return;
          for (auto& ids : batch) {
            if (stop_all.load()) return;
            if (!mirror_canonical(ctx.board, ids)) continue;
            ReachResult r =
                run_reach(ctx, *tts[tid], level, ids, zero, cfg.node_budget);
            total_nodes += r.nodes;
            ++tried;
            if (r.outcome == ReachOutcome::Found) {
              std::lock_guard<std::mutex> lock(mu);
              if (!witness) witness = std::move(r.solution);
              stop_all.store(true);
              return;
            }
            if (r.outcome == ReachOutcome::Budget) exhausted_all.store(false);
            if (out_of_time()) {
              exhausted_all.store(false);
              stop_all.store(true);
              return;
            }
          }
        }
      };

      if (threads == 1) {
        worker(0);
      } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
      }
      if (cfg.progress)
        std::fprintf(stderr,
                     "[%s %d] size %d: profile %zu/%zu done, %llu armies tried, "
                     "%llu nodes, %.0fs\n",
                     name(g), level, k, profile_no, profiles.size(),
                     (unsigned long long)tried.load(),
                     (unsigned long long)total_nodes.load(), elapsed());
    }

    result.nodes = total_nodes.load();
    result.seconds = elapsed();
    if (witness) {
      VerifyResult v = verify_solution(*witness);
      if (!v.ok) throw std::logic_error("internal error: witness fails verification: " + v.message);
      result.status = (cfg.zero_slack_only && k > start_k) ? SolveStatus::Feasible
                                                           : SolveStatus::Optimal;
      result.best_size = k;
      result.proven_lower_bound = proven;
      result.witness = std::move(witness);
      return result;
    }
    if (!exhausted_all.load()) {
      result.status = SolveStatus::Timeout;
      result.proven_lower_bound = proven;  // sizes below are proven impossible
      return result;
    }
    // size k fully ruled out; the ruling is unconditional only when the whole
    // candidate set was searched
    if (!cfg.zero_slack_only) proven = k + 1;
    result.proven_lower_bound = proven;
  }

  result.status = SolveStatus::Infeasible;
  result.nodes = total_nodes.load();
  result.seconds = elapsed();
  return result;
}

}  // namespace army
