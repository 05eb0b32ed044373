#include "army/ip.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace army {

int IPModel::cell_id(Cell c) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), c);
  if (it == cells.end() || !(*it == c)) return -1;
  return (int)(it - cells.begin());
}

IPModel build_ip(GeometryKind g, int level, const BoardWindow& w, FinishKind finish) {
  IPModel m;
  m.geom = g;
  m.level = level;
  m.window = w;
  for (int y = 0; y <= w.ymax; ++y)
    for (int x = w.xmin; x <= w.xmax; ++x)
      if (in_domain(g, {x, y})) m.cells.push_back({x, y});
  m.jumps = enumerate_jumps(g, w);
  size_t n = m.cells.size();
  m.smin.assign(n, 0);
  m.smax.assign(n, 0);
  m.fin.assign(n, 0);
  for (size_t i = 0; i < n; ++i)
    if (m.cells[i].y >= level) m.smax[i] = 1;
  if (finish == FinishKind::Target) {
    int t = m.cell_id(target_cell());
    if (t < 0) throw std::invalid_argument("window must contain the target");
    m.fin[t] = 1;
  } else {
    PagodaField f = designated_field(g, w);
    if (f.anchors().empty())
      throw std::invalid_argument("geometry has no anchor finish configuration");
    for (const auto& [c, e] : f.anchors()) {
      int id = m.cell_id(c);
      if (id < 0) throw std::invalid_argument("anchor outside window");
      m.fin[id] = 1;
    }
  }
  return m;
}

void add_exponent_constraints(IPModel& m, const PagodaField& f,
                              const std::vector<std::pair<int, int>>& counts) {
  for (auto [e, n] : counts) {
    IPModel::CountConstraint c;
    c.label = "exp_" + std::to_string(e);
    c.rhs = n;
    for (size_t i = 0; i < m.cells.size(); ++i)
      if (m.smax[i] > 0 && f.exponent(m.cells[i]) == e) c.indices.push_back((int)i);
    m.exp_constraints.push_back(std::move(c));
  }
}

void add_loss_constraint(IPModel& m, const PagodaField& f, int loss_exponent) {
  IPModel::CountConstraint c;
  c.label = "loss_" + std::to_string(loss_exponent);
  c.rhs = 1;
  SigmaValue target = sigma_pow(loss_exponent);
  for (size_t i = 0; i < m.jumps.size(); ++i) {
    const Jump& j = m.jumps[i];
    SigmaValue loss = f.weight(j.from) + f.weight(j.over) - f.weight(j.to);
    if (loss == target) c.indices.push_back((int)i);
  }
  m.loss_constraints.push_back(std::move(c));
}

namespace {

std::string coord_token(int v) {
  return v < 0 ? "m" + std::to_string(-v) : std::to_string(v);
}

std::string sta_name(Cell c) {
  return "STA_" + coord_token(c.x) + "_" + coord_token(c.y);
}

}  // namespace

std::string export_lp(const IPModel& m) {
  std::ostringstream out;
  out << "\\ solitaire army IP: " << name(m.geom) << " level " << m.level << "\n";
  out << "Minimize\n obj:";
  bool first = true;
  for (size_t i = 0; i < m.cells.size(); ++i) {
    out << (first ? " " : " + ") << sta_name(m.cells[i]);
    first = false;
  }
  out << "\nSubject To\n";
  // balance rows, one per cell: STA_m + sum_n A_{m,n} J_n = FIN_m
  std::vector<std::vector<std::pair<int, int>>> terms(m.cells.size());
  for (size_t n = 0; n < m.jumps.size(); ++n) {
    const Jump& j = m.jumps[n];
    terms[m.cell_id(j.from)].push_back({(int)n, -1});
    terms[m.cell_id(j.over)].push_back({(int)n, -1});
    terms[m.cell_id(j.to)].push_back({(int)n, +1});
  }
  for (size_t i = 0; i < m.cells.size(); ++i) {
    out << " bal_" << coord_token(m.cells[i].x) << "_" << coord_token(m.cells[i].y)
        << ": " << sta_name(m.cells[i]);
    for (auto [n, coef] : terms[i])
      out << (coef > 0 ? " + " : " - ") << "J_" << n;
    out << " = " << m.fin[i] << "\n";
  }
  for (const auto& c : m.exp_constraints) {
    out << " " << c.label << ":";
    for (size_t k = 0; k < c.indices.size(); ++k)
      out << (k ? " + " : " ") << sta_name(m.cells[c.indices[k]]);
    if (c.indices.empty()) out << " 0 STA_0_0";
    out << " = " << c.rhs << "\n";
  }
  for (const auto& c : m.loss_constraints) {
    out << " " << c.label << ":";
    for (size_t k = 0; k < c.indices.size(); ++k)
      out << (k ? " + " : " ") << "J_" << c.indices[k];
    if (c.indices.empty()) out << " 0 J_0";
    out << " = " << c.rhs << "\n";
  }
  out << "Bounds\n";
  for (size_t i = 0; i < m.cells.size(); ++i) {
    if (m.smax[i] == 0)
      out << " " << sta_name(m.cells[i]) << " = 0\n";
    else if (m.smin[i] > 0)
      out << " " << m.smin[i] << " <= " << sta_name(m.cells[i]) << " <= " << m.smax[i]
          << "\n";
  }
  for (size_t n = 0; n < m.jumps.size(); ++n) out << " 0 <= J_" << n << "\n";
  out << "Binaries\n";
  for (size_t i = 0; i < m.cells.size(); ++i) out << " " << sta_name(m.cells[i]) << "\n";
  out << "Generals\n";
  for (size_t n = 0; n < m.jumps.size(); ++n) out << " J_" << n << "\n";
  out << "End\n";
  return out.str();
}

LpSummary parse_lp_summary(const std::string& lp_text) {
  LpSummary s;
  std::istringstream in(lp_text);
  std::string line;
  enum { None, Subject, Bounds, Bin, Gen } section = None;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '\\') continue;
    if (line == "Minimize") { section = None; continue; }
    if (line == "Subject To") { section = Subject; continue; }
    if (line == "Bounds") { section = Bounds; continue; }
    if (line == "Binaries") { section = Bin; continue; }
    if (line == "Generals") { section = Gen; continue; }
    if (line == "End") break;
    if (section == Subject && line.find(':') != std::string::npos) s.constraints++;
    if (section == Bin) s.binaries++;
    if (section == Gen) s.generals++;
  }
  return s;
}

const char* name(LatticeResult r) {
  switch (r) {
    case LatticeResult::Feasible: return "feasible";
    case LatticeResult::Infeasible: return "infeasible";
    case LatticeResult::Indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

using Col = std::vector<int128>;

int128 iabs(int128 v) { return v < 0 ? -v : v; }

void axpy(Col& dst, int128 q, const Col& src) {  // dst += q * src
  for (size_t i = 0; i < dst.size(); ++i)
    dst[i] = checked_add(dst[i], checked_mul(q, src[i]));
}

struct EchelonBasis {
  std::vector<Col> cols;       // basis of the jump-effect lattice
  std::vector<int> pivot_row;  // strictly increasing
};

EchelonBasis column_echelon(std::vector<Col> cols, int rows) {
  EchelonBasis b;
  size_t p = 0;
  for (int r = 0; r < rows && p < cols.size(); ++r) {
    while (true) {
      // reduce everything against the smallest entry in this row; picking the
      // global minimum keeps the coefficients from exploding
      int jmin = -1;
      for (size_t j = p; j < cols.size(); ++j)
        if (cols[j][r] != 0 && (jmin < 0 || iabs(cols[j][r]) < iabs(cols[jmin][r])))
          jmin = (int)j;
      if (jmin < 0) break;
      bool others = false;
      for (size_t j = p; j < cols.size(); ++j) {
        if ((int)j == jmin || cols[j][r] == 0) continue;
        int128 q = cols[j][r] / cols[jmin][r];
        axpy(cols[j], -q, cols[jmin]);
        if (cols[j][r] != 0) others = true;
      }
      if (!others) {
        std::swap(cols[p], cols[jmin]);
        if (cols[p][r] < 0)
          for (auto& v : cols[p]) v = -v;
        b.pivot_row.push_back(r);
        ++p;
        break;
      }
    }
  }
  cols.resize(p);
  b.cols = std::move(cols);
  return b;
}

}  // namespace

bool lattice_check_witness(const IPModel& m, const std::vector<long long>& jump_counts,
                           bool signed_jumps) {
  if (jump_counts.size() != m.jumps.size()) return false;
  std::vector<long long> sta(m.cells.size(), 0);
  for (size_t i = 0; i < m.cells.size(); ++i) sta[i] = m.fin[i];
  for (size_t n = 0; n < m.jumps.size(); ++n) {
    long long j = jump_counts[n];
    if (!signed_jumps && j < 0) return false;
    if (j == 0) continue;
    sta[m.cell_id(m.jumps[n].from)] += j;
    sta[m.cell_id(m.jumps[n].over)] += j;
    sta[m.cell_id(m.jumps[n].to)] -= j;
  }
  for (size_t i = 0; i < m.cells.size(); ++i)
    if (sta[i] < m.smin[i] || sta[i] > m.smax[i]) return false;
  return true;
}

LatticeResult lattice_check(const IPModel& m, bool signed_jumps, uint64_t budget) {
  int M = (int)m.cells.size();
  long long total_max = 0, total_fin = 0;
  for (int i = 0; i < M; ++i) {
    total_max += m.smax[i];
    total_fin += m.fin[i];
  }

  if (!signed_jumps) {
    // jumps only remove men, so the start can never have fewer than the finish
    if (total_max < total_fin) return LatticeResult::Infeasible;
    long long max_jumps = total_max - total_fin;
    // bounded exhaustive search over jump counts
    std::vector<long long> counts(m.jumps.size(), 0);
    uint64_t nodes = 0;
    bool tripped = false;
    auto dfs = [&](auto&& self, size_t n, long long left) -> bool {
      if (++nodes > budget) {
        tripped = true;
        return false;
      }
      if (n == m.jumps.size())
        return lattice_check_witness(m, counts, false);
      for (long long take = 0; take <= left; ++take) {
        counts[n] = take;
        if (self(self, n + 1, left - take)) return true;
        if (tripped) return false;
      }
      counts[n] = 0;
      return false;
    };
    if (dfs(dfs, 0, max_jumps)) return LatticeResult::Feasible;
    return tripped ? LatticeResult::Indeterminate : LatticeResult::Infeasible;
  }

  // signed: FIN - STA must lie in the lattice spanned by the jump columns.
  // A jump and its reverse span the same line, so keep one of each pair.
  std::vector<Col> cols;
  cols.reserve(m.jumps.size());
  {
    std::set<Col> seen;
    for (const Jump& j : m.jumps) {
      Col c(M, 0);
      c[m.cell_id(j.from)] -= 1;
      c[m.cell_id(j.over)] -= 1;
      c[m.cell_id(j.to)] += 1;
      Col neg(M, 0);
      for (int i = 0; i < M; ++i) neg[i] = -c[i];
      if (seen.count(c) || seen.count(neg)) continue;
      seen.insert(c);
      cols.push_back(std::move(c));
    }
  }
  EchelonBasis basis;
  try {
    basis = column_echelon(std::move(cols), M);
  } catch (const std::overflow_error&) {
    // echelon coefficients can outgrow 128 bits on large windows
    return LatticeResult::Indeterminate;
  }
  size_t rank = basis.cols.size();

  std::vector<int128> z(rank, 0);
  uint64_t nodes = 0;
  bool tripped = false;
  // at pivot k the start value of that row is the only free choice
  auto dfs = [&](auto&& self, size_t k) -> bool {
    if (++nodes > budget) {
      tripped = true;
      return false;
    }
    if (k == rank) {
      for (int r = 0; r < M; ++r) {
        int128 v = 0;
        for (size_t j = 0; j < rank; ++j)
          if (basis.cols[j][r] != 0) v = checked_add(v, checked_mul(basis.cols[j][r], z[j]));
        int128 sta = m.fin[r] - v;
        if (sta < m.smin[r] || sta > m.smax[r]) return false;
      }
      return true;
    }
    int r = basis.pivot_row[k];
    int128 partial = 0;
    for (size_t j = 0; j < k; ++j)
      if (basis.cols[j][r] != 0) partial = checked_add(partial, checked_mul(basis.cols[j][r], z[j]));
    int128 d = basis.cols[k][r];
    for (int sta = m.smin[r]; sta <= m.smax[r]; ++sta) {
      int128 num = (int128)m.fin[r] - sta - partial;
      if (num % d != 0) continue;
      z[k] = num / d;
      if (self(self, k + 1)) return true;
      if (tripped) return false;
    }
    return false;
  };
  try {
    if (dfs(dfs, 0)) return LatticeResult::Feasible;
  } catch (const std::overflow_error&) {
    return LatticeResult::Indeterminate;
  }
  return tripped ? LatticeResult::Indeterminate : LatticeResult::Infeasible;
}

}  // namespace army
