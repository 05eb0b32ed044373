#include "army/pagoda.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace army {

int PagodaField::exponent(Cell c) const {
  switch (kind_) {
    case Kind::Basic:
      return metric_distance(geom_, c, target_cell());
    case Kind::Anchored: {
      int best = kInfExponent;
      for (const auto& [ac, ae] : anchors_)
        best = std::min(best, ae + metric_distance(geom_, c, ac));
      return best;
    }
    case Kind::PablitoEdge: {
      bool on_edge = mirror_edge_ ? (c.x == 0) : (c.x == c.y);
      return on_edge ? kInfExponent : c.y;
    }
    case Kind::Custom: {
      auto it = grid_.find(c);
      if (it == grid_.end()) throw std::out_of_range("cell outside custom field");
      return it->second;
    }
  }
  return kInfExponent;
}

PagodaField basic_field(GeometryKind g, const BoardWindow& w) {
  PagodaField f;
  f.kind_ = PagodaField::Kind::Basic;
  f.geom_ = g;
  f.window_ = w;
  f.name_ = std::string(name(g)) + "-basic";
  return f;
}

PagodaField improved_field(GeometryKind g, const BoardWindow& w,
                           const std::vector<Anchor>& anchors) {
  SigmaValue total = sigma_zero();
  for (const auto& [c, e] : anchors) {
    if (!in_domain(g, c)) throw std::invalid_argument("anchor outside board domain");
    total += exponent_weight(e);
  }
  if (!(total == sigma_one()))
    throw std::invalid_argument("anchor weights must sum to exactly 1, got " +
                                to_string(total));
  PagodaField f;
  f.kind_ = PagodaField::Kind::Anchored;
  f.geom_ = g;
  f.window_ = w;
  f.anchors_ = anchors;
  f.name_ = std::string(name(g)) + "-improved";
  if (!validate_field(f).empty())
    throw std::invalid_argument("anchored field fails the pagoda condition");
  return f;
}

PagodaField pablito_improved_field(const BoardWindow& w, bool mirror) {
  PagodaField f;
  f.kind_ = PagodaField::Kind::PablitoEdge;
  f.geom_ = GeometryKind::Pablito;
  f.window_ = w;
  f.mirror_edge_ = mirror;
  f.name_ = mirror ? "pablito-improved-mirror" : "pablito-improved";
  return f;
}

PagodaField custom_field(GeometryKind g, const BoardWindow& w,
                         const std::map<Cell, int>& exponents) {
  PagodaField f;
  f.kind_ = PagodaField::Kind::Custom;
  f.geom_ = g;
  f.window_ = w;
  f.grid_ = exponents;
  f.name_ = "custom";
  return f;
}

namespace {

std::vector<Anchor> mirror_anchors(GeometryKind g, const std::vector<Anchor>& a) {
  std::vector<Anchor> out;
  for (const auto& [c, e] : a) out.push_back({mirror_cell(g, c), e});
  return out;
}

const std::vector<Anchor>& diag_anchors() {
  static const std::vector<Anchor> a = {{{2, 2}, 2}, {{0, 2}, 2}, {{-1, 3}, 3}};
  return a;
}
const std::vector<Anchor>& diag_vertical_anchors() {
  static const std::vector<Anchor> a = {{{0, 2}, 2}, {{2, 3}, 3}, {{1, 2}, 2}};
  return a;
}
const std::vector<Anchor>& hex_anchors() {
  static const std::vector<Anchor> a = {{{2, 2}, 2}, {{1, 3}, 3}, {{1, 2}, 2}};
  return a;
}

}  // namespace

PagodaField preset_field(GeometryKind g, FieldPreset p, const BoardWindow& w) {
  if (p == FieldPreset::Basic) return basic_field(g, w);
  bool mirror = (p == FieldPreset::ImprovedMirror || p == FieldPreset::ImprovedVerticalMirror);
  bool vertical = (p == FieldPreset::ImprovedVertical || p == FieldPreset::ImprovedVerticalMirror);
  switch (g) {
    case GeometryKind::Conway:
      throw std::invalid_argument("conway has no improved preset");
    case GeometryKind::Skew:
    case GeometryKind::Diagonal: {
      if (vertical && g == GeometryKind::Skew)
        throw std::invalid_argument("skew jumps are all diagonal; no vertical finish");
      const auto& base = vertical ? diag_vertical_anchors() : diag_anchors();
      auto f = improved_field(g, w, mirror ? mirror_anchors(g, base) : base);
      return f;
    }
    case GeometryKind::Hexagonal: {
      if (vertical) throw std::invalid_argument("no vertical-finish preset for hexagonal");
      return improved_field(g, w, mirror ? mirror_anchors(g, hex_anchors()) : hex_anchors());
    }
    case GeometryKind::Pablito: {
      if (vertical) throw std::invalid_argument("no vertical-finish preset for pablito");
      return pablito_improved_field(w, mirror);
    }
  }
  throw std::invalid_argument("bad preset");
}

PagodaField designated_field(GeometryKind g, const BoardWindow& w) {
  if (g == GeometryKind::Conway) return basic_field(g, w);
  return preset_field(g, FieldPreset::Improved, w);
}

std::vector<PagodaField> all_preset_fields(GeometryKind g, const BoardWindow& w) {
  std::vector<PagodaField> out;
  out.push_back(basic_field(g, w));
  if (g == GeometryKind::Conway) return out;
  out.push_back(preset_field(g, FieldPreset::Improved, w));
  out.push_back(preset_field(g, FieldPreset::ImprovedMirror, w));
  if (g == GeometryKind::Diagonal) {
    out.push_back(preset_field(g, FieldPreset::ImprovedVertical, w));
    out.push_back(preset_field(g, FieldPreset::ImprovedVerticalMirror, w));
  }
  return out;
}

std::vector<Jump> validate_field(const PagodaField& f) {
  std::vector<Jump> bad;
  for (const Jump& j : enumerate_jumps(f.geometry(), f.window())) {
    SigmaValue lhs = f.weight(j.from) + f.weight(j.over);
    if ((lhs - f.weight(j.to)).sign() < 0) bad.push_back(j);
  }
  return bad;
}

const char* name(JumpLossType t) {
  switch (t) {
    case JumpLossType::T111: return "1.1.1";
    case JumpLossType::T121: return "1.2.1";
    case JumpLossType::T122: return "1.2.2";
    case JumpLossType::T123: return "1.2.3";
    case JumpLossType::T124: return "1.2.4";
    case JumpLossType::T131: return "1.3.1";
    case JumpLossType::T132: return "1.3.2";
    case JumpLossType::T133: return "1.3.3";
    case JumpLossType::T211: return "2.1.1";
    case JumpLossType::T311: return "3.1.1";
    case JumpLossType::Mixed: return "inf";
  }
  return "?";
}

namespace {

// Matches (p,q,r) against the integer line patterns, a = largest exponent.
// The last rule is the type-3 catch-all: the jumping man carries the largest
// exponent and the jumped man no more than the landing cell.
std::optional<JumpLossType> match_triple(long p, long q, long r) {
  long a = std::max({p, q, r});
  auto is = [&](long x, long y, long z) { return p == x && q == y && r == z; };
  if (is(a, a, a)) return JumpLossType::T111;
  if (is(a, a, a - 1)) return JumpLossType::T121;
  if (is(a, a - 1, a)) return JumpLossType::T122;
  if (is(a, a - 1, a - 1)) return JumpLossType::T123;
  if (is(a - 1, a, a - 1)) return JumpLossType::T124;
  if (is(a, a - 1, a - 2)) return JumpLossType::T131;
  if (is(a, a - 2, a - 1)) return JumpLossType::T132;
  if (is(a - 1, a, a - 2)) return JumpLossType::T133;
  if (q == a && p == r && p < a) return JumpLossType::T211;
  if (p == a && q <= r) return JumpLossType::T311;
  return std::nullopt;
}

}  // namespace

JumpClass classify_jump(const PagodaField& f, const Jump& j) {
  int p = f.exponent(j.from);
  int q = f.exponent(j.over);
  int r = f.exponent(j.to);
  SigmaValue loss = exponent_weight(p) + exponent_weight(q) - exponent_weight(r);
  if (loss.sign() < 0)
    throw std::invalid_argument("jump exponents are not pagoda-valid");
  if (p >= kInfExponent || q >= kInfExponent || r >= kInfExponent)
    return {JumpLossType::Mixed, false, loss};
  if (auto t = match_triple(p, q, r)) return {*t, false, loss};
  if (auto t = match_triple(r, q, p)) return {*t, true, loss};
  throw std::invalid_argument("jump exponents are not pagoda-valid");
}

bool field_has_type_121(const PagodaField& f) {
  for (const Jump& j : enumerate_jumps(f.geometry(), f.window())) {
    int p = f.exponent(j.from), q = f.exponent(j.over), r = f.exponent(j.to);
    if (p >= kInfExponent || q >= kInfExponent || r >= kInfExponent) continue;
    if (p == q && r == p - 1) return true;  // both directions get enumerated
  }
  return false;
}

SigmaValue total_weight(const PagodaField& f, const std::vector<Cell>& config) {
  SigmaValue t = sigma_zero();
  for (const Cell& c : config) t += f.weight(c);
  return t;
}

SigmaValue slack(const PagodaField& f, const std::vector<Cell>& config) {
  return total_weight(f, config) - sigma_one();
}

std::vector<Cell> max_weight_army(const PagodaField& f, int level, int k) {
  std::vector<Cell> cells = starting_region(f.geometry(), level, f.window());
  std::stable_sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) {
    return f.exponent(a) < f.exponent(b);
  });
  if ((int)cells.size() < k)
    throw std::invalid_argument("starting region too small for requested army");
  cells.resize(k);
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::string dump_exponents(const PagodaField& f) {
  const BoardWindow& w = f.window();
  GeometryKind g = f.geometry();
  int width = 1;
  for (int y = 0; y <= w.ymax; ++y)
    for (int x = w.xmin; x <= w.xmax; ++x)
      if (in_domain(g, {x, y}) && f.exponent({x, y}) < kInfExponent)
        width = std::max(width, (int)std::to_string(f.exponent({x, y})).size());
  std::ostringstream out;
  for (int y = 0; y <= w.ymax; ++y) {
    int xhi = (g == GeometryKind::Pablito) ? std::min(w.xmax, y) : w.xmax;
    for (int x = w.xmin; x <= xhi; ++x) {
      Cell c{x, y};
      std::string tok;
      int len;  // display length; the infinity sign is multi-byte
      if (!in_domain(g, c)) {
        tok = "#";
        len = 1;
      } else if (f.exponent(c) >= kInfExponent) {
        tok = "\xE2\x88\x9E";
        len = 1;
      } else {
        tok = std::to_string(f.exponent(c));
        len = (int)tok.size();
      }
      for (; len < width; ++len) tok.insert(tok.begin(), ' ');
      out << (x > w.xmin ? " " : "") << tok;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace army
