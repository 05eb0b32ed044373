#pragma once

#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "army/geometry.hpp"
#include "army/sigma.hpp"

namespace army {

// Exponent marker for cells of weight sigma^inf = 0.
inline constexpr int kInfExponent = std::numeric_limits<int>::max() / 4;

inline SigmaValue exponent_weight(int e) {
  return e >= kInfExponent ? sigma_zero() : sigma_pow(e);
}

using Anchor = std::pair<Cell, int>;

// A cell weighting of the form sigma^e whose total over occupied cells can
// never increase under a legal jump. Basic fields take e = distance to the
// target; improved fields grow e from a small anchor configuration whose
// weights sum to exactly 1; the Pablito improved field zeroes one board edge.
class PagodaField {
 public:
  enum class Kind { Basic, Anchored, PablitoEdge, Custom };

  GeometryKind geometry() const { return geom_; }
  const BoardWindow& window() const { return window_; }
  Kind kind() const { return kind_; }
  const std::vector<Anchor>& anchors() const { return anchors_; }
  const std::string& name() const { return name_; }

  // Defined for every cell of the domain, also outside the window (except for
  // Custom fields, which only know their grid).
  int exponent(Cell c) const;
  SigmaValue weight(Cell c) const { return exponent_weight(exponent(c)); }

  // True for fields whose bound argument assumes a particular pair of final
  // jumps; their greedy bounds only apply from level 2 up.
  bool finish_conditional() const { return kind_ == Kind::Anchored; }

 private:
  friend PagodaField basic_field(GeometryKind, const BoardWindow&);
  friend PagodaField improved_field(GeometryKind, const BoardWindow&,
                                    const std::vector<Anchor>&);
  friend PagodaField pablito_improved_field(const BoardWindow&, bool);
  friend PagodaField custom_field(GeometryKind, const BoardWindow&,
                                  const std::map<Cell, int>&);

  Kind kind_ = Kind::Basic;
  GeometryKind geom_ = GeometryKind::Conway;
  BoardWindow window_;
  std::vector<Anchor> anchors_;
  bool mirror_edge_ = false;  // PablitoEdge: which edge is zeroed
  std::map<Cell, int> grid_;  // Custom only
  std::string name_;
};

PagodaField basic_field(GeometryKind g, const BoardWindow& w);

// exponent(c) = min over anchors of (anchor exponent + metric distance).
// Throws if the anchor weights do not sum to exactly 1 or if the resulting
// field fails validation on the window.
PagodaField improved_field(GeometryKind g, const BoardWindow& w,
                           const std::vector<Anchor>& anchors);

// Row-index exponents with the right edge (x == y) zeroed out; mirror picks
// the left edge instead.
PagodaField pablito_improved_field(const BoardWindow& w, bool mirror = false);

// Unvalidated grid field for experiments and tests.
PagodaField custom_field(GeometryKind g, const BoardWindow& w,
                         const std::map<Cell, int>& exponents);

enum class FieldPreset {
  Basic,
  Improved,          // designated improved field per geometry
  ImprovedMirror,
  ImprovedVertical,  // diagonal/skew only: vertical-finish variant
  ImprovedVerticalMirror,
};

// Built-in presets. Improved anchors: diagonal/skew {(2,2):2,(0,2):2,(-1,3):3},
// vertical finish {(0,2):2,(2,3):3,(1,2):2}, hexagonal {(2,2):2,(1,3):3,(1,2):2},
// Pablito edge field. Throws for presets a geometry does not have.
PagodaField preset_field(GeometryKind g, FieldPreset p, const BoardWindow& w);

// The field behind the published per-level size bounds: basic for Conway,
// the improved preset for everyone else.
PagodaField designated_field(GeometryKind g, const BoardWindow& w);

// All presets that exist for g (used by validation sweeps).
std::vector<PagodaField> all_preset_fields(GeometryKind g, const BoardWindow& w);

// Every in-window jump violating sigma^a + sigma^b >= sigma^c in its
// direction. Empty result means the field is valid.
std::vector<Jump> validate_field(const PagodaField& f);

// Line patterns of the exponent triple along a jump; Mixed covers triples
// with an infinite exponent.
enum class JumpLossType {
  T111,  // (a,a,a)
  T121,  // (a,a,a-1)
  T122,  // (a,a-1,a)
  T123,  // (a,a-1,a-1)
  T124,  // (a-1,a,a-1)
  T131,  // (a,a-1,a-2)
  T132,  // (a,a-2,a-1)
  T133,  // (a-1,a,a-2)
  T211,  // (a-i,a,a-i), i > 0
  T311,  // (a,a-i-j,a-j), i,j > 0
  Mixed, // involves a zero-weight cell
};

const char* name(JumpLossType t);

struct JumpClass {
  JumpLossType type;
  bool reversed;    // pattern matched against (to, over, from)
  SigmaValue loss;  // exact weight lost by the jump in its direction
};

// Throws std::invalid_argument when the triple is not pagoda-valid.
JumpClass classify_jump(const PagodaField& f, const Jump& j);

bool field_has_type_121(const PagodaField& f);

SigmaValue total_weight(const PagodaField& f, const std::vector<Cell>& config);
SigmaValue slack(const PagodaField& f, const std::vector<Cell>& config);

// The k heaviest starting cells (ties by (y,x)) for rows >= level.
std::vector<Cell> max_weight_army(const PagodaField& f, int level, int k);

// Board-shaped exponent text, 'inf' cells rendered as a dot-prefixed marker.
std::string dump_exponents(const PagodaField& f);

}  // namespace army
