#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmon/braid.hpp"
#include "qmon/finite_quandle.hpp"
#include "qmon/free_quandle.hpp"
#include "qmon/group_quandles.hpp"
#include "qmon/permutation.hpp"
#include "qmon/torus_dehn.hpp"

namespace qmon {

enum class BaseSpace { Disk, Sphere };
enum class MonodromyMode { Cover, Braid, Lefschetz };

const char* base_name(BaseSpace b);
const char* mode_name(MonodromyMode m);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct ValidationReport {
  bool valid = true;
  std::vector<CheckResult> checks;
  void add(const std::string& name, bool ok, const std::string& detail = "");
};

// A slope with a twist direction; the signed carrier composes like the
// doubled quandle: a negative-signed second argument acts by |>, a
// positive-signed one by <|.
struct SignedSlope {
  Slope slope;
  int sign = 1;
};

// One branching/singularity datum per marked point of the base, ordered.
// Exactly one of the entry vectors is populated, according to mode.
struct MonodromyTuple {
  MonodromyMode mode = MonodromyMode::Cover;
  BaseSpace base = BaseSpace::Disk;
  int d_or_strands = 0;             // sheets (cover) or strands (braid)
  std::optional<int> k;             // braid mode: closing exponent
  std::vector<Permutation> cover_entries;
  std::vector<LCord> braid_entries;
  std::vector<SignedSlope> lefschetz_entries;

  size_t length() const;
};

struct ValidateOptions {
  bool simple = false;             // cover: entries must be transpositions
  bool require_connected = false;  // cover: entries must generate transitively
  bool projective = false;         // braid: closing exponent must be 1
  bool achiral = false;            // lefschetz: allow negative twist signs
};

// cover entries: well-formed permutations of the d sheets (degree mismatch is
// structural); checks: every entry moves exactly one cycle (a transposition
// when simple), ordered product is the identity when the base is the sphere
// (no closure constraint over the disk), and optionally transitivity.
ValidationReport validate_cover(int sheets, BaseSpace base,
                                const std::vector<Permutation>& entries,
                                const ValidateOptions& opts = {});

// braid entries: each cord's witness must certify a positive-generator
// conjugate (via braid_eq); labels must lie in {1,2,3} (0 or |label| > 3 is
// structural); when a closing exponent k is given, the ordered product of
// braid^label must equal the k-th power of the full twist; projective
// additionally pins k == 1.
ValidationReport validate_braid_monodromy(int strands, std::optional<int> k,
                                          const std::vector<LCord>& entries,
                                          const ValidateOptions& opts = {});

// lefschetz entries: the contractible class is structurally rejected; signs
// must be +-1 and all +1 unless achiral; when the base is the sphere, the
// twists composed in order (applied left to right) must be the identity map.
ValidationReport validate_lefschetz(BaseSpace base,
                                    const std::vector<SignedSlope>& entries,
                                    const ValidateOptions& opts = {});

ValidationReport validate(const MonodromyTuple& t, const ValidateOptions& opts = {});

// Ordered products, composing entries as successively applied maps
// (left-to-right).  For matrices that accumulates by left multiplication.
Permutation cover_product(int sheets, const std::vector<Permutation>& entries);
Braid braid_product(int strands, const std::vector<LCord>& entries);
SL2 lefschetz_product(const std::vector<SignedSlope>& entries);

// Elementary braid-group moves on tuples over a finite carrier:
//   right at i: (..., a, b, ...) -> (..., b, a |> b, ...)
//   left  at i: (..., a, b, ...) -> (..., b <| a, a, ...)
// They are mutually inverse and preserve the ordered product.
std::vector<int> hurwitz_move(const FiniteQuandle& q, std::vector<int> t, int i, bool right);

struct OrbitOptions {
  size_t max_size = 10000;
  bool cyclic = false;        // also close under cyclic rotation
  bool conjugation = false;   // also close under simultaneous translation by
                              // each carrier element (finite carriers only)
};

struct IndexOrbit {
  std::vector<std::vector<int>> members;  // sorted; deterministic
  bool truncated = false;
};

IndexOrbit hurwitz_orbit(const FiniteQuandle& q, const std::vector<int>& start,
                         const OrbitOptions& opts = {});

// moves on the mode-level carriers
std::vector<SignedSlope> hurwitz_move_lefschetz(std::vector<SignedSlope> t, int i, bool right);
std::vector<LCord> hurwitz_move_braid(std::vector<LCord> t, int i, bool right);

struct SlopeOrbit {
  std::vector<std::vector<SignedSlope>> members;
  bool truncated = false;
};
SlopeOrbit hurwitz_orbit_lefschetz(const std::vector<SignedSlope>& start, size_t max_size);

struct LCordOrbit {
  std::vector<std::vector<LCord>> members;
  bool truncated = false;
};
// cords are keyed by the strand action of their braids, so membership is
// semantic rather than by word
LCordOrbit hurwitz_orbit_braid(const std::vector<LCord>& start, size_t max_size);

// Number of length-m assignments over the carrier satisfying the closure the
// base imposes: none over the disk; over the sphere the ordered product of
// the assigned permutations must be the identity.  This is exactly the
// number of colorings of the m marked loops by carrier elements that close
// up, and it is constant across each move orbit.
long long count_cover_assignments(const PermSetQuandle& target, int m, BaseSpace base,
                                  bool require_connected = false);

// Closure for carriers with no distinguished permutation model: over the
// sphere the composite right translation by the assigned elements (applied in
// order) must be the identity map of the carrier.
long long count_inner_assignments(const FiniteQuandle& target, int m, BaseSpace base);

// Same, but slot i translates by |> when signs[i] == +1 and by <| when -1
// (negative twists in an achiral tuple).
long long count_inner_assignments_signed(const FiniteQuandle& target,
                                         const std::vector<int>& signs, BaseSpace base);

// A length-m tuple over a finite carrier is the image sequence of the m free
// loop generators under a coloring; evaluating a conjugate of a generator
// folds the conjugator through the right translations.
int evaluate_coloring(const FiniteQuandle& q, const std::vector<int>& tuple,
                      const FreeQuandleElement& e);

// Tuple file format:
//   {"format":1, "mode":"cover|braid|lefschetz", "base":"disk|sphere",
//    "d_or_strands":int, "k":int?, "entries":[...]}
// cover entries: cycle strings; braid entries: {"conjugator": "...",
// "gen":int, "label":int, "chirality":int?}; lefschetz entries:
// {"slope":"y/x"|"I", "sign":int?}.
MonodromyTuple tuple_from_json(const std::string& text);
MonodromyTuple tuple_from_file(const std::string& path);
std::string tuple_to_json(const MonodromyTuple& t);

}  // namespace qmon
