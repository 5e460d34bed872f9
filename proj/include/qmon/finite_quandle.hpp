#pragma once

#include <array>
#include <string>
#include <vector>

namespace qmon {

// Laws checked by the report machinery.  The first three are the quandle
// axioms; the last three are the compatibility laws of an augmentation
// (structure map ell into a group acting on the carrier).
enum class Law {
  Idempotence,         // x |> x == x
  RightInverse,        // x |-> x |> y is a bijection, inverted by <|
  SelfDistributivity,  // (x |> y) |> z == (x |> z) |> (y |> z)
  AugmentationFix,     // q . ell(q) == q
  AugmentationConj,    // ell(q . g) == g^-1 ell(q) g
  ActionHom,           // q |-> q . g preserves |>
};

const char* law_name(Law law);

struct LawViolation {
  Law law;
  std::array<int, 3> witness;  // indices; unused slots are -1
};

struct AxiomReport {
  bool passed = true;
  bool truncated = false;  // more violations exist than were recorded
  std::vector<LawViolation> violations;
  static constexpr int kMaxViolations = 100;
  void add(Law law, int a, int b = -1, int c = -1);
};

// Finite two-sided right-distributive operation table on {0..n-1}.
// rhd(x, y) is x |> y; unrhd(x, y) is the inverse translation x <| y,
// so (x |> y) <| y == x == (x <| y) |> y by construction.
class FiniteQuandle {
 public:
  FiniteQuandle() = default;

  // table[x][y] = x |> y.  Every column y must be a bijection of the carrier
  // (otherwise no inverse translation exists); throws StructuralError if not.
  static FiniteQuandle from_rhd(const std::vector<std::vector<int>>& table,
                                std::vector<std::string> labels = {});

  int size() const { return n_; }
  int rhd(int x, int y) const { return rhd_[static_cast<size_t>(x) * n_ + y]; }
  int unrhd(int x, int y) const { return unrhd_[static_cast<size_t>(x) * n_ + y]; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int i) const;  // falls back to the index as text

  std::vector<std::vector<int>> rhd_rows() const;

  // tables only; labels do not participate
  bool operator==(const FiniteQuandle& o) const {
    return n_ == o.n_ && rhd_ == o.rhd_;
  }

 private:
  int n_ = 0;
  std::vector<int> rhd_, unrhd_;
  std::vector<std::string> labels_;
};

// Axiom check on a raw table.  Reports idempotence, right-invertibility
// (witness: two rows colliding in a column) and self-distributivity
// violations; throws StructuralError for ragged tables or out-of-range
// entries.  Handles tables that fail right-invertibility, which
// FiniteQuandle::from_rhd would reject outright.
AxiomReport check_axioms(int n, const std::vector<std::vector<int>>& table);

// Same checks on a constructed quandle, including both inverse identities.
AxiomReport check_axioms(const FiniteQuandle& q);

using QuandleHom = std::vector<int>;  // f[i] = image of element i

bool is_hom(const FiniteQuandle& src, const FiniteQuandle& tgt, const QuandleHom& f);

// All |>-preserving maps src -> tgt, lexicographically ordered by image
// sequence.  Backtracking over element images in index order, pruning on the
// first violated constraint.  An empty source yields exactly the empty map.
std::vector<QuandleHom> enumerate_homs(const FiniteQuandle& src, const FiniteQuandle& tgt);

// Smallest subset containing seed and closed under |> and <| (both argument
// positions).  Returns sorted indices.
std::vector<int> subquandle_generated(const FiniteQuandle& q, const std::vector<int>& seed);

// Doubled carrier Q x {+,-} where the '-'-labeled copy acts by |> and the
// '+'-labeled copy acts by <|:
//   (x,s) |> (y,-) = (x |> y, s),   (x,s) |> (y,+) = (x <| y, s).
// Element (x,+) has index x, element (x,-) has index n + x.
// Requires q to satisfy the quandle axioms (throws StructuralError if not).
FiniteQuandle achiral_double(const FiniteQuandle& q);

// Connected components of the action generated by all right translations.
std::vector<int> orbit_ids(const FiniteQuandle& q);
int orbit_count(const FiniteQuandle& q);

}  // namespace qmon
