#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qmon/finite_quandle.hpp"
#include "qmon/permutation.hpp"

namespace qmon {

// A conjugation quandle on an explicit set of permutations:
// x |> y = y^-1 x y, x <| y = y x y^-1.  The table is index-aligned with
// `elements`.
struct PermSetQuandle {
  FiniteQuandle quandle;
  std::vector<Permutation> elements;
  std::optional<int> index_of(const Permutation& p) const;
  std::map<std::vector<int>, int> index;  // one-line images -> carrier index
};

// Builds the table for a set of permutations closed under mutual conjugation;
// throws StructuralError if the set is not closed or has duplicates.
PermSetQuandle conjugation_quandle(std::vector<Permutation> elements);

// Permutations of {1..d} with exactly one cycle of length >= 2, under
// conjugation.  Carrier in lexicographic one-line order.
PermSetQuandle cyclic_class_quandle(int d);

// The transpositions of {1..d} under conjugation; a subquandle of the above.
PermSetQuandle transposition_quandle(int d);

// All of S_n under conjugation.
PermSetQuandle symmetric_group_quandle(int n);

// 17-element subquandle of Z/10 x S_6 under componentwise conjugation:
// {(0,e), (2,e)} plus {(1,t) : t a transposition of {1..6}}.
// The two (r, e) elements act trivially on the right; the other fifteen form
// a copy of the transposition quandle on six letters.
struct Genus2Quandle {
  FiniteQuandle quandle;
  std::vector<std::pair<int, Permutation>> elements;
};

Genus2Quandle genus2_quotient();

}  // namespace qmon
