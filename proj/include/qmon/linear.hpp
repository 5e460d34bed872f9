#pragma once

#include <string>
#include <vector>

#include "qmon/bigint.hpp"
#include "qmon/finite_quandle.hpp"

namespace qmon {

// modulus 0 means the integers; modulus m >= 1 means Z/m with
// representatives 0..m-1
struct RingSpec {
  long long modulus = 0;
  bool finite() const { return modulus >= 1; }
};

BigInt ring_norm(const RingSpec& ring, BigInt v);

using RVec = std::vector<BigInt>;
using RMat = std::vector<std::vector<BigInt>>;

RVec vec_norm(const RingSpec& ring, RVec v);
RVec vec_add(const RingSpec& ring, const RVec& a, const RVec& b);
RVec vec_sub(const RingSpec& ring, const RVec& a, const RVec& b);
RVec vec_neg(const RingSpec& ring, const RVec& a);
RVec vec_scaled_add(const RingSpec& ring, const RVec& a, const BigInt& c, const RVec& b);
RVec mat_apply(const RingSpec& ring, const RMat& m, const RVec& v);
std::string vec_str(const RVec& v);  // "(0,1,2)"

BigInt mat_det(const RingSpec& ring, const RMat& m);
// adjugate-based inverse; requires the determinant to be a unit
// (+-1 over the integers, coprime to the modulus otherwise)
RMat mat_inverse(const RingSpec& ring, const RMat& m);

// Bilinear form with antisymmetric matrix and zero diagonal; the zero
// diagonal is required explicitly so that x |> x == x survives 2-torsion.
struct AlternatingForm {
  RingSpec ring;
  int dim = 0;
  RMat mat;
  static AlternatingForm make(RingSpec ring, RMat mat);
  BigInt pair(const RVec& x, const RVec& y) const;
};

// block-diagonal sum of genus copies of [[0,1],[-1,0]] on rank 2*genus
AlternatingForm symplectic_form(int genus, RingSpec ring);

// x |> y = x + <x,y> y  and its inverse  x <| y = x - <x,y> y
RVec alternating_rhd(const AlternatingForm& f, const RVec& x, const RVec& y);
RVec alternating_unrhd(const AlternatingForm& f, const RVec& x, const RVec& y);

// x |> y = T(x - y) + y  for an invertible matrix T
struct AlexanderQuandle {
  RingSpec ring;
  int dim = 0;
  RMat t, t_inv;
  static AlexanderQuandle make(RingSpec ring, RMat t);
};

RVec alexander_rhd(const AlexanderQuandle& a, const RVec& x, const RVec& y);
RVec alexander_unrhd(const AlexanderQuandle& a, const RVec& x, const RVec& y);

// Canonical representative of {v, -v}: over the integers the first nonzero
// coordinate is made positive; over Z/m the lexicographically smaller of the
// two normalized vectors is chosen.  Negating either operand of the
// alternating operation does not change the resulting class, so the
// operations descend to these representatives.
RVec negation_class_rep(const RingSpec& ring, RVec v);

// all m^dim vectors over a finite ring in lexicographic order
std::vector<RVec> all_vectors(const RingSpec& ring, int dim);

FiniteQuandle alexander_table(const AlexanderQuandle& a);
FiniteQuandle alternating_table(const AlternatingForm& f);
FiniteQuandle reduced_alternating_table(const AlternatingForm& f);

}  // namespace qmon
