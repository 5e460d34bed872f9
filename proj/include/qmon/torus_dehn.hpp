#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmon/bigint.hpp"
#include "qmon/linear.hpp"

namespace qmon {

// An isotopy class of unoriented essential simple closed curves on the torus
// (a coprime slope y/x), plus the contractible class I.  Canonical form:
// x > 0, or x == 0 and y == 1.
class Slope {
 public:
  Slope() = default;  // 0/1

  static Slope contractible();
  // gcd(|x|, |y|) must be 1 (StructuralError otherwise); sign is canonicalized
  static Slope make(BigInt x, BigInt y);

  bool is_contractible() const { return contractible_; }
  const BigInt& x() const { return x_; }
  const BigInt& y() const { return y_; }

  std::string str() const;  // "y/x", or "I"
  // "y/x" with integer parts, or "I"
  static Slope parse(const std::string& text);

  bool operator==(const Slope& o) const {
    return contractible_ == o.contractible_ && x_ == o.x_ && y_ == o.y_;
  }
  bool operator!=(const Slope& o) const { return !(*this == o); }
  bool operator<(const Slope& o) const;  // arbitrary total order for sets

 private:
  bool contractible_ = false;
  BigInt x_ = 1, y_ = 0;
};

struct SL2 {
  BigInt a = 1, b = 0, c = 0, d = 1;  // [[a,b],[c,d]]

  static SL2 identity() { return {}; }
  bool operator==(const SL2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator!=(const SL2& o) const { return !(*this == o); }
  BigInt det() const { return a * d - b * c; }
  BigInt trace() const { return a + d; }
  std::string str() const;
};

SL2 sl2_mul(const SL2& m, const SL2& n);  // matrix product m * n
SL2 sl2_inv(const SL2& m);                // requires det == 1
SL2 sl2_pow(const SL2& m, int e);

// The twisting of one curve class about another.  In matrix form the
// operation applies the inverse twist matrix of the second argument:
//   (v/u) |> (y/x) = (v - v x y + u y^2) / (u + u x y - v x^2),
// and <| applies the twist matrix itself.  I is a right fixed point and acts
// trivially: I |> q == I, q |> I == q.
Slope slope_rhd(const Slope& p, const Slope& q);
Slope slope_unrhd(const Slope& p, const Slope& q);

// [[1 - x y, x^2], [-y^2, 1 + x y]] for slope y/x; the identity for I.
// Always trace 2 and determinant 1, and it fixes the column vector (x, y).
SL2 twist_matrix(const Slope& q);

// Inverse of twist_matrix where defined: identity -> I; otherwise the
// off-diagonal entries must be x^2 and -y^2 for a coprime pair whose product
// sign matches the diagonal.  Returns nullopt for every other matrix.
std::optional<Slope> slope_from_matrix(const SL2& m);

// m applied to the column vector (x, y); I is fixed.  Unimodularity keeps
// the image coprime (checked).
Slope matrix_act(const Slope& q, const SL2& m);

// Conjugation identity relating the operation to twist matrices:
//   twist_matrix(p |> q) == M_q^eps * M_p * M_q^-eps  with eps below.
// Both orientations were candidates; exhaustive checks over bounded slopes
// pick this one, and the suite re-derives it on every run.
inline constexpr int kTwistConjExponent = -1;

// canonical slopes with |x| <= h and |y| <= h, lexicographic, optionally
// with I appended
std::vector<Slope> slopes_up_to_height(long long h, bool include_contractible);

// Class of the underlying curve in first homology up to orientation:
// y/x -> the sign-canonical vector (x, y); I -> (0, 0).  Interlocks with the
// rank-2 alternating operation: curve_class(p |> q) ==
// class_rhd(curve_class(p), curve_class(q)).
RVec curve_class(const Slope& s);
RVec class_rhd(const RVec& a, const RVec& b);
RVec class_unrhd(const RVec& a, const RVec& b);

}  // namespace qmon
