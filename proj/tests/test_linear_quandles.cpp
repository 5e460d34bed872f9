#include <doctest.h>

#include <algorithm>
#include <random>

#include "qmon/errors.hpp"
#include "qmon/linear.hpp"

using namespace qmon;

namespace {
constexpr unsigned kSeed = 91201;

// fraction-free determinant, independent of mat_det's cofactor expansion
BigInt bareiss_det(RMat m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) { swap = i; break; }
      if (swap < 0) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}
}  // namespace

TEST_CASE("ring normalization") {
  CHECK(ring_norm({}, BigInt(-7)) == -7);
  CHECK(ring_norm({5}, BigInt(-7)) == 3);
  CHECK(ring_norm({5}, BigInt(12)) == 2);
  CHECK(vec_str({BigInt(0), BigInt(1)}) == "(0,1)");
}

TEST_CASE("determinant agrees with a fraction-free oracle") {
  INFO("seed ", kSeed);
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      RMat m(n, RVec(n));
      for (auto& row : m)
        for (auto& v : row) v = entry(rng);
      CHECK(mat_det({}, m) == bareiss_det(m));
    }
}

TEST_CASE("matrix inverse over both rings") {
  RMat u = {{BigInt(1), BigInt(2)}, {BigInt(0), BigInt(1)}};  // det 1
  auto ui = mat_inverse({}, u);
  CHECK(ui[0][1] == -2);

  RingSpec z5{5};
  RMat t = {{BigInt(2)}};
  auto ti = mat_inverse(z5, t);
  CHECK(ti[0][0] == 3);  // 2 * 3 == 1 mod 5

  RMat non_unit = {{BigInt(2)}};
  CHECK_THROWS_AS(mat_inverse({}, non_unit), StructuralError);      // det 2 over Z
  CHECK_THROWS_AS(mat_inverse({4}, non_unit), StructuralError);     // gcd(2,4) != 1
  RMat singular = {{BigInt(1), BigInt(1)}, {BigInt(1), BigInt(1)}};
  CHECK_THROWS_AS(mat_inverse({5}, singular), StructuralError);
}

TEST_CASE("alternating form validation") {
  RingSpec z2{2};
  // antisymmetric over Z/2 (1 == -1) with zero diagonal: accepted
  CHECK_NOTHROW(AlternatingForm::make(z2, {{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}));
  // nonzero diagonal is refused even where it is antisymmetric mod 2
  CHECK_THROWS_AS(AlternatingForm::make(z2, {{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}}),
                  StructuralError);
  CHECK_THROWS_AS(AlternatingForm::make({}, {{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}),
                  StructuralError);  // not antisymmetric over Z

  auto f = symplectic_form(2, {3});
  CHECK(f.dim == 4);
  RVec e1 = {BigInt(1), BigInt(0), BigInt(0), BigInt(0)};
  RVec e2 = {BigInt(0), BigInt(1), BigInt(0), BigInt(0)};
  RVec e3 = {BigInt(0), BigInt(0), BigInt(1), BigInt(0)};
  CHECK(f.pair(e1, e2) == 1);
  CHECK(f.pair(e2, e1) == 2);  // -1 mod 3
  CHECK(f.pair(e1, e3) == 0);
}

TEST_CASE("alternating operation expansion identity") {
  // (x |> y) |> z == x + <x,y>y + <x,z>z + <x,y><y,z>z, expanded by hand
  auto f = symplectic_form(1, {3});
  auto vs = all_vectors(f.ring, f.dim);
  REQUIRE(vs.size() == 9);
  for (const auto& x : vs)
    for (const auto& y : vs)
      for (const auto& z : vs) {
        RVec lhs = alternating_rhd(f, alternating_rhd(f, x, y), z);
        RVec expect = x;
        expect = vec_scaled_add(f.ring, expect, f.pair(x, y), y);
        expect = vec_scaled_add(f.ring, expect, f.pair(x, z), z);
        expect = vec_scaled_add(f.ring, expect, f.pair(x, y) * f.pair(y, z), z);
        CHECK(lhs == expect);
      }
}

TEST_CASE("alexander tables") {
  auto a = AlexanderQuandle::make({5}, {{BigInt(2)}});
  CHECK(a.t_inv[0][0] == 3);
  auto q = alexander_table(a);
  REQUIRE(q.size() == 5);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) CHECK(q.rhd(x, y) == ((2 * (x - y) + y) % 5 + 5) % 5);
  CHECK(check_axioms(q).passed);

  CHECK_THROWS_AS(AlexanderQuandle::make({4}, {{BigInt(2)}}), StructuralError);
  CHECK_THROWS_AS(AlexanderQuandle::make({}, {{BigInt(2)}}), StructuralError);
}

TEST_CASE("negation class representatives") {
  CHECK(negation_class_rep({}, {BigInt(-2), BigInt(3)}) == RVec{BigInt(2), BigInt(-3)});
  CHECK(negation_class_rep({}, {BigInt(0), BigInt(-1)}) == RVec{BigInt(0), BigInt(1)});
  CHECK(negation_class_rep({5}, {BigInt(4), BigInt(0)}) == RVec{BigInt(1), BigInt(0)});
  CHECK(negation_class_rep({5}, {BigInt(2), BigInt(1)}) == RVec{BigInt(2), BigInt(1)});
}

TEST_CASE("vector enumeration") {
  auto vs = all_vectors({2}, 3);
  REQUIRE(vs.size() == 8);
  CHECK(vs.front() == RVec{BigInt(0), BigInt(0), BigInt(0)});
  CHECK(vs.back() == RVec{BigInt(1), BigInt(1), BigInt(1)});
  // first coordinate most significant
  CHECK(vs[4] == RVec{BigInt(1), BigInt(0), BigInt(0)});
  CHECK_THROWS_AS(all_vectors({}, 2), CapacityError);
}

TEST_CASE("reduced carrier is the negation quotient") {
  auto f = symplectic_form(1, {3});
  auto full = alternating_table(f);
  auto red = reduced_alternating_table(f);
  REQUIRE(full.size() == 9);
  REQUIRE(red.size() == 5);
  CHECK(check_axioms(red).passed);

  // the class map is a table homomorphism
  auto vs = all_vectors(f.ring, f.dim);
  std::vector<int> cls(vs.size());
  std::vector<RVec> reps;
  for (size_t i = 0; i < vs.size(); ++i) {
    RVec r = negation_class_rep(f.ring, vs[i]);
    auto it = std::find(reps.begin(), reps.end(), r);
    if (it == reps.end()) {
      reps.push_back(r);
      cls[i] = static_cast<int>(reps.size()) - 1;
    } else {
      cls[i] = static_cast<int>(it - reps.begin());
    }
  }
  CHECK(is_hom(full, red, cls));
}
