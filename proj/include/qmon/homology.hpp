#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmon/bigint.hpp"
#include "qmon/finite_quandle.hpp"

namespace qmon {

enum class ChainTheory { Rack, Quandle };

// Dense integer matrix, row-major.  Boundary coefficients are tiny, so
// int64 is plenty for the raw matrices; exact arithmetic happens in the
// Smith reduction, which works on BigInt copies.
struct IMat {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  std::int64_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

IMat mat_mul(const IMat& x, const IMat& y);
bool mat_is_zero(const IMat& m);

// lexicographic tuple <-> index, first coordinate most significant
long long encode_tuple(int q, const std::vector<int>& t);
std::vector<int> decode_tuple(int q, int n, long long idx);

// a tuple is degenerate when some adjacent pair of coordinates is equal
bool tuple_degenerate(const std::vector<int>& t);

struct HomologyOptions {
  int degree_bound = 4;                 // highest degree we will attempt
  long long entry_budget = 50000000;    // max entries across one boundary matrix
};

// number of basis chains in degree n (all tuples, or the non-degenerate ones)
long long chain_dim(const FiniteQuandle& q, int n, ChainTheory theory);

// The degree-n boundary of the chain complex generated by tuples:
//   d(x1..xn) = sum_{i=2..n} (-1)^i [ (..drop xi..)
//                                     - (x1|>xi, .., x(i-1)|>xi, x(i+1), .., xn) ].
// Rows are (n-1)-chains, columns are n-chains.  In the quotient theory the
// degenerate tuples span a subcomplex and are struck from both sides.
// Degree 1 is the zero map onto the rank-one degree-0 space.
IMat boundary_matrix(const FiniteQuandle& q, int n, ChainTheory theory,
                     const HomologyOptions& opts = {});

// check that boundaries of degenerate n-tuples only involve degenerate
// (n-1)-tuples, i.e. the quotient in the second theory is well defined
bool degenerate_stable(const FiniteQuandle& q, int n, const HomologyOptions& opts = {});

struct SmithResult {
  std::vector<BigInt> factors;  // positive diagonal, each dividing the next
  int rank = 0;
};

// Smith normal form over the integers (exact)
SmithResult smith_normal_form(std::vector<std::vector<BigInt>> m);
SmithResult smith_normal_form(const IMat& m);

struct HomologyGroup {
  long long free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, in divisibility order
  std::string str() const;     // "Z^2 + Z/2", "Z", "0", ...
  bool operator==(const HomologyGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
};

// H_n of the complex chosen by `theory`; throws CapacityError when the
// degree or the boundary matrices exceed the configured budget
HomologyGroup homology(const FiniteQuandle& q, int n, ChainTheory theory,
                       const HomologyOptions& opts = {});

}  // namespace qmon
