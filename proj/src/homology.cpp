#include "qmon/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qmon/errors.hpp"

namespace qmon {

IMat mat_mul(const IMat& x, const IMat& y) {
  if (x.cols != y.rows) throw StructuralError("matrix shape mismatch");
  IMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      std::int64_t v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

bool mat_is_zero(const IMat& m) {
  for (auto v : m.a)
    if (v != 0) return false;
  return true;
}

long long encode_tuple(int q, const std::vector<int>& t) {
  long long idx = 0;
  for (int x : t) {
    if (x < 0 || x >= q) throw StructuralError("tuple entry out of range");
    idx = idx * q + x;
  }
  return idx;
}

std::vector<int> decode_tuple(int q, int n, long long idx) {
  std::vector<int> t(n);
  for (int i = n - 1; i >= 0; --i) {
    t[i] = static_cast<int>(idx % q);
    idx /= q;
  }
  return t;
}

bool tuple_degenerate(const std::vector<int>& t) {
  for (size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] == t[i + 1]) return true;
  return false;
}

long long chain_dim(const FiniteQuandle& q, int n, ChainTheory theory) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  long long d = q.size();
  if (theory == ChainTheory::Rack) {
    long long r = 1;
    for (int i = 0; i < n; ++i) r *= d;
    return r;
  }
  long long r = d;
  for (int i = 1; i < n; ++i) r *= d - 1;
  return r;
}

namespace {

// q^n with a cap; enumeration of all degree-n tuples must stay addressable
long long tuple_space(int q, int n, long long cap) {
  long long r = 1;
  for (int i = 0; i < n; ++i) {
    if (q != 0 && r > cap / q) throw CapacityError("tuple space too large");
    r *= q;
  }
  return r;
}

}  // namespace

IMat boundary_matrix(const FiniteQuandle& qd, int n, ChainTheory theory,
                     const HomologyOptions& opts) {
  const int q = qd.size();
  if (q < 1) throw StructuralError("empty carrier");
  if (n < 1) throw StructuralError("boundary defined from degree 1 up");
  if (n > opts.degree_bound) throw CapacityError("degree exceeds the configured bound");

  const long long rows = chain_dim(qd, n - 1, theory);
  const long long cols = chain_dim(qd, n, theory);
  if (rows > 0 && cols > opts.entry_budget / std::max(rows, 1LL))
    throw CapacityError("boundary matrix exceeds the entry budget");

  if (n == 1) return IMat(1, static_cast<int>(cols));

  // row lookup: full tuple index -> basis row (-1 for struck tuples)
  const long long full_rows = tuple_space(q, n - 1, opts.entry_budget);
  std::vector<int> row_of(static_cast<size_t>(full_rows), -1);
  {
    long long next = 0;
    std::vector<int> t(n - 1, 0);
    for (long long idx = 0; idx < full_rows; ++idx) {
      t = decode_tuple(q, n - 1, idx);
      if (theory == ChainTheory::Quandle && tuple_degenerate(t)) continue;
      row_of[static_cast<size_t>(idx)] = static_cast<int>(next++);
    }
    if (next != rows) throw StructuralError("basis size mismatch");
  }

  IMat m(static_cast<int>(rows), static_cast<int>(cols));

  // iterate over the column basis without materializing the full tuple space
  std::vector<int> t(n, 0);
  long long col = 0;
  std::vector<int> dropped(n - 1), twisted(n - 1);
  while (true) {
    bool skip = theory == ChainTheory::Quandle && tuple_degenerate(t);
    if (!skip) {
      for (int i = 2; i <= n; ++i) {
        int sign = (i % 2 == 0) ? 1 : -1;
        int pos = 0;
        for (int j = 0; j < n; ++j)
          if (j != i - 1) dropped[pos++] = t[j];
        pos = 0;
        for (int j = 0; j < i - 1; ++j) twisted[pos++] = qd.rhd(t[j], t[i - 1]);
        for (int j = i; j < n; ++j) twisted[pos++] = t[j];

        int r1 = row_of[static_cast<size_t>(encode_tuple(q, dropped))];
        if (r1 >= 0) m.at(r1, static_cast<int>(col)) += sign;
        int r2 = row_of[static_cast<size_t>(encode_tuple(q, twisted))];
        if (r2 >= 0) m.at(r2, static_cast<int>(col)) -= sign;
      }
      ++col;
    }
    // next tuple, lexicographic
    int k = n - 1;
    while (k >= 0 && t[k] == q - 1) t[k--] = 0;
    if (k < 0) break;
    ++t[k];
  }
  if (col != cols) throw StructuralError("basis size mismatch");
  return m;
}

bool degenerate_stable(const FiniteQuandle& qd, int n, const HomologyOptions& opts) {
  const int q = qd.size();
  if (q < 1) throw StructuralError("empty carrier");
  if (n < 2) return true;
  if (n > opts.degree_bound) throw CapacityError("degree exceeds the configured bound");
  tuple_space(q, n, opts.entry_budget);

  std::vector<int> t(n, 0), dropped(n - 1), twisted(n - 1);
  std::map<long long, int> support;  // non-degenerate faces must cancel
  while (true) {
    if (tuple_degenerate(t)) {
      support.clear();
      for (int i = 2; i <= n; ++i) {
        int sign = (i % 2 == 0) ? 1 : -1;
        int pos = 0;
        for (int j = 0; j < n; ++j)
          if (j != i - 1) dropped[pos++] = t[j];
        pos = 0;
        for (int j = 0; j < i - 1; ++j) twisted[pos++] = qd.rhd(t[j], t[i - 1]);
        for (int j = i; j < n; ++j) twisted[pos++] = t[j];
        if (!tuple_degenerate(dropped)) support[encode_tuple(q, dropped)] += sign;
        if (!tuple_degenerate(twisted)) support[encode_tuple(q, twisted)] -= sign;
      }
      for (const auto& [idx, coeff] : support)
        if (coeff != 0) return false;
    }
    int k = n - 1;
    while (k >= 0 && t[k] == q - 1) t[k--] = 0;
    if (k < 0) break;
    ++t[k];
  }
  return true;
}

namespace {

using Row = std::vector<BigInt>;

void smith_reduce(std::vector<Row>& m, SmithResult& out) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry in the remaining block becomes the pivot
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        if (pi < 0 || abs(m[i][j]) < abs(m[pi][pj])) { pi = i; pj = j; }
      }
    if (pi < 0) break;
    std::swap(m[t], m[pi]);
    if (pj != t)
      for (int i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][t]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt f = m[i][t] / m[t][t];
        if (f != 0)
          for (int j = t; j < cols; ++j) m[i][j] -= f * m[t][j];
        if (m[i][t] != 0) {  // remainder survives: it is smaller, promote it
          std::swap(m[t], m[i]);
          dirty = true;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt f = m[t][j] / m[t][t];
        if (f != 0)
          for (int i = t; i < rows; ++i) m[i][j] -= f * m[i][t];
        if (m[t][j] != 0) {
          for (int i = 0; i < rows; ++i) std::swap(m[i][j], m[i][t]);
          dirty = true;
        }
      }
      if (!dirty) {
        // pivot must divide the rest of the block; otherwise fold the
        // offending row in and keep reducing
        for (int i = t + 1; i < rows && !dirty; ++i)
          for (int j = t + 1; j < cols && !dirty; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (int k = t; k < cols; ++k) m[t][k] += m[i][k];
              dirty = true;
            }
      }
    }
    out.factors.push_back(abs(m[t][t]));
    ++t;
  }
  out.rank = t;

  // insurance: bubble the diagonal into a divisibility chain
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < out.factors.size(); ++i) {
      if (out.factors[i + 1] % out.factors[i] == 0) continue;
      BigInt g = gcd(out.factors[i], out.factors[i + 1]);
      BigInt l = out.factors[i] / g * out.factors[i + 1];
      out.factors[i] = g;
      out.factors[i + 1] = l;
      moved = true;
    }
  }
}

}  // namespace

SmithResult smith_normal_form(std::vector<std::vector<BigInt>> m) {
  SmithResult r;
  size_t width = m.empty() ? 0 : m[0].size();
  for (const auto& row : m)
    if (row.size() != width) throw StructuralError("ragged matrix");
  smith_reduce(m, r);
  return r;
}

SmithResult smith_normal_form(const IMat& m) {
  std::vector<std::vector<BigInt>> big(static_cast<size_t>(m.rows),
                                       std::vector<BigInt>(static_cast<size_t>(m.cols)));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) big[i][j] = m.at(i, j);
  SmithResult r;
  smith_reduce(big, r);
  return r;
}

std::string HomologyGroup::str() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

HomologyGroup homology(const FiniteQuandle& q, int n, ChainTheory theory,
                       const HomologyOptions& opts) {
  if (n < 0) throw StructuralError("negative degree");
  if (n > opts.degree_bound) throw CapacityError("degree exceeds the configured bound");

  HomologyGroup h;
  const long long dim_n = chain_dim(q, n, theory);

  long long rank_dn = 0;  // rank of the boundary leaving degree n
  if (n >= 1) {
    SmithResult s = smith_normal_form(boundary_matrix(q, n, theory, opts));
    rank_dn = s.rank;
  }

  if (n + 1 > opts.degree_bound) throw CapacityError("degree exceeds the configured bound");
  SmithResult s_in = smith_normal_form(boundary_matrix(q, n + 1, theory, opts));

  h.free_rank = dim_n - rank_dn - s_in.rank;
  for (const auto& f : s_in.factors)
    if (f > 1) h.torsion.push_back(f);
  return h;
}

}  // namespace qmon
