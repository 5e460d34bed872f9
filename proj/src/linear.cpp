#include "qmon/linear.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "qmon/errors.hpp"

namespace qmon {

BigInt ring_norm(const RingSpec& ring, BigInt v) {
  if (!ring.finite()) return v;
  v %= ring.modulus;
  if (v < 0) v += ring.modulus;
  return v;
}

RVec vec_norm(const RingSpec& ring, RVec v) {
  for (auto& c : v) c = ring_norm(ring, std::move(c));
  return v;
}

RVec vec_add(const RingSpec& ring, const RVec& a, const RVec& b) {
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = ring_norm(ring, a[i] + b[i]);
  return r;
}

RVec vec_sub(const RingSpec& ring, const RVec& a, const RVec& b) {
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = ring_norm(ring, a[i] - b[i]);
  return r;
}

RVec vec_neg(const RingSpec& ring, const RVec& a) {
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = ring_norm(ring, -a[i]);
  return r;
}

RVec vec_scaled_add(const RingSpec& ring, const RVec& a, const BigInt& c, const RVec& b) {
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = ring_norm(ring, a[i] + c * b[i]);
  return r;
}

RVec mat_apply(const RingSpec& ring, const RMat& m, const RVec& v) {
  RVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    BigInt acc = 0;
    for (size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
    r[i] = ring_norm(ring, acc);
  }
  return r;
}

std::string vec_str(const RVec& v) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  out << ')';
  return out.str();
}

static void require_square(const RMat& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw StructuralError("matrix is not square");
}

BigInt mat_det(const RingSpec& ring, const RMat& m) {
  require_square(m);
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  if (n == 1) return ring_norm(ring, m[0][0]);
  BigInt det = 0;
  // cofactor expansion along the first row; dimensions stay small here
  for (int j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    RMat minor(n - 1, RVec(n - 1));
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c)
        if (c != j) minor[r - 1][cc++] = m[r][c];
    }
    const BigInt cof = m[0][j] * mat_det({}, minor);
    det += (j % 2 == 0) ? cof : -cof;
  }
  return ring_norm(ring, det);
}

static BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = a % m, r = m, old_s = 1, s = 0;
  if (old_r < 0) old_r += m;
  while (r != 0) {
    const BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw StructuralError("element is not a unit");
  old_s %= m;
  if (old_s < 0) old_s += m;
  return old_s;
}

RMat mat_inverse(const RingSpec& ring, const RMat& m) {
  require_square(m);
  const int n = static_cast<int>(m.size());
  const BigInt det = mat_det(ring, m);
  BigInt det_inv;
  if (!ring.finite()) {
    if (det != 1 && det != -1)
      throw StructuralError("matrix is not invertible over the integers");
    det_inv = det;  // 1/det == det when det is +-1
  } else {
    if (gcd(ring_norm(ring, det), BigInt(ring.modulus)) != 1)
      throw StructuralError("matrix determinant is not a unit mod " +
                            std::to_string(ring.modulus));
    det_inv = mod_inverse(det, BigInt(ring.modulus));
  }
  RMat adj(n, RVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RMat minor(n - 1, RVec(n - 1));
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[rr][cc++] = m[r][c];
        }
        ++rr;
      }
      BigInt cof = mat_det({}, minor);
      if ((i + j) % 2) cof = -cof;
      adj[j][i] = ring_norm(ring, cof * det_inv);
    }
  return adj;
}

AlternatingForm AlternatingForm::make(RingSpec ring, RMat mat) {
  require_square(mat);
  AlternatingForm f;
  f.ring = ring;
  f.dim = static_cast<int>(mat.size());
  for (auto& row : mat)
    for (auto& v : row) v = ring_norm(ring, std::move(v));
  for (int i = 0; i < f.dim; ++i) {
    if (mat[i][i] != 0) throw StructuralError("form diagonal must vanish");
    for (int j = 0; j < f.dim; ++j)
      if (ring_norm(ring, mat[i][j] + mat[j][i]) != 0)
        throw StructuralError("form must be antisymmetric");
  }
  f.mat = std::move(mat);
  return f;
}

BigInt AlternatingForm::pair(const RVec& x, const RVec& y) const {
  BigInt acc = 0;
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) acc += x[i] * mat[i][j] * y[j];
  }
  return ring_norm(ring, acc);
}

AlternatingForm symplectic_form(int genus, RingSpec ring) {
  if (genus < 1) throw StructuralError("genus must be positive");
  const int n = 2 * genus;
  RMat mat(n, RVec(n, 0));
  for (int g = 0; g < genus; ++g) {
    mat[2 * g][2 * g + 1] = 1;
    mat[2 * g + 1][2 * g] = ring_norm(ring, BigInt(-1));
  }
  return AlternatingForm::make(ring, std::move(mat));
}

RVec alternating_rhd(const AlternatingForm& f, const RVec& x, const RVec& y) {
  return vec_scaled_add(f.ring, x, f.pair(x, y), y);
}

RVec alternating_unrhd(const AlternatingForm& f, const RVec& x, const RVec& y) {
  return vec_scaled_add(f.ring, x, -f.pair(x, y), y);
}

AlexanderQuandle AlexanderQuandle::make(RingSpec ring, RMat t) {
  require_square(t);
  AlexanderQuandle a;
  a.ring = ring;
  a.dim = static_cast<int>(t.size());
  a.t_inv = mat_inverse(ring, t);  // throws unless the determinant is a unit
  for (auto& row : t)
    for (auto& v : row) v = ring_norm(ring, std::move(v));
  a.t = std::move(t);
  return a;
}

RVec alexander_rhd(const AlexanderQuandle& a, const RVec& x, const RVec& y) {
  return vec_add(a.ring, mat_apply(a.ring, a.t, vec_sub(a.ring, x, y)), y);
}

RVec alexander_unrhd(const AlexanderQuandle& a, const RVec& x, const RVec& y) {
  return vec_add(a.ring, mat_apply(a.ring, a.t_inv, vec_sub(a.ring, x, y)), y);
}

RVec negation_class_rep(const RingSpec& ring, RVec v) {
  v = vec_norm(ring, std::move(v));
  const RVec neg = vec_neg(ring, v);
  if (!ring.finite()) {
    for (const auto& c : v) {
      if (c > 0) return v;
      if (c < 0) return neg;
    }
    return v;  // zero vector
  }
  return neg < v ? neg : v;
}

std::vector<RVec> all_vectors(const RingSpec& ring, int dim) {
  if (!ring.finite()) throw CapacityError("cannot enumerate vectors over the integers");
  std::vector<RVec> out;
  RVec v(dim, 0);
  while (true) {
    out.push_back(v);
    int i = dim - 1;
    while (i >= 0 && v[i] == ring.modulus - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  if (dim == 0) out.assign(1, RVec{});
  return out;
}

static FiniteQuandle table_from_op(const RingSpec& ring, int dim,
                                   const std::function<RVec(const RVec&, const RVec&)>& op) {
  const auto vecs = all_vectors(ring, dim);
  const int n = static_cast<int>(vecs.size());
  if (static_cast<long long>(n) * n > 100000000LL)
    throw CapacityError("carrier too large to tabulate");
  std::map<RVec, int> index;
  for (int i = 0; i < n; ++i) index[vecs[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = vec_str(vecs[i]);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x][y] = index.at(op(vecs[x], vecs[y]));
  return FiniteQuandle::from_rhd(table, std::move(labels));
}

FiniteQuandle alexander_table(const AlexanderQuandle& a) {
  return table_from_op(a.ring, a.dim,
                       [&](const RVec& x, const RVec& y) { return alexander_rhd(a, x, y); });
}

FiniteQuandle alternating_table(const AlternatingForm& f) {
  return table_from_op(f.ring, f.dim,
                       [&](const RVec& x, const RVec& y) { return alternating_rhd(f, x, y); });
}

FiniteQuandle reduced_alternating_table(const AlternatingForm& f) {
  if (!f.ring.finite()) throw CapacityError("cannot tabulate over the integers");
  std::vector<RVec> reps;
  std::map<RVec, int> index;
  for (const auto& v : all_vectors(f.ring, f.dim)) {
    RVec rep = negation_class_rep(f.ring, v);
    if (index.emplace(rep, static_cast<int>(reps.size())).second) reps.push_back(rep);
  }
  const int n = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "+-" + vec_str(reps[i]);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[x][y] = index.at(negation_class_rep(f.ring, alternating_rhd(f, reps[x], reps[y])));
  return FiniteQuandle::from_rhd(table, std::move(labels));
}

}  // namespace qmon
