#include "qmon/finite_quandle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qmon/errors.hpp"

namespace qmon {

const char* law_name(Law law) {
  switch (law) {
    case Law::Idempotence: return "idempotence";
    case Law::RightInverse: return "right-inverse";
    case Law::SelfDistributivity: return "self-distributivity";
    case Law::AugmentationFix: return "augmentation-fix";
    case Law::AugmentationConj: return "augmentation-conjugation";
    case Law::ActionHom: return "action-homomorphism";
  }
  return "?";
}

void AxiomReport::add(Law law, int a, int b, int c) {
  passed = false;
  if (static_cast<int>(violations.size()) >= kMaxViolations) {
    truncated = true;
    return;
  }
  violations.push_back({law, {a, b, c}});
}

static void require_rectangular(int n, const std::vector<std::vector<int>>& table) {
  if (static_cast<int>(table.size()) != n) throw StructuralError("table has wrong row count");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw StructuralError("table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw StructuralError("table entry out of range");
  }
}

FiniteQuandle FiniteQuandle::from_rhd(const std::vector<std::vector<int>>& table,
                                      std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  require_rectangular(n, table);
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw StructuralError("label count does not match carrier size");
  FiniteQuandle q;
  q.n_ = n;
  q.rhd_.resize(static_cast<size_t>(n) * n);
  q.unrhd_.assign(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) q.rhd_[static_cast<size_t>(x) * n + y] = table[x][y];
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const int z = table[x][y];
      if (q.unrhd_[static_cast<size_t>(z) * n + y] != -1)
        throw StructuralError("column " + std::to_string(y) + " is not a bijection");
      q.unrhd_[static_cast<size_t>(z) * n + y] = x;
    }
  }
  q.labels_ = std::move(labels);
  return q;
}

std::string FiniteQuandle::label(int i) const {
  if (!labels_.empty()) return labels_[i];
  return std::to_string(i);
}

std::vector<std::vector<int>> FiniteQuandle::rhd_rows() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) rows[x][y] = rhd(x, y);
  return rows;
}

AxiomReport check_axioms(int n, const std::vector<std::vector<int>>& table) {
  require_rectangular(n, table);
  AxiomReport rep;
  for (int x = 0; x < n; ++x)
    if (table[x][x] != x) rep.add(Law::Idempotence, x);
  for (int y = 0; y < n; ++y) {
    std::vector<int> preimage(n, -1);
    for (int x = 0; x < n; ++x) {
      const int z = table[x][y];
      if (preimage[z] != -1)
        rep.add(Law::RightInverse, preimage[z], x, y);
      else
        preimage[z] = x;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = table[x][y];
      for (int z = 0; z < n; ++z)
        if (table[xy][z] != table[table[x][z]][table[y][z]])
          rep.add(Law::SelfDistributivity, x, y, z);
    }
  return rep;
}

AxiomReport check_axioms(const FiniteQuandle& q) {
  const int n = q.size();
  AxiomReport rep;
  for (int x = 0; x < n; ++x)
    if (q.rhd(x, x) != x) rep.add(Law::Idempotence, x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (q.unrhd(q.rhd(x, y), y) != x || q.rhd(q.unrhd(x, y), y) != x)
        rep.add(Law::RightInverse, x, y);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = q.rhd(x, y);
      for (int z = 0; z < n; ++z)
        if (q.rhd(xy, z) != q.rhd(q.rhd(x, z), q.rhd(y, z)))
          rep.add(Law::SelfDistributivity, x, y, z);
    }
  return rep;
}

bool is_hom(const FiniteQuandle& src, const FiniteQuandle& tgt, const QuandleHom& f) {
  if (static_cast<int>(f.size()) != src.size()) return false;
  for (int v : f)
    if (v < 0 || v >= tgt.size()) return false;
  for (int x = 0; x < src.size(); ++x)
    for (int y = 0; y < src.size(); ++y)
      if (f[src.rhd(x, y)] != tgt.rhd(f[x], f[y])) return false;
  return true;
}

std::vector<QuandleHom> enumerate_homs(const FiniteQuandle& src, const FiniteQuandle& tgt) {
  const int n = src.size(), m = tgt.size();
  std::vector<QuandleHom> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  if (m == 0) return out;

  // constraints[k]: pairs (x, y) with x, y, x|>y all <= k and one of them == k
  std::vector<std::vector<std::pair<int, int>>> constraints(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int z = src.rhd(x, y);
      const int k = std::max({x, y, z});
      constraints[k].push_back({x, y});
    }

  QuandleHom f(n, -1);
  std::vector<int> pos(n, 0);
  int k = 0;
  while (k >= 0) {
    if (pos[k] == m) {
      pos[k] = 0;
      --k;
      if (k >= 0) ++pos[k];
      continue;
    }
    f[k] = pos[k];
    bool ok = true;
    for (const auto& [x, y] : constraints[k])
      if (f[src.rhd(x, y)] != tgt.rhd(f[x], f[y])) {
        ok = false;
        break;
      }
    if (!ok) {
      ++pos[k];
      continue;
    }
    if (k == n - 1) {
      out.push_back(f);
      ++pos[k];
    } else {
      ++k;
    }
  }
  return out;
}

std::vector<int> subquandle_generated(const FiniteQuandle& q, const std::vector<int>& seed) {
  std::set<int> in;
  std::vector<int> work;
  for (int s : seed) {
    if (s < 0 || s >= q.size()) throw StructuralError("seed element out of range");
    if (in.insert(s).second) work.push_back(s);
  }
  while (!work.empty()) {
    const int x = work.back();
    work.pop_back();
    std::vector<int> snapshot(in.begin(), in.end());
    for (int y : snapshot) {
      for (int z : {q.rhd(x, y), q.unrhd(x, y), q.rhd(y, x), q.unrhd(y, x)})
        if (in.insert(z).second) work.push_back(z);
    }
  }
  return std::vector<int>(in.begin(), in.end());
}

FiniteQuandle achiral_double(const FiniteQuandle& q) {
  AxiomReport rep = check_axioms(q);
  if (!rep.passed) throw StructuralError("achiral double requires a quandle");
  const int n = q.size();
  std::vector<std::vector<int>> table(2 * n, std::vector<int>(2 * n));
  for (int x = 0; x < 2 * n; ++x) {
    const int xq = x % n, xs = x / n;  // xs: 0 = '+', 1 = '-'
    for (int y = 0; y < 2 * n; ++y) {
      const int yq = y % n, ys = y / n;
      const int r = ys == 1 ? q.rhd(xq, yq) : q.unrhd(xq, yq);
      table[x][y] = xs * n + r;
    }
  }
  std::vector<std::string> labels(2 * n);
  for (int x = 0; x < n; ++x) {
    labels[x] = q.label(x) + "+";
    labels[n + x] = q.label(x) + "-";
  }
  return FiniteQuandle::from_rhd(table, std::move(labels));
}

std::vector<int> orbit_ids(const FiniteQuandle& q) {
  const int n = q.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int a = find(x), b = find(q.rhd(x, y));
      if (a != b) parent[b] = a;
    }
  std::vector<int> ids(n), remap(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    const int r = find(x);
    if (remap[r] < 0) remap[r] = next++;
    ids[x] = remap[r];
  }
  return ids;
}

int orbit_count(const FiniteQuandle& q) {
  const auto ids = orbit_ids(q);
  return ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());
}

}  // namespace qmon
