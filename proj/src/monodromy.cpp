#include "qmon/monodromy.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qmon/errors.hpp"
#include "qmon/free_quandle.hpp"

namespace qmon {

const char* base_name(BaseSpace b) { return b == BaseSpace::Disk ? "disk" : "sphere"; }

const char* mode_name(MonodromyMode m) {
  switch (m) {
    case MonodromyMode::Cover: return "cover";
    case MonodromyMode::Braid: return "braid";
    case MonodromyMode::Lefschetz: return "lefschetz";
  }
  return "?";
}

void ValidationReport::add(const std::string& name, bool ok, const std::string& detail) {
  checks.push_back({name, ok, detail});
  if (!ok) valid = false;
}

size_t MonodromyTuple::length() const {
  switch (mode) {
    case MonodromyMode::Cover: return cover_entries.size();
    case MonodromyMode::Braid: return braid_entries.size();
    case MonodromyMode::Lefschetz: return lefschetz_entries.size();
  }
  return 0;
}

Permutation cover_product(int sheets, const std::vector<Permutation>& entries) {
  Permutation p(sheets);
  for (const auto& e : entries) {
    if (e.degree() != sheets) throw StructuralError("cover entry degree mismatch");
    p = mul(p, e);
  }
  return p;
}

Braid braid_product(int strands, const std::vector<LCord>& entries) {
  Braid b = Braid::identity(strands);
  for (const auto& e : entries) {
    if (e.cord.braid.strands != strands) throw StructuralError("cord strand mismatch");
    b = b_mul(b, lcord_augment(e));
  }
  return b;
}

SL2 lefschetz_product(const std::vector<SignedSlope>& entries) {
  // entries are applied left to right, so each new matrix multiplies on the
  // left of the accumulated one
  SL2 p = SL2::identity();
  for (const auto& e : entries) {
    SL2 m = twist_matrix(e.slope);
    if (e.sign == -1) m = sl2_inv(m);
    p = sl2_mul(m, p);
  }
  return p;
}

ValidationReport validate_cover(int sheets, BaseSpace base,
                                const std::vector<Permutation>& entries,
                                const ValidateOptions& opts) {
  if (sheets < 1) throw StructuralError("cover needs at least one sheet");
  for (const auto& e : entries)
    if (e.degree() != sheets) throw StructuralError("cover entry degree mismatch");

  ValidationReport r;

  int bad_cyclic = -1;
  for (size_t i = 0; i < entries.size(); ++i)
    if (!entries[i].is_single_cycle()) { bad_cyclic = static_cast<int>(i); break; }
  r.add("entries move a single cycle", bad_cyclic < 0,
        bad_cyclic < 0 ? "" : "entry " + std::to_string(bad_cyclic) + " is " + entries[bad_cyclic].str());

  if (opts.simple) {
    int bad = -1;
    for (size_t i = 0; i < entries.size(); ++i)
      if (!entries[i].is_transposition()) { bad = static_cast<int>(i); break; }
    r.add("entries are transpositions", bad < 0,
          bad < 0 ? "" : "entry " + std::to_string(bad) + " is " + entries[bad].str());
  }

  if (base == BaseSpace::Sphere) {
    Permutation p = cover_product(sheets, entries);
    r.add("ordered product is trivial", p.is_identity(),
          p.is_identity() ? "" : "product is " + p.str());
  }

  if (opts.require_connected) {
    std::vector<int> parent(sheets);
    for (int i = 0; i < sheets; ++i) parent[i] = i;
    auto find = [&](int a) {
      while (parent[a] != a) { parent[a] = parent[parent[a]]; a = parent[a]; }
      return a;
    };
    for (const auto& e : entries)
      for (int i = 0; i < sheets; ++i) {
        int ra = find(i), rb = find(e.apply(i));
        if (ra != rb) parent[ra] = rb;
      }
    int classes = 0;
    for (int i = 0; i < sheets; ++i)
      if (find(i) == i) ++classes;
    r.add("entries act transitively", classes <= 1,
          classes <= 1 ? "" : std::to_string(classes) + " sheet orbits");
  }

  return r;
}

ValidationReport validate_braid_monodromy(int strands, std::optional<int> k,
                                          const std::vector<LCord>& entries,
                                          const ValidateOptions& opts) {
  if (strands < 2) throw StructuralError("braid monodromy needs at least two strands");
  for (const auto& e : entries) {
    const Cord& c = e.cord;
    if (c.braid.strands != strands || c.conjugator.strands != strands)
      throw StructuralError("cord strand mismatch");
    if (c.gen < 1 || c.gen >= strands) throw StructuralError("cord generator out of range");
    if (c.chirality != 1 && c.chirality != -1) throw StructuralError("cord chirality must be +-1");
    if (e.label == 0 || e.label > 3 || e.label < -3)
      throw StructuralError("cord label out of range (nonzero, magnitude at most 3)");
    Braid expected = b_mul(b_mul(b_inv(c.conjugator),
                                 b_pow(Braid::make(strands, {c.gen}), c.chirality)),
                           c.conjugator);
    if (!braid_eq(c.braid, expected)) throw StructuralError("cord witness does not match its braid");
  }

  ValidationReport r;

  int neg_cord = -1;
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].cord.chirality != 1) { neg_cord = static_cast<int>(i); break; }
  r.add("entries are conjugates of positive generators", neg_cord < 0,
        neg_cord < 0 ? "" : "entry " + std::to_string(neg_cord) + " has negative chirality");

  int neg_label = -1;
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].label < 0) { neg_label = static_cast<int>(i); break; }
  r.add("labels are positive", neg_label < 0,
        neg_label < 0 ? "" : "entry " + std::to_string(neg_label) + " has label " +
                                 std::to_string(entries[neg_label].label));

  if (k.has_value()) {
    Braid prod = braid_product(strands, entries);
    Braid target = b_pow(full_twist(strands), *k);
    bool ok = braid_eq(prod, target);
    r.add("ordered product is the full twist to the power " + std::to_string(*k), ok,
          ok ? "" : "product has " + std::to_string(prod.word.size()) + " letters");
  }

  if (opts.projective)
    r.add("closing exponent is 1", k.has_value() && *k == 1,
          k.has_value() ? "closing exponent is " + std::to_string(*k) : "closing exponent missing");

  return r;
}

ValidationReport validate_lefschetz(BaseSpace base,
                                    const std::vector<SignedSlope>& entries,
                                    const ValidateOptions& opts) {
  for (const auto& e : entries) {
    if (e.slope.is_contractible())
      throw StructuralError("lefschetz entry must be a non-contractible curve");
    if (e.sign != 1 && e.sign != -1) throw StructuralError("twist sign must be +-1");
  }

  ValidationReport r;

  if (!opts.achiral) {
    int neg = -1;
    for (size_t i = 0; i < entries.size(); ++i)
      if (entries[i].sign != 1) { neg = static_cast<int>(i); break; }
    r.add("twists are positive", neg < 0,
          neg < 0 ? "" : "entry " + std::to_string(neg) + " is negative");
  }

  if (base == BaseSpace::Sphere) {
    SL2 p = lefschetz_product(entries);
    bool ok = p == SL2::identity();
    r.add("ordered product is trivial", ok, ok ? "" : "product is " + p.str());
  }

  return r;
}

ValidationReport validate(const MonodromyTuple& t, const ValidateOptions& opts) {
  switch (t.mode) {
    case MonodromyMode::Cover:
      if (!t.braid_entries.empty() || !t.lefschetz_entries.empty())
        throw StructuralError("cover tuple carries foreign entries");
      return validate_cover(t.d_or_strands, t.base, t.cover_entries, opts);
    case MonodromyMode::Braid:
      if (!t.cover_entries.empty() || !t.lefschetz_entries.empty())
        throw StructuralError("braid tuple carries foreign entries");
      return validate_braid_monodromy(t.d_or_strands, t.k, t.braid_entries, opts);
    case MonodromyMode::Lefschetz:
      if (!t.cover_entries.empty() || !t.braid_entries.empty())
        throw StructuralError("lefschetz tuple carries foreign entries");
      return validate_lefschetz(t.base, t.lefschetz_entries, opts);
  }
  throw StructuralError("unknown mode");
}

std::vector<int> hurwitz_move(const FiniteQuandle& q, std::vector<int> t, int i, bool right) {
  if (i < 0 || i + 1 >= static_cast<int>(t.size()))
    throw StructuralError("move position out of range");
  int a = t[i], b = t[i + 1];
  if (right) {
    t[i] = b;
    t[i + 1] = q.rhd(a, b);
  } else {
    t[i] = q.unrhd(b, a);
    t[i + 1] = a;
  }
  return t;
}

IndexOrbit hurwitz_orbit(const FiniteQuandle& q, const std::vector<int>& start,
                         const OrbitOptions& opts) {
  for (int x : start)
    if (x < 0 || x >= q.size()) throw StructuralError("tuple entry out of range");

  IndexOrbit out;
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  seen.insert(start);
  queue.push_back(start);
  const int m = static_cast<int>(start.size());

  auto push = [&](std::vector<int>&& t) {
    if (seen.size() >= opts.max_size) {
      if (!seen.count(t)) out.truncated = true;
      return;
    }
    if (seen.insert(t).second) queue.push_back(std::move(t));
  };

  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    for (int i = 0; i + 1 < m; ++i) {
      push(hurwitz_move(q, cur, i, true));
      push(hurwitz_move(q, cur, i, false));
    }
    if (opts.cyclic && m > 1) {
      std::vector<int> rot(cur.begin() + 1, cur.end());
      rot.push_back(cur[0]);
      push(std::move(rot));
    }
    if (opts.conjugation) {
      for (int g = 0; g < q.size(); ++g) {
        std::vector<int> im(cur.size());
        for (size_t j = 0; j < cur.size(); ++j) im[j] = q.rhd(cur[j], g);
        push(std::move(im));
      }
    }
  }

  out.members.assign(seen.begin(), seen.end());
  return out;
}

std::vector<SignedSlope> hurwitz_move_lefschetz(std::vector<SignedSlope> t, int i, bool right) {
  if (i < 0 || i + 1 >= static_cast<int>(t.size()))
    throw StructuralError("move position out of range");
  SignedSlope a = t[i], b = t[i + 1];
  if (right) {
    // a negative twist acts like |>, a positive one like <|; this is what
    // keeps the ordered matrix product fixed
    Slope moved = (b.sign == -1) ? slope_rhd(a.slope, b.slope) : slope_unrhd(a.slope, b.slope);
    t[i] = b;
    t[i + 1] = {moved, a.sign};
  } else {
    Slope moved = (a.sign == -1) ? slope_unrhd(b.slope, a.slope) : slope_rhd(b.slope, a.slope);
    t[i] = {moved, b.sign};
    t[i + 1] = a;
  }
  return t;
}

std::vector<LCord> hurwitz_move_braid(std::vector<LCord> t, int i, bool right) {
  if (i < 0 || i + 1 >= static_cast<int>(t.size()))
    throw StructuralError("move position out of range");
  LCord a = t[i], b = t[i + 1];
  if (right) {
    t[i] = b;
    t[i + 1] = lcord_rhd(a, b);
  } else {
    t[i] = lcord_unrhd(b, a);
    t[i + 1] = a;
  }
  return t;
}

namespace {

std::string slope_tuple_key(const std::vector<SignedSlope>& t) {
  std::ostringstream os;
  for (const auto& e : t) os << e.slope.str() << (e.sign < 0 ? '-' : '+') << '|';
  return os.str();
}

std::string lcord_key(const LCord& c) {
  std::ostringstream os;
  os << c.label << '|';
  for (const auto& w : strand_action(c.cord.braid)) os << fw_str(w) << ';';
  return os.str();
}

std::string lcord_tuple_key(const std::vector<LCord>& t) {
  std::ostringstream os;
  for (const auto& e : t) os << lcord_key(e) << '#';
  return os.str();
}

}  // namespace

SlopeOrbit hurwitz_orbit_lefschetz(const std::vector<SignedSlope>& start, size_t max_size) {
  SlopeOrbit out;
  std::set<std::string> seen;
  std::deque<std::vector<SignedSlope>> queue;
  seen.insert(slope_tuple_key(start));
  queue.push_back(start);
  out.members.push_back(start);
  const int m = static_cast<int>(start.size());

  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (int i = 0; i + 1 < m; ++i)
      for (bool right : {true, false}) {
        auto next = hurwitz_move_lefschetz(cur, i, right);
        std::string key = slope_tuple_key(next);
        if (seen.count(key)) continue;
        if (seen.size() >= max_size) { out.truncated = true; continue; }
        seen.insert(key);
        out.members.push_back(next);
        queue.push_back(std::move(next));
      }
  }
  return out;
}

LCordOrbit hurwitz_orbit_braid(const std::vector<LCord>& start, size_t max_size) {
  LCordOrbit out;
  std::set<std::string> seen;
  std::deque<std::vector<LCord>> queue;
  seen.insert(lcord_tuple_key(start));
  queue.push_back(start);
  out.members.push_back(start);
  const int m = static_cast<int>(start.size());

  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (int i = 0; i + 1 < m; ++i)
      for (bool right : {true, false}) {
        auto next = hurwitz_move_braid(cur, i, right);
        std::string key = lcord_tuple_key(next);
        if (seen.count(key)) continue;
        if (seen.size() >= max_size) { out.truncated = true; continue; }
        seen.insert(key);
        out.members.push_back(next);
        queue.push_back(std::move(next));
      }
  }
  return out;
}

namespace {

constexpr long long kLeafBudget = 20000000;  // DFS leaves before giving up

long long checked_pow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > kLeafBudget) throw CapacityError("assignment count too large to enumerate");
    r *= base;
  }
  return r;
}

}  // namespace

long long count_cover_assignments(const PermSetQuandle& target, int m, BaseSpace base,
                                  bool require_connected) {
  if (m < 0) throw StructuralError("negative tuple length");
  const long long n = static_cast<long long>(target.elements.size());
  if (base == BaseSpace::Disk && !require_connected) {
    long long r = 1;
    for (int i = 0; i < m; ++i) {
      if (n != 0 && r > (1LL << 62) / (n == 0 ? 1 : n))
        throw CapacityError("assignment count overflows");
      r *= n;
    }
    return r;
  }
  if (n == 0) return m == 0 ? (base == BaseSpace::Disk ? 1 : 1) : 0;
  checked_pow(n, m);  // capacity guard

  const int d = target.elements[0].degree();
  long long count = 0;
  std::vector<int> choice(m, 0);

  // running products, one per DFS depth
  std::vector<Permutation> prefix(m + 1, Permutation(d));

  auto connected = [&]() {
    std::vector<int> parent(d);
    for (int i = 0; i < d; ++i) parent[i] = i;
    auto find = [&](int a) {
      while (parent[a] != a) { parent[a] = parent[parent[a]]; a = parent[a]; }
      return a;
    };
    for (int j = 0; j < m; ++j) {
      const Permutation& p = target.elements[choice[j]];
      for (int i = 0; i < d; ++i) {
        int ra = find(i), rb = find(p.apply(i));
        if (ra != rb) parent[ra] = rb;
      }
    }
    for (int i = 1; i < d; ++i)
      if (find(i) != find(0)) return false;
    return true;
  };

  // iterative DFS over the m slots
  int depth = 0;
  std::vector<int> next(m, 0);
  while (depth >= 0) {
    if (depth == m) {
      bool ok = true;
      if (base == BaseSpace::Sphere) ok = prefix[m].is_identity();
      if (ok && require_connected) ok = connected();
      if (ok) ++count;
      --depth;
      continue;
    }
    if (next[depth] == n) {
      next[depth] = 0;
      --depth;
      continue;
    }
    choice[depth] = next[depth]++;
    prefix[depth + 1] = mul(prefix[depth], target.elements[choice[depth]]);
    ++depth;
  }
  return count;
}

long long count_inner_assignments(const FiniteQuandle& target, int m, BaseSpace base) {
  if (m < 0) throw StructuralError("negative tuple length");
  return count_inner_assignments_signed(target, std::vector<int>(m, 1), base);
}

long long count_inner_assignments_signed(const FiniteQuandle& target,
                                         const std::vector<int>& signs, BaseSpace base) {
  const int m = static_cast<int>(signs.size());
  for (int s : signs)
    if (s != 1 && s != -1) throw StructuralError("signs must be +-1");
  const long long n = target.size();
  if (base == BaseSpace::Disk) {
    long long r = 1;
    for (int i = 0; i < m; ++i) {
      if (n != 0 && r > (1LL << 62) / (n == 0 ? 1 : n))
        throw CapacityError("assignment count overflows");
      r *= n;
    }
    return r;
  }
  if (n == 0) return m == 0 ? 1 : 0;
  if (checked_pow(n, m) * n > kLeafBudget)
    throw CapacityError("assignment count too large to enumerate");

  // over the sphere the composite right translation must be the identity map
  long long count = 0;
  std::vector<std::vector<int>> prefix(m + 1, std::vector<int>(n));
  for (int i = 0; i < n; ++i) prefix[0][i] = i;

  int depth = 0;
  std::vector<int> next(m, 0);
  while (depth >= 0) {
    if (depth == m) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = prefix[m][i] == i;
      if (ok) ++count;
      --depth;
      continue;
    }
    if (next[depth] == static_cast<int>(n)) {
      next[depth] = 0;
      --depth;
      continue;
    }
    const int g = next[depth]++;
    for (int i = 0; i < n; ++i)
      prefix[depth + 1][i] = signs[depth] == 1 ? target.rhd(prefix[depth][i], g)
                                               : target.unrhd(prefix[depth][i], g);
    ++depth;
  }
  return count;
}

int evaluate_coloring(const FiniteQuandle& q, const std::vector<int>& tuple,
                      const FreeQuandleElement& e) {
  if (e.gen < 1 || e.gen > static_cast<int>(tuple.size()))
    throw StructuralError("generator index outside the tuple");
  for (int x : tuple)
    if (x < 0 || x >= q.size()) throw StructuralError("tuple entry out of range");
  int x = tuple[e.gen - 1];
  for (int letter : e.conj) {
    int idx = letter > 0 ? letter : -letter;
    if (idx < 1 || idx > static_cast<int>(tuple.size()))
      throw StructuralError("conjugator letter outside the tuple");
    int y = tuple[idx - 1];
    x = letter > 0 ? q.rhd(x, y) : q.unrhd(x, y);
  }
  return x;
}

MonodromyTuple tuple_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw StructuralError(std::string("bad json: ") + ex.what());
  }
  try {
    if (!j.is_object()) throw StructuralError("tuple file must be a json object");
    if (j.contains("format") && j["format"].get<int>() != 1)
      throw StructuralError("unsupported format version");

    MonodromyTuple t;
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "cover") t.mode = MonodromyMode::Cover;
    else if (mode == "braid") t.mode = MonodromyMode::Braid;
    else if (mode == "lefschetz") t.mode = MonodromyMode::Lefschetz;
    else throw StructuralError("unknown mode: " + mode);

    std::string base = j.value("base", std::string("disk"));
    if (base == "disk") t.base = BaseSpace::Disk;
    else if (base == "sphere") t.base = BaseSpace::Sphere;
    else throw StructuralError("unknown base: " + base);

    t.d_or_strands = j.value("d_or_strands", 0);
    if (j.contains("k")) {
      if (t.mode != MonodromyMode::Braid)
        throw StructuralError("closing exponent only applies to braid tuples");
      t.k = j["k"].get<int>();
    }

    const auto& entries = j.at("entries");
    if (!entries.is_array()) throw StructuralError("entries must be an array");

    switch (t.mode) {
      case MonodromyMode::Cover:
        if (t.d_or_strands < 1) throw StructuralError("cover needs at least one sheet");
        for (const auto& e : entries)
          t.cover_entries.push_back(Permutation::parse(e.get<std::string>(), t.d_or_strands));
        break;
      case MonodromyMode::Braid: {
        if (t.d_or_strands < 2) throw StructuralError("braid needs at least two strands");
        for (const auto& e : entries) {
          if (!e.is_object()) throw StructuralError("braid entry must be an object");
          Braid w = braid_parse(e.at("conjugator").get<std::string>(), t.d_or_strands);
          int gen = e.at("gen").get<int>();
          int chi = e.value("chirality", 1);
          int label = e.at("label").get<int>();
          if (label == 0 || label > 3 || label < -3)
            throw StructuralError("cord label out of range (nonzero, magnitude at most 3)");
          t.braid_entries.push_back({Cord::make(t.d_or_strands, w, gen, chi), label});
        }
        break;
      }
      case MonodromyMode::Lefschetz:
        for (const auto& e : entries) {
          if (!e.is_object()) throw StructuralError("lefschetz entry must be an object");
          Slope s = Slope::parse(e.at("slope").get<std::string>());
          int sign = e.value("sign", 1);
          t.lefschetz_entries.push_back({s, sign});
        }
        break;
    }
    return t;
  } catch (const nlohmann::json::exception& ex) {
    throw StructuralError(std::string("bad tuple json: ") + ex.what());
  }
}

MonodromyTuple tuple_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return tuple_from_json(buf.str());
}

std::string tuple_to_json(const MonodromyTuple& t) {
  nlohmann::json j;
  j["format"] = 1;
  j["mode"] = mode_name(t.mode);
  j["base"] = base_name(t.base);
  j["d_or_strands"] = t.d_or_strands;
  if (t.k.has_value()) j["k"] = *t.k;
  nlohmann::json entries = nlohmann::json::array();
  switch (t.mode) {
    case MonodromyMode::Cover:
      for (const auto& e : t.cover_entries) entries.push_back(e.str());
      break;
    case MonodromyMode::Braid:
      for (const auto& e : t.braid_entries) {
        nlohmann::json o;
        o["conjugator"] = braid_str(e.cord.conjugator);
        o["gen"] = e.cord.gen;
        if (e.cord.chirality != 1) o["chirality"] = e.cord.chirality;
        o["label"] = e.label;
        entries.push_back(o);
      }
      break;
    case MonodromyMode::Lefschetz:
      for (const auto& e : t.lefschetz_entries) {
        nlohmann::json o;
        o["slope"] = e.slope.str();
        if (e.sign != 1) o["sign"] = e.sign;
        entries.push_back(o);
      }
      break;
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

}  // namespace qmon
