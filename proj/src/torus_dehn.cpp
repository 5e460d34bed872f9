#include "qmon/torus_dehn.hpp"

#include <cctype>
#include <sstream>
#include <tuple>

#include "qmon/errors.hpp"

namespace qmon {

Slope Slope::contractible() {
  Slope s;
  s.contractible_ = true;
  s.x_ = 0;
  s.y_ = 0;
  return s;
}

Slope Slope::make(BigInt x, BigInt y) {
  if (gcd(abs(x), abs(y)) != 1)
    throw StructuralError("slope coordinates must be coprime");
  if (x < 0 || (x == 0 && y < 0)) {
    x = -x;
    y = -y;
  }
  Slope s;
  s.x_ = std::move(x);
  s.y_ = std::move(y);
  return s;
}

std::string Slope::str() const {
  if (contractible_) return "I";
  std::ostringstream out;
  out << y_ << '/' << x_;
  return out.str();
}

Slope Slope::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "I") return contractible();
  const size_t slash = t.find('/');
  if (slash == std::string::npos) throw StructuralError("expected 'y/x' or 'I'");
  try {
    const BigInt y(t.substr(0, slash));
    const BigInt x(t.substr(slash + 1));
    return make(x, y);
  } catch (const std::runtime_error& e) {
    throw StructuralError(std::string("bad slope: ") + e.what());
  }
}

bool Slope::operator<(const Slope& o) const {
  return std::tie(contractible_, x_, y_) < std::tie(o.contractible_, o.x_, o.y_);
}

std::string SL2::str() const {
  std::ostringstream out;
  out << "[[" << a << ',' << b << "],[" << c << ',' << d << "]]";
  return out.str();
}

SL2 sl2_mul(const SL2& m, const SL2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

SL2 sl2_inv(const SL2& m) {
  if (m.det() != 1) throw StructuralError("matrix must have determinant 1");
  return {m.d, -m.b, -m.c, m.a};
}

SL2 sl2_pow(const SL2& m, int e) {
  const SL2 base = e < 0 ? sl2_inv(m) : m;
  SL2 r = SL2::identity();
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r = sl2_mul(r, base);
  return r;
}

Slope slope_rhd(const Slope& p, const Slope& q) {
  if (p.is_contractible()) return p;
  if (q.is_contractible()) return p;
  const BigInt &u = p.x(), &v = p.y(), &x = q.x(), &y = q.y();
  return Slope::make(u + u * x * y - v * x * x, v - v * x * y + u * y * y);
}

Slope slope_unrhd(const Slope& p, const Slope& q) {
  if (p.is_contractible()) return p;
  if (q.is_contractible()) return p;
  const BigInt &u = p.x(), &v = p.y(), &x = q.x(), &y = q.y();
  return Slope::make(u - u * x * y + v * x * x, v + v * x * y - u * y * y);
}

SL2 twist_matrix(const Slope& q) {
  if (q.is_contractible()) return SL2::identity();
  const BigInt &x = q.x(), &y = q.y();
  return {1 - x * y, x * x, -y * y, 1 + x * y};
}

std::optional<Slope> slope_from_matrix(const SL2& m) {
  if (m == SL2::identity()) return Slope::contractible();
  if (m.det() != 1 || m.trace() != 2) return std::nullopt;
  BigInt x, y;
  if (!is_perfect_square(m.b, &x) || !is_perfect_square(-m.c, &y)) return std::nullopt;
  // diagonal fixes the sign of x*y: a == 1 - x*y
  const BigInt xy = 1 - m.a;
  const BigInt neg_y = -y;
  for (const BigInt& ys : {y, neg_y}) {
    if (x * ys != xy) continue;
    if (gcd(abs(x), abs(ys)) != 1) continue;
    const Slope s = Slope::make(x, ys);
    if (twist_matrix(s) == m) return s;
  }
  return std::nullopt;
}

Slope matrix_act(const Slope& q, const SL2& m) {
  if (q.is_contractible()) return q;
  const BigInt nx = m.a * q.x() + m.b * q.y();
  const BigInt ny = m.c * q.x() + m.d * q.y();
  if (gcd(abs(nx), abs(ny)) != 1)
    throw StructuralError("matrix image of a coprime pair is not coprime");
  return Slope::make(nx, ny);
}

std::vector<Slope> slopes_up_to_height(long long h, bool include_contractible) {
  std::vector<Slope> out;
  out.push_back(Slope::make(0, 1));
  for (long long x = 1; x <= h; ++x)
    for (long long y = -h; y <= h; ++y)
      if (gcd(BigInt(x), abs(BigInt(y))) == 1) out.push_back(Slope::make(x, y));
  if (include_contractible) out.push_back(Slope::contractible());
  return out;
}

RVec curve_class(const Slope& s) {
  if (s.is_contractible()) return {0, 0};
  return negation_class_rep({}, {s.x(), s.y()});
}

RVec class_rhd(const RVec& a, const RVec& b) {
  static const AlternatingForm form = symplectic_form(1, {});
  return negation_class_rep({}, alternating_rhd(form, a, b));
}

RVec class_unrhd(const RVec& a, const RVec& b) {
  static const AlternatingForm form = symplectic_form(1, {});
  return negation_class_rep({}, alternating_unrhd(form, a, b));
}

}  // namespace qmon
