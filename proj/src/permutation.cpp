#include "qmon/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "qmon/errors.hpp"

namespace qmon {

Permutation::Permutation(int degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int d = static_cast<int>(images.size());
  std::vector<char> seen(d, 0);
  for (int v : images) {
    if (v < 0 || v >= d || seen[v]) throw StructuralError("not a permutation");
    seen[v] = 1;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::parse(const std::string& text, int degree) {
  Permutation p(degree);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == 'e') {
    ++i;
    skip_ws();
    if (i != text.size()) throw StructuralError("trailing text after 'e'");
    return p;
  }
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') throw StructuralError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw StructuralError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw StructuralError("expected digit in cycle");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree) throw StructuralError("cycle letter out of range");
      cyc.push_back(v - 1);
    }
    for (size_t a = 0; a < cyc.size(); ++a)
      for (size_t b = a + 1; b < cyc.size(); ++b)
        if (cyc[a] == cyc[b]) throw StructuralError("repeated letter in cycle");
    // cycles multiply left-to-right, same as mul()
    Permutation c(degree);
    for (size_t a = 0; a < cyc.size(); ++a)
      c.img_[cyc[a]] = cyc[(a + 1) % cyc.size()];
    p = mul(p, c);
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Permutation::is_single_cycle() const {
  int first = -1, moved = 0;
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) {
      if (first < 0) first = i;
      ++moved;
    }
  if (first < 0) return false;
  int len = 0, cur = first;
  do {
    cur = img_[cur];
    ++len;
  } while (cur != first);
  return len == moved;
}

bool Permutation::is_transposition() const {
  int moved = 0;
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) ++moved;
  return moved == 2;
}

std::string Permutation::str() const {
  std::ostringstream out;
  std::vector<char> seen(degree(), 0);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    any = true;
    out << '(';
    int cur = i;
    bool head = true;
    do {
      if (!head) out << ' ';
      head = false;
      out << cur + 1;
      seen[cur] = 1;
      cur = img_[cur];
    } while (cur != i);
    out << ')';
  }
  return any ? out.str() : "e";
}

Permutation mul(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree()) throw StructuralError("degree mismatch");
  std::vector<int> img(f.degree());
  for (int i = 0; i < f.degree(); ++i) img[i] = g.apply(f.apply(i));
  return Permutation::from_images(std::move(img));
}

Permutation pow(const Permutation& p, int e) {
  Permutation r(p.degree());
  for (int i = 0; i < e; ++i) r = mul(r, p);
  return r;
}

Permutation conj(const Permutation& x, const Permutation& y) {
  return mul(mul(y.inverse(), x), y);
}

Permutation conj_inv(const Permutation& x, const Permutation& y) {
  return mul(mul(y, x), y.inverse());
}

std::vector<Permutation> all_permutations(int d) {
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace qmon
