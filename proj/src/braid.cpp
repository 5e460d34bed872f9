#include "qmon/braid.hpp"

#include <cctype>
#include <sstream>

#include "qmon/errors.hpp"

namespace qmon {

Braid Braid::make(int strands, std::vector<int> word) {
  if (strands < 1) throw StructuralError("strand count must be positive");
  Braid b;
  b.strands = strands;
  for (int l : word) {
    const int i = l < 0 ? -l : l;
    if (i < 1 || i >= strands) throw StructuralError("generator index out of range");
    if (!b.word.empty() && b.word.back() == -l)
      b.word.pop_back();
    else
      b.word.push_back(l);
  }
  return b;
}

Braid b_mul(const Braid& a, const Braid& b) {
  if (a.strands != b.strands) throw StructuralError("strand count mismatch");
  std::vector<int> w = a.word;
  w.insert(w.end(), b.word.begin(), b.word.end());
  return Braid::make(a.strands, std::move(w));
}

Braid b_inv(const Braid& a) {
  std::vector<int> w;
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) w.push_back(-*it);
  return Braid::make(a.strands, std::move(w));
}

Braid b_pow(const Braid& a, int e) {
  const Braid base = e < 0 ? b_inv(a) : a;
  Braid r = Braid::identity(a.strands);
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r = b_mul(r, base);
  return r;
}

std::vector<FreeWord> strand_action(const Braid& b) {
  const int n = b.strands;
  std::vector<FreeWord> img(n);
  for (int j = 0; j < n; ++j) img[j] = {j + 1};
  for (int letter : b.word) {
    const int a = (letter < 0 ? -letter : letter) - 1;  // acts on img[a], img[a+1]
    if (letter > 0) {
      FreeWord na = fw_mul(fw_mul(img[a], img[a + 1]), fw_inv(img[a]));
      img[a + 1] = img[a];
      img[a] = std::move(na);
    } else {
      FreeWord nb = fw_mul(fw_mul(fw_inv(img[a + 1]), img[a]), img[a + 1]);
      img[a] = img[a + 1];
      img[a + 1] = std::move(nb);
    }
  }
  return img;
}

bool braid_eq(const Braid& a, const Braid& b) {
  if (a.strands != b.strands) throw StructuralError("strand count mismatch");
  if (a.word == b.word) return true;
  return strand_action(a) == strand_action(b);
}

Braid full_twist(int strands) {
  std::vector<int> w;
  for (int r = 0; r < strands; ++r)
    for (int i = 1; i < strands; ++i) w.push_back(i);
  return Braid::make(strands, std::move(w));
}

std::string braid_str(const Braid& b) {
  if (b.word.empty()) return "1";
  std::ostringstream out;
  for (size_t i = 0; i < b.word.size(); ++i) {
    if (i) out << ' ';
    if (b.word[i] > 0)
      out << 's' << b.word[i];
    else
      out << 's' << -b.word[i] << "^-1";
  }
  return out.str();
}

Braid braid_parse(const std::string& text, int strands) {
  std::vector<int> w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 's')
      throw StructuralError("bad braid token '" + tok + "'");
    size_t i = 1;
    int idx = 0;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])))
      idx = idx * 10 + (tok[i++] - '0');
    if (idx == 0) throw StructuralError("bad generator index in '" + tok + "'");
    int sign = 1;
    if (i != tok.size()) {
      if (tok.substr(i) != "^-1") throw StructuralError("bad exponent in '" + tok + "'");
      sign = -1;
    }
    w.push_back(sign * idx);
  }
  return Braid::make(strands, std::move(w));
}

Cord Cord::make(int strands, const Braid& conjugator, int gen, int chirality) {
  if (gen < 1 || gen >= strands) throw StructuralError("generator index out of range");
  if (chirality != 1 && chirality != -1) throw StructuralError("chirality must be +-1");
  if (conjugator.strands != strands) throw StructuralError("strand count mismatch");
  Cord c;
  c.conjugator = conjugator;
  c.gen = gen;
  c.chirality = chirality;
  c.braid = b_mul(b_mul(b_inv(conjugator), Braid::make(strands, {chirality * gen})),
                  conjugator);
  return c;
}

Cord Cord::checked(const Braid& braid, const Braid& conjugator, int gen, int chirality) {
  Cord c = make(braid.strands, conjugator, gen, chirality);
  if (!braid_eq(c.braid, braid))
    throw StructuralError("witness does not conjugate the generator to the braid");
  c.braid = braid;
  return c;
}

bool cord_eq(const Cord& a, const Cord& b) { return braid_eq(a.braid, b.braid); }

Cord cord_rhd(const Cord& a, const Cord& b) { return cord_act(a, b.braid); }

Cord cord_unrhd(const Cord& a, const Cord& b) { return cord_act(a, b_inv(b.braid)); }

Cord cord_act(const Cord& c, const Braid& g) {
  Cord r = c;
  r.braid = b_mul(b_mul(b_inv(g), c.braid), g);
  r.conjugator = b_mul(c.conjugator, g);
  return r;
}

Braid cord_augment(const Cord& c) { return c.braid; }

bool lcord_eq(const LCord& a, const LCord& b) {
  return a.label == b.label && cord_eq(a.cord, b.cord);
}

LCord lcord_rhd(const LCord& a, const LCord& b) {
  return {cord_act(a.cord, b_pow(b.cord.braid, b.label)), a.label};
}

LCord lcord_unrhd(const LCord& a, const LCord& b) {
  return {cord_act(a.cord, b_pow(b.cord.braid, -b.label)), a.label};
}

Braid lcord_augment(const LCord& c) { return b_pow(c.cord.braid, c.label); }

}  // namespace qmon
