#include "qmon/free_group.hpp"

#include <cctype>
#include <sstream>

#include "qmon/errors.hpp"

namespace qmon {

void fw_push(FreeWord& w, int letter) {
  if (letter == 0) throw StructuralError("letter 0 is not a generator");
  if (!w.empty() && w.back() == -letter)
    w.pop_back();
  else
    w.push_back(letter);
}

FreeWord fw_reduce(const FreeWord& letters) {
  FreeWord w;
  for (int l : letters) fw_push(w, l);
  return w;
}

FreeWord fw_mul(const FreeWord& a, const FreeWord& b) {
  FreeWord w = a;
  for (int l : b) fw_push(w, l);
  return w;
}

FreeWord fw_inv(const FreeWord& a) {
  FreeWord w;
  for (auto it = a.rbegin(); it != a.rend(); ++it) w.push_back(-*it);
  return w;
}

FreeWord fw_conj(const FreeWord& x, const FreeWord& w) {
  return fw_mul(fw_mul(fw_inv(w), x), w);
}

FreeWord fw_pow(const FreeWord& a, int e) {
  const FreeWord base = e < 0 ? fw_inv(a) : a;
  FreeWord w;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) w = fw_mul(w, base);
  return w;
}

std::string fw_str(const FreeWord& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    if (w[i] > 0)
      out << 'x' << w[i];
    else
      out << 'x' << -w[i] << "^-1";
  }
  return out.str();
}

FreeWord fw_parse(const std::string& text) {
  FreeWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 'x')
      throw StructuralError("bad word token '" + tok + "'");
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
    fw_push(w, sign * idx);
  }
  return w;
}

}  // namespace qmon
