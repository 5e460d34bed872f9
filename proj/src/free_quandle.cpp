#include "qmon/free_quandle.hpp"

#include "qmon/errors.hpp"

namespace qmon {

FreeQuandleElement FreeQuandleElement::make(int gen, FreeWord w) {
  if (gen < 1) throw StructuralError("generator index must be positive");
  w = fw_reduce(w);
  size_t drop = 0;
  while (drop < w.size() && (w[drop] == gen || w[drop] == -gen)) ++drop;
  if (drop) w.erase(w.begin(), w.begin() + drop);
  FreeQuandleElement e;
  e.gen = gen;
  e.conj = std::move(w);
  return e;
}

FreeWord fq_embed(const FreeQuandleElement& e) {
  return fw_conj(FreeWord{e.gen}, e.conj);
}

FreeQuandleElement fq_rhd(const FreeQuandleElement& a, const FreeQuandleElement& b) {
  return FreeQuandleElement::make(a.gen, fw_mul(a.conj, fq_embed(b)));
}

FreeQuandleElement fq_unrhd(const FreeQuandleElement& a, const FreeQuandleElement& b) {
  return FreeQuandleElement::make(a.gen, fw_mul(a.conj, fw_inv(fq_embed(b))));
}

std::string fq_str(const FreeQuandleElement& e) {
  return fw_str(fq_embed(e)) + " @ " + std::to_string(e.gen);
}

FreeQuandleElement fq_parse(const std::string& text) {
  const size_t at = text.find('@');
  if (at == std::string::npos) throw StructuralError("missing '@' in element");
  const FreeWord word = fw_parse(text.substr(0, at));
  int gen = 0;
  try {
    gen = std::stoi(text.substr(at + 1));
  } catch (const std::exception&) {
    throw StructuralError("bad generator index after '@'");
  }
  if (gen < 1) throw StructuralError("generator index must be positive");
  // expect the symmetric reduced shape w^-1 xg w
  if (word.size() % 2 == 0) throw StructuralError("word is not a generator conjugate");
  const size_t k = word.size() / 2;
  if (word[k] != gen) throw StructuralError("middle letter does not match generator");
  FreeWord w(word.begin() + k + 1, word.end());
  const FreeWord prefix(word.begin(), word.begin() + k);
  if (prefix != fw_inv(w)) throw StructuralError("word is not a generator conjugate");
  FreeQuandleElement e = FreeQuandleElement::make(gen, w);
  if (fq_embed(e) != word) throw StructuralError("word is not in lowest terms");
  return e;
}

}  // namespace qmon
