#include "qmon/group_quandles.hpp"

#include <algorithm>

#include "qmon/errors.hpp"

namespace qmon {

std::optional<int> PermSetQuandle::index_of(const Permutation& p) const {
  auto it = index.find(p.images());
  if (it == index.end()) return std::nullopt;
  return it->second;
}

PermSetQuandle conjugation_quandle(std::vector<Permutation> elements) {
  PermSetQuandle out;
  const int n = static_cast<int>(elements.size());
  for (int i = 0; i < n; ++i) {
    if (!out.index.emplace(elements[i].images(), i).second)
      throw StructuralError("duplicate element in conjugation quandle carrier");
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) labels[x] = elements[x].str();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Permutation z = conj(elements[x], elements[y]);
      auto it = out.index.find(z.images());
      if (it == out.index.end())
        throw StructuralError("carrier is not closed under conjugation");
      table[x][y] = it->second;
    }
  out.quandle = FiniteQuandle::from_rhd(table, std::move(labels));
  out.elements = std::move(elements);
  return out;
}

PermSetQuandle cyclic_class_quandle(int d) {
  if (d < 2) throw StructuralError("need at least two letters");
  std::vector<Permutation> carrier;
  for (const auto& p : all_permutations(d))
    if (p.is_single_cycle()) carrier.push_back(p);
  return conjugation_quandle(std::move(carrier));
}

PermSetQuandle transposition_quandle(int d) {
  if (d < 2) throw StructuralError("need at least two letters");
  std::vector<Permutation> carrier;
  for (const auto& p : all_permutations(d))
    if (p.is_transposition()) carrier.push_back(p);
  return conjugation_quandle(std::move(carrier));
}

PermSetQuandle symmetric_group_quandle(int n) {
  if (n < 1) throw StructuralError("need at least one letter");
  return conjugation_quandle(all_permutations(n));
}

Genus2Quandle genus2_quotient() {
  Genus2Quandle out;
  out.elements.push_back({0, Permutation(6)});
  out.elements.push_back({2, Permutation(6)});
  for (const auto& p : all_permutations(6))
    if (p.is_transposition()) out.elements.push_back({1, p});

  const int n = static_cast<int>(out.elements.size());
  std::map<std::pair<int, std::vector<int>>, int> index;
  for (int i = 0; i < n; ++i)
    index[{out.elements[i].first, out.elements[i].second.images()}] = i;

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x)
    labels[x] = "(" + std::to_string(out.elements[x].first) + "," +
                out.elements[x].second.str() + ")";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& [rx, px] = out.elements[x];
      const auto& [ry, py] = out.elements[y];
      (void)ry;
      const Permutation pz = conj(px, py);
      auto it = index.find({rx, pz.images()});
      if (it == index.end()) throw StructuralError("quotient carrier not closed");
      table[x][y] = it->second;
    }
  out.quandle = FiniteQuandle::from_rhd(table, std::move(labels));
  return out;
}

}  // namespace qmon
