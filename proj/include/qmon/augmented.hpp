#pragma once

#include <functional>
#include <vector>

#include "qmon/finite_quandle.hpp"

namespace qmon {

// Quandle carrier Q together with a structure map ell into a group G acting
// on Q from the right.  The group is abstract: supply multiplication
// (mul(a, b) = "a then b" under the group's own composition convention),
// inverse, and equality.  The three compatibility laws are
//   q . ell(q) == q
//   ell(q . g) == g^-1 ell(q) g
//   q |-> q . g preserves |>
template <class Q, class G>
struct AugmentedQuandle {
  std::function<Q(const Q&, const Q&)> rhd;
  std::function<bool(const Q&, const Q&)> q_eq;
  std::function<G(const G&, const G&)> mul;
  std::function<G(const G&)> inv;
  std::function<bool(const G&, const G&)> g_eq;
  std::function<G(const Q&)> ell;
  std::function<Q(const Q&, const G&)> act;
};

// Checks the three laws over the given samples.  Witness indices refer to
// positions in q_sample / g_sample: AugmentationFix -> (q), AugmentationConj
// -> (q, g), ActionHom -> (x, y, g).
template <class Q, class G>
AxiomReport check_augmentation(const AugmentedQuandle<Q, G>& a,
                               const std::vector<Q>& q_sample,
                               const std::vector<G>& g_sample) {
  AxiomReport rep;
  const int nq = static_cast<int>(q_sample.size());
  const int ng = static_cast<int>(g_sample.size());
  for (int i = 0; i < nq; ++i)
    if (!a.q_eq(a.act(q_sample[i], a.ell(q_sample[i])), q_sample[i]))
      rep.add(Law::AugmentationFix, i);
  for (int i = 0; i < nq; ++i)
    for (int j = 0; j < ng; ++j) {
      const G lhs = a.ell(a.act(q_sample[i], g_sample[j]));
      const G rhs = a.mul(a.mul(a.inv(g_sample[j]), a.ell(q_sample[i])), g_sample[j]);
      if (!a.g_eq(lhs, rhs)) rep.add(Law::AugmentationConj, i, j);
    }
  for (int i = 0; i < nq; ++i)
    for (int j = 0; j < nq; ++j)
      for (int k = 0; k < ng; ++k) {
        const Q lhs = a.act(a.rhd(q_sample[i], q_sample[j]), g_sample[k]);
        const Q rhs = a.rhd(a.act(q_sample[i], g_sample[k]), a.act(q_sample[j], g_sample[k]));
        if (!a.q_eq(lhs, rhs)) rep.add(Law::ActionHom, i, j, k);
      }
  return rep;
}

}  // namespace qmon
