#pragma once

#include <string>

#include "qmon/free_group.hpp"

namespace qmon {

// Element w^-1 xg w of the free group on x1..xn, considered as an element of
// the quandle of conjugates of the generators.  Canonical form: w is freely
// reduced and does not begin with xg or xg^-1, so the embedded conjugate is
// in lowest terms and equal elements have equal representations.
struct FreeQuandleElement {
  int gen = 1;
  FreeWord conj;

  static FreeQuandleElement make(int gen, FreeWord w);  // canonicalizes
  bool operator==(const FreeQuandleElement& o) const = default;
};

// the reduced word w^-1 xg w
FreeWord fq_embed(const FreeQuandleElement& e);

// a |> b conjugates the embedded word of a by the embedded word of b;
// a <| b conjugates by its inverse
FreeQuandleElement fq_rhd(const FreeQuandleElement& a, const FreeQuandleElement& b);
FreeQuandleElement fq_unrhd(const FreeQuandleElement& a, const FreeQuandleElement& b);

// embedded word followed by the generator marker: "x2^-1 x1 x2 @ 1"
std::string fq_str(const FreeQuandleElement& e);
FreeQuandleElement fq_parse(const std::string& text);

}  // namespace qmon
