#pragma once

#include <string>
#include <vector>

#include "qmon/free_group.hpp"

namespace qmon {

// Word in the standard generators of the braid group on `strands` strands:
// letter +i / -i is si / si^-1, 1 <= i < strands.  Words concatenate
// left-to-right; adjacent inverse pairs are cancelled on construction.
struct Braid {
  int strands = 1;
  std::vector<int> word;

  static Braid make(int strands, std::vector<int> word);
  static Braid identity(int strands) { return make(strands, {}); }
};

Braid b_mul(const Braid& a, const Braid& b);
Braid b_inv(const Braid& a);
Braid b_pow(const Braid& a, int e);  // e may be negative

// Induced automorphism of the free group on x1..xn (one marking per strand):
//   si: xi -> xi x(i+1) xi^-1,  x(i+1) -> xi,  others fixed.
// Returns the images of x1..xn.  This action separates braids, so it also
// decides the word problem.
std::vector<FreeWord> strand_action(const Braid& b);

// equality in the braid group, decided through strand_action;
// throws StructuralError when strand counts differ
bool braid_eq(const Braid& a, const Braid& b);

// (s1 s2 ... s(n-1))^n, the central full twist
Braid full_twist(int strands);

std::string braid_str(const Braid& b);            // "s1 s2^-1"; identity is "1"
Braid braid_parse(const std::string& text, int strands);

// A braid conjugate to a standard generator, carrying the conjugating
// witness: braid == conjugator^-1 * s(gen)^chirality * conjugator.
struct Cord {
  Braid braid;
  Braid conjugator;
  int gen = 1;
  int chirality = 1;  // +1 or -1

  static Cord make(int strands, const Braid& conjugator, int gen, int chirality = 1);
  // verifies the witness against the braid (StructuralError on mismatch)
  static Cord checked(const Braid& braid, const Braid& conjugator, int gen,
                      int chirality = 1);
};

bool cord_eq(const Cord& a, const Cord& b);  // underlying braids only
Cord cord_rhd(const Cord& a, const Cord& b);    // b^-1 a b
Cord cord_unrhd(const Cord& a, const Cord& b);  // b a b^-1
Cord cord_act(const Cord& c, const Braid& g);   // c . g = g^-1 c g
Braid cord_augment(const Cord& c);              // the underlying braid

// Cord with a nonzero multiplicity label; the label weights the action:
//   (a, l) |> (b, m) conjugates a by b^m and keeps l.
struct LCord {
  Cord cord;
  int label = 1;
};

bool lcord_eq(const LCord& a, const LCord& b);
LCord lcord_rhd(const LCord& a, const LCord& b);
LCord lcord_unrhd(const LCord& a, const LCord& b);
Braid lcord_augment(const LCord& c);  // braid^label

}  // namespace qmon
