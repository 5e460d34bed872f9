#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmon/finite_quandle.hpp"
#include "qmon/group_quandles.hpp"

namespace qmon {

// Built-in carriers, addressed by spec strings:
//   trivial:<k>                     k elements, x |> y = x
//   conj:S<n>                       all of S_n under conjugation (n <= 6)
//   cyclic:<d>                      single-cycle permutations of S_d (d <= 7)
//   transposition:<d>               transpositions of S_d (d <= 12)
//   dihedral:<n>                    x |> y = 2y - x on Z/n
//   alexander:<m>:<T>               T(x-y)+y over Z/m, T a json matrix
//   alternating:<g>:<m>             x + <x,y>y, genus-g symplectic form, Z/m
//   reduced-alternating:<g>:<m>     the same modulo v ~ -v
//   genus2-quotient                 17-element carrier in Z/10 x S_6
//   torus-dehn                      isotopy classes of curves on the torus
//                                   (infinite; no table)
//   achiral:<spec>                  signed double of another catalog entry
struct CatalogEntry {
  std::string name;
  std::optional<FiniteQuandle> quandle;        // absent for infinite carriers
  std::optional<PermSetQuandle> perm_carrier;  // set when permutation-backed
  bool torus_dehn = false;
};

CatalogEntry catalog_build(const std::string& spec);

// one usage line per family, for listings
std::vector<std::string> catalog_names();

}  // namespace qmon
