#pragma once

#include <string>
#include <vector>

namespace qmon {

// Freely reduced word in generators x1, x2, ...: letter +k is xk, -k its
// inverse.  All functions keep words reduced.
using FreeWord = std::vector<int>;

void fw_push(FreeWord& w, int letter);  // append one letter, cancelling
FreeWord fw_reduce(const FreeWord& letters);
FreeWord fw_mul(const FreeWord& a, const FreeWord& b);
FreeWord fw_inv(const FreeWord& a);
FreeWord fw_conj(const FreeWord& x, const FreeWord& w);  // w^-1 x w
FreeWord fw_pow(const FreeWord& a, int e);               // e may be negative

// "x2^-1 x1 x2"; the empty word prints as "1"
std::string fw_str(const FreeWord& w);
FreeWord fw_parse(const std::string& text);

}  // namespace qmon
