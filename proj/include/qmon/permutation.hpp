#pragma once

#include <string>
#include <vector>

namespace qmon {

// Permutation of {1..d}, stored 0-based in one-line notation.
// Composition is left-to-right: mul(f, g) applies f first, then g.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity

  // images[i] = image of i, 0-based; must be a bijection
  static Permutation from_images(std::vector<int> images);

  // cycle notation with 1-based letters: "(1 2)(3 4)", "e" or "()" for the
  // identity; separators are spaces or commas
  static Permutation parse(const std::string& text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int i) const { return img_[i]; }  // 0-based
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  bool is_identity() const;

  // exactly one cycle of length >= 2 (everything else fixed)
  bool is_single_cycle() const;
  bool is_transposition() const;

  // canonical cycle string, 1-based, "e" for the identity
  std::string str() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

// (mul(f, g))(i) = g(f(i))
Permutation mul(const Permutation& f, const Permutation& g);
Permutation pow(const Permutation& p, int e);  // e >= 0

// y^-1 x y and its inverse y x y^-1
Permutation conj(const Permutation& x, const Permutation& y);
Permutation conj_inv(const Permutation& x, const Permutation& y);

// all d! permutations in lexicographic one-line order
std::vector<Permutation> all_permutations(int d);

}  // namespace qmon
