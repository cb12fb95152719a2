#pragma once

// Extended affine Weyl group of GL_m: pairs t^lambda w with lambda in Z^m and
// w in S_m, multiplied by (l1,w1)(l2,w2) = (l1 + w1(l2), w1 w2), where
// w(lambda)_i = lambda_{w^-1(i)}.
//
// Simple reflections are s_1..s_{m-1} and the affine s_m = t^{(-1,0,..,0,1)}(1 m).
// The length-zero subgroup is generated by w_1 = t^{-omega_1} sigma_1, with
// sigma_i the rotation j -> j+i mod m.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "iwahori/rings.hpp"

namespace iwahori {

/// Permutation of {0..m-1}, stored as images: perm[j] = w(j).
using Perm = std::vector<int>;

Perm identity_perm(int m);
Perm compose(const Perm& a, const Perm& b);  // a after b
Perm inverse(const Perm& p);
/// Coxeter length (inversion count).
int perm_length(const Perm& p);
/// Transposition of i and i+1 (1-based i).
Perm simple_transposition(int m, int i);
/// sigma_i: j -> j + i mod m.
Perm rotation(int m, int i);
/// w(lambda)_{w(j)} = lambda_j.
Weight act(const Perm& w, const Weight& lambda);
/// Reduced word of a finite permutation: w = s_{word[0]} s_{word[1]} ...
std::vector<int> finite_reduced_word(const Perm& w);
bool is_dominant(const Weight& lambda);

class AffineWeylElt {
 public:
  AffineWeylElt(Weight lambda, Perm w);

  static AffineWeylElt identity(int m);
  static AffineWeylElt translation(Weight lambda);
  static AffineWeylElt finite(Perm w);
  /// s_i for 1 <= i <= m; s_m is the affine reflection.
  static AffineWeylElt simple(int m, int i);
  /// w_1^k for any integer k.
  static AffineWeylElt omega(int m, int k);
  /// Parses `t[l1,..,lm]*p[w(1),..,w(m)]`, either factor alone, `W1`, and
  /// powers `W1^k`; products of these are accepted.
  static AffineWeylElt parse(std::string_view text, int m);

  int rank() const { return static_cast<int>(lambda_.size()); }
  const Weight& translation_part() const { return lambda_; }
  const Perm& finite_part() const { return w_; }

  AffineWeylElt operator*(const AffineWeylElt& o) const;
  AffineWeylElt inverse() const;
  AffineWeylElt pow(int k) const;
  int length() const;
  /// The k with this in w_1^k W_aff; equals -sum(lambda).
  int omega_power() const;
  /// t^lambda w -> t^-lambda w. Carries t^{-omega_i} sigma_i to the other
  /// common normalization t^{omega_i} sigma_i, which is not length zero.
  AffineWeylElt flip_translations() const;

  std::string to_string() const;

  auto operator<=>(const AffineWeylElt&) const = default;

 private:
  Weight lambda_;
  Perm w_;
};

struct ReducedWord {
  int omega_power = 0;
  std::vector<int> word;  // letters in 1..m
};

/// w = w_1^k s_{i_1} ... s_{i_l} with l = length(w), peeling right descents
/// smallest index first.
ReducedWord reduced_word(const AffineWeylElt& w);
AffineWeylElt recompose(int m, const ReducedWord& rw);
/// Index of w_1^j s_i w_1^-j, in 1..m.
int conjugate_simple(int m, int i, int j);

}  // namespace iwahori
