#pragma once

// Weight-level helpers shared by the Hecke algebra and its polynomial
// representation. Characters e^lambda are written as monomials x^lambda.

#include <utility>
#include <vector>

#include "iwahori/laurent.hpp"

namespace iwahori {

using Weight = std::vector<int>;

Weight zero_weight(int m);
/// omega_i = (1,..,1,0,..,0) with i ones.
Weight fundamental_weight(int m, int i);
/// alpha_i = eps_i - eps_{i+1}, 1 <= i < m.
Weight simple_root(int m, int i);
/// s_i(lambda): swaps entries i and i+1.
Weight reflect(const Weight& lambda, int i);
/// <lambda, alpha_i^vee> = lambda_i - lambda_{i+1}.
int pairing(const Weight& lambda, int i);
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);

/// Terms of (e^lambda - e^{lambda - j alpha_i}) / (e^{alpha_i} - 1) as a
/// signed list of weights. The quotient is a finite geometric sum for
/// every integer j, so no division is ever attempted.
std::vector<std::pair<Weight, int>> telescoping_terms(const Weight& lambda, int i, int j);

/// (e^lambda - e^{s_i lambda}) / (1 - e^{-alpha_i}) in the {s, x1..xm} profile.
LaurentPoly demazure_quotient(const Weight& lambda, int i);
/// Same quotient as a signed weight list.
std::vector<std::pair<Weight, int>> demazure_terms(const Weight& lambda, int i);

/// Sum of e^mu over the S_m-orbit of lambda, each orbit point once.
LaurentPoly orbit_sum(const Weight& lambda);
/// Distinct permutations of lambda in increasing lexicographic order.
std::vector<Weight> weight_orbit(const Weight& lambda);

/// x^lambda in the {s, x1..xm} profile.
LaurentPoly x_monomial(const Weight& lambda);
/// Invariance under every swap x_i <-> x_{i+1}.
bool is_symmetric(const LaurentPoly& p);
/// Applies x_i <-> x_{i+1} to every term.
LaurentPoly swap_variables(const LaurentPoly& p, int i);
/// k-th elementary symmetric polynomial in x1..xm.
LaurentPoly elementary_symmetric(int m, int k);

}  // namespace iwahori
