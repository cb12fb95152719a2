#pragma once

// Brute-force reference computations, deliberately independent of the
// closed formulas they are compared against.

#include <cstdint>
#include <map>

#include "iwahori/laurent.hpp"
#include "iwahori/weyl.hpp"

namespace iwahori::oracle {

/// Word length in the Cayley graph of W_aff x| Omega: multi-source BFS from
/// the length-zero elements w_1^k, right-multiplying by s_1..s_m. Returns
/// the distance of every element with |lambda_i| <= bound.
std::map<AffineWeylElt, int> bfs_lengths(int m, int bound);

/// Scans lambda in a box strictly larger than [-N, r]^n, keeps those whose
/// every permutation passes the lattice test, and multiplies by the number
/// of injective maps {1..n} -> {1..m} found by exhaustive search.
std::uint64_t orbit_count(int n, int m, int N, int r);

/// Injective maps {1..n} -> {1..m}, counted one map at a time.
std::uint64_t injection_count(int n, int m);

/// T_a T_b in the T_w basis, by the Coxeter rules alone:
/// T_w T_s = T_{ws} if l(ws) > l(w), else (v - 1) T_w + v T_{ws};
/// length-zero factors just multiply.
std::map<AffineWeylElt, LaurentPoly> iwahori_matsumoto_product(const AffineWeylElt& a, const AffineWeylElt& b);

}  // namespace iwahori::oracle
