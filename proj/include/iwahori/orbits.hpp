#pragma once

// Labels of the Iwahori-orbits for the pair (GL_n, GL_m), n <= m: a
// cocharacter lambda in Z^n together with an injection datum (s, I_s),
// where I_s is an n-subset of {1..m} and s: I_s -> {1..n} a bijection.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace iwahori {

struct Injection {
  std::vector<int> subset;  // I_s, increasing, 1-based
  std::vector<int> image;   // image[k] = s(subset[k]), 1-based
  auto operator<=>(const Injection&) const = default;
};

struct OrbitLabel {
  std::vector<int> lambda;
  Injection inj;
  auto operator<=>(const OrbitLabel&) const = default;
};

/// All of S_{n,m}, ordered by subset then image.
std::vector<Injection> injections(int n, int m);
/// m! / (m-n)!.
std::uint64_t injection_count(int n, int m);

/// Every W-conjugate nu of lambda has nu_1 <= r and -(w_0 nu)_1 <= N.
bool lattice_condition(const std::vector<int>& lambda, int N, int r);

/// Labels whose cocharacter satisfies the lattice condition, crossed with
/// S_{n,m}. The condition reduces to max lambda <= r and -min lambda <= N.
std::vector<OrbitLabel> enumerate_orbits(int n, int m, int N, int r);
std::uint64_t count_orbits(int n, int m, int N, int r);

/// n x m table with t^{a_{s(i)}} at row s(i), column i for i in I_s and 0
/// elsewhere; entries are printed as "0" or "t^a".
std::vector<std::vector<std::string>> orbit_representative(const OrbitLabel& label, int m);

std::string to_string(const OrbitLabel& label);

}  // namespace iwahori
