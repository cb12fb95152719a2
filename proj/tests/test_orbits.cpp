#include <doctest.h>

#include "iwahori/oracles.hpp"
#include "iwahori/orbits.hpp"

using namespace iwahori;

TEST_CASE("injections") {
  CHECK(injections(2, 3).size() == 6);
  CHECK(injection_count(3, 4) == 24);
  CHECK(oracle::injection_count(3, 4) == 24);
  CHECK(injection_count(1, 1) == 1);
  const Injection first = injections(2, 3).front();
  CHECK(first.subset == std::vector<int>{1, 2});
  CHECK(first.image == std::vector<int>{1, 2});
}

TEST_CASE("lattice condition") {
  CHECK(lattice_condition({0}, 0, 1));
  CHECK(lattice_condition({1}, 0, 1));
  CHECK_FALSE(lattice_condition({-1}, 0, 1));
  CHECK_FALSE(lattice_condition({2}, 0, 1));
  CHECK(lattice_condition({2, -3}, 3, 2));
  CHECK_FALSE(lattice_condition({2, -4}, 3, 2));
}

TEST_CASE("counts against the brute-force scan") {
  CHECK(count_orbits(1, 2, 0, 1) == 4);
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= m; ++n)
      for (int N = 0; N <= 3; ++N)
        for (int r = 0; r <= 3; ++r) {
          if (N + r == 0) continue;
          INFO(n << " " << m << " " << N << " " << r);
          CHECK(count_orbits(n, m, N, r) == oracle::orbit_count(n, m, N, r));
        }
  // (N + r + 1)^n cocharacters times m!/(m-n)! injections.
  CHECK(count_orbits(2, 4, 3, 3) == 49 * 12);
}

TEST_CASE("representatives") {
  const auto t = orbit_representative({{2}, {{2}, {1}}}, 3);
  CHECK(t == std::vector<std::vector<std::string>>{{"0", "t^2", "0"}});
  const auto u = orbit_representative({{0, -1}, {{1, 3}, {2, 1}}}, 3);
  CHECK(u == std::vector<std::vector<std::string>>{{"0", "0", "t^0"}, {"t^-1", "0", "0"}});
  CHECK(to_string({{2}, {{2}, {1}}}) == "lambda=(2) s: 2->1");
}
