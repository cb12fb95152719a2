#include <doctest.h>

#include "iwahori/oracles.hpp"
#include "iwahori/weyl.hpp"

using namespace iwahori;

TEST_CASE("group law and action") {
  const AffineWeylElt a({1, 0, -1}, {1, 2, 0});
  const AffineWeylElt b({0, 2, 0}, {0, 2, 1});
  CHECK((a * b) * a == a * (b * a));
  CHECK(a * a.inverse() == AffineWeylElt::identity(3));
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(-2) == a.inverse() * a.inverse());
  CHECK(act({1, 2, 0}, {5, 6, 7}) == Weight{7, 5, 6});
}

TEST_CASE("length examples") {
  CHECK(AffineWeylElt::translation({1, 0}).length() == 1);
  CHECK(AffineWeylElt::translation({1, 1, 0}).length() == 2);
  CHECK(AffineWeylElt::translation({2, 0, 0}).length() == 4);
  CHECK(AffineWeylElt::omega(4, 1).length() == 0);
  CHECK(AffineWeylElt::omega(4, -7).length() == 0);
  CHECK(AffineWeylElt::simple(3, 3).length() == 1);
  CHECK(AffineWeylElt::simple(3, 3).translation_part() == Weight{-1, 0, 1});
  CHECK(AffineWeylElt::omega(3, 3) == AffineWeylElt::translation({-1, -1, -1}));
  CHECK(AffineWeylElt::omega(3, 1).omega_power() == 1);
}

TEST_CASE("conjugation by w_1") {
  CHECK(conjugate_simple(4, 1, 1) == 2);
  CHECK(conjugate_simple(4, 4, 1) == 1);
  CHECK(conjugate_simple(4, 2, 4) == 2);
  CHECK(conjugate_simple(4, 3, -5) == 2);
  const AffineWeylElt w = AffineWeylElt::omega(3, 1);
  CHECK(w * AffineWeylElt::simple(3, 2) * w.inverse() == AffineWeylElt::simple(3, 3));
}

TEST_CASE("literal grammar") {
  CHECK(AffineWeylElt::parse("t[1,0,-1]*p[2,3,1]", 3) == AffineWeylElt({1, 0, -1}, {1, 2, 0}));
  CHECK(AffineWeylElt::parse("W1", 3) == AffineWeylElt::omega(3, 1));
  CHECK(AffineWeylElt::parse("W1^-2", 3) == AffineWeylElt::omega(3, -2));
  CHECK(AffineWeylElt::parse("s3*W1", 3) == AffineWeylElt::simple(3, 3) * AffineWeylElt::omega(3, 1));
  const AffineWeylElt x({2, -1, 0}, {2, 0, 1});
  CHECK(AffineWeylElt::parse(x.to_string(), 3) == x);
  CHECK_THROWS(AffineWeylElt::parse("p[1,1,2]", 3));
  CHECK_THROWS(AffineWeylElt::parse("t[1,2]", 3));
  CHECK_THROWS(AffineWeylElt::parse("W2", 3));
}

TEST_CASE("flipping translations is an involution that breaks length zero") {
  const AffineWeylElt w = AffineWeylElt::omega(3, 1);
  CHECK(w.flip_translations().translation_part() == Weight{1, 0, 0});
  CHECK(w.flip_translations().flip_translations() == w);
  CHECK(w.flip_translations().length() != 0);
}

TEST_CASE("reduced words") {
  const AffineWeylElt w = AffineWeylElt::translation({2, 0, -1});
  const ReducedWord rw = reduced_word(w);
  CHECK(static_cast<int>(rw.word.size()) == w.length());
  CHECK(recompose(3, rw) == w);
  // Smallest right descent first, so the letters come out in a fixed order.
  CHECK(reduced_word(AffineWeylElt::finite({2, 1, 0})).word == std::vector<int>{1, 2, 1});
}

TEST_CASE("length formula against breadth-first search") {
  for (int m = 1; m <= 3; ++m) {
    const auto dist = oracle::bfs_lengths(m, 2);
    std::size_t perms = 1;
    for (int k = 2; k <= m; ++k) perms *= static_cast<std::size_t>(k);
    std::size_t box = 1;
    for (int k = 0; k < m; ++k) box *= 5;
    REQUIRE(dist.size() == box * perms);
    for (const auto& [w, d] : dist) {
      INFO(w.to_string());
      CHECK(w.length() == d);
    }
  }
}

TEST_CASE("frozen search distances") {
  // A few distances read off the breadth-first search, kept as literals.
  const auto dist = oracle::bfs_lengths(3, 2);
  CHECK(dist.at(AffineWeylElt::translation({2, 0, -2})) == 8);
  CHECK(dist.at(AffineWeylElt({1, -1, 0}, {1, 0, 2})) == 5);
  CHECK(dist.at(AffineWeylElt::translation({-2, -2, -2})) == 0);
}
