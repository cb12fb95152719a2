#include <doctest.h>

#include "iwahori/polyrep.hpp"

using namespace iwahori;

namespace {
LaurentPoly P(const char* text, int m) { return LaurentPoly::parse(text, Profile::xs(m)); }
}  // namespace

TEST_CASE("affine generator on 1") {
  for (int m = 2; m <= 8; ++m) {
    INFO("m = " << m);
    CHECK(t_sm_on_one(m) == t_sm_on_one_expected(m));
  }
  CHECK(t_sm_on_one(2).to_string() == "s^2*x1*x2^-1 + s^2 - 1");
  CHECK(t_sm_on_one(3).to_string() == "s^4*x1*x3^-1 + s^2 - 1");
}

TEST_CASE("Demazure-Lusztig operators on monomials") {
  CHECK(act_simple(1, P("1", 2)) == P("s^2", 2));
  CHECK(act_simple(1, P("x1", 2)) == P("x2", 2));
  CHECK(act_simple(1, P("x2", 2)) == P("s^2*x1 + s^2*x2 - x2", 2));
  // Symmetric polynomials are eigenvectors with eigenvalue v.
  CHECK(act_simple(2, P("x1*x2*x3 + x1 + x2 + x3", 3)) == P("s^2*(x1*x2*x3 + x1 + x2 + x3)", 3));
}

TEST_CASE("module structure") {
  const LaurentPoly u = P("x1^2*x2^-1 + s*x3", 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(act(t_simple(3, i) * t_simple(3, j), u) == act(t_simple(3, i), act(t_simple(3, j), u)));
  CHECK(act(HeckeElt::e({1, 0, -1}), u) == P("x1^-1*x3", 3) * u);
  CHECK(act(t_omega(3, 1) * t_omega(3, -1), u) == u);
}

TEST_CASE("length-zero generator on 1") {
  CHECK(act(t_omega(3, 1), P("1", 3)) == P("s^2*x1", 3));
  CHECK(act(t_omega(3, 2), P("1", 3)) == P("s^2*x1*x2", 3));
  CHECK(act(t_omega(4, 2), P("1", 4)) == P("s^4*x1*x2", 4));
  CHECK(act(t_omega(3, 3), P("1", 3)) == P("x1*x2*x3", 3));
}
