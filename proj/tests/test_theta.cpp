#include <doctest.h>

#include "iwahori/theta.hpp"

using namespace iwahori;

namespace {
LaurentPoly G(const char* text) { return LaurentPoly::parse(text, Profile::gs()); }
}  // namespace

TEST_CASE("IC indices wrap with a power of g") {
  const ThetaModule th(3);
  CHECK(th.ic(3) == std::vector<LaurentPoly>{G("g^-1"), G("0"), G("0")});
  CHECK(th.ic(-1) == std::vector<LaurentPoly>{G("0"), G("0"), G("g")});
  CHECK(th.t_omega(3) == th.scalar(G("g^-1")));
  CHECK(th.t_w1() * th.t_w1_inverse() == PolyMatrix::identity(Profile::gs(), 3));
}

TEST_CASE("relations hold for small ranks") {
  for (int m = 1; m <= 4; ++m) {
    const ThetaModule th(m);
    for (const auto& r : check_theta_relations(th, 1)) {
      INFO("m = " << m << ", " << r.name << ": " << r.witness);
      CHECK(r.holds);
      CHECK(r.instances > 0);
    }
  }
}

TEST_CASE("freeness") {
  for (int m = 1; m <= 5; ++m) CHECK_FALSE(freeness_determinant(ThetaModule(m)).is_zero());
}

TEST_CASE("twist conventions") {
  const ThetaModule th(3);
  const DictionaryReport a = ic_sheaf_dictionary(th, Convention::A);
  const DictionaryReport b = ic_sheaf_dictionary(th, Convention::B);
  CHECK(a.formulas.size() == 5);
  CHECK(a.all_match());
  CHECK_FALSE(b.all_match());
  CHECK(convention_data(Convention::A).shift == G("s^-1"));
  CHECK(convention_data(Convention::B).half_twist == G("s^-1"));
}
