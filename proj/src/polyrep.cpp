#include "iwahori/polyrep.hpp"

#include <stdexcept>

namespace iwahori {

namespace {

LaurentPoly act_simple_monomial(int i, const Monomial& mono, int m) {
  const Profile xs = Profile::xs(m);
  const Weight lambda = mono.x_exponents(m);
  const Monomial rest = mono * Monomial::x_power(lambda).inverse();
  const int n = pairing(lambda, i);
  LaurentPoly r = LaurentPoly::zero(xs);
  // s_i(l) = l - n a and s_i(l) + a = l - (n - 1) a.
  for (const auto& [w, c] : telescoping_terms(lambda, i, n)) r.add_term(rest * Monomial::x_power(w), c);
  const Monomial s2 = Monomial::of(var::s, 2);
  for (const auto& [w, c] : telescoping_terms(lambda, i, n - 1))
    r.add_term(rest * s2 * Monomial::x_power(w), -c);
  return r;
}

}  // namespace

LaurentPoly act_simple(int i, const LaurentPoly& u) {
  const int m = u.profile().rank();
  if (u.profile().kind() != Profile::Kind::XS) throw ProfileError("polynomial module vectors live in {s,x1..xm}");
  if (i < 1 || i >= m) throw std::out_of_range("act_simple: index must be finite");
  LaurentPoly r = LaurentPoly::zero(u.profile());
  for (const auto& [mono, c] : u.terms()) r += act_simple_monomial(i, mono, m).scaled(c);
  return r;
}

LaurentPoly act_finite(const Perm& w, const LaurentPoly& u) {
  // T_w = T_{i_1} ... T_{i_l}: the last letter acts first.
  const std::vector<int> word = finite_reduced_word(w);
  LaurentPoly r = u;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = act_simple(*it, r);
  return r;
}

LaurentPoly act(const HeckeElt& h, const LaurentPoly& u) {
  const int m = h.rank();
  if (u.profile().kind() != Profile::Kind::XS || u.profile().rank() != m)
    throw ProfileError("act: vector profile " + u.profile().describe() + " does not match rank " + std::to_string(m));
  const Profile xs = Profile::xs(m);
  LaurentPoly r = LaurentPoly::zero(xs);
  std::map<Perm, LaurentPoly> finite_images;
  for (const auto& [k, c] : h.terms()) {
    auto it = finite_images.find(k.w);
    if (it == finite_images.end()) it = finite_images.emplace(k.w, act_finite(k.w, u)).first;
    r += (it->second * c.reprofiled(xs)).times(Monomial::x_power(-k.lambda));
  }
  return r;
}

LaurentPoly t_sm_on_one(int m) {
  if (m < 2) throw std::invalid_argument("t_sm_on_one needs m >= 2");
  const HeckeElt tsm = t_omega(m, -1) * HeckeElt::T(simple_transposition(m, 1)) * t_omega(m, 1);
  return act(tsm, LaurentPoly::one(Profile::xs(m)));
}

LaurentPoly t_sm_on_one_expected(int m) {
  const Profile xs = Profile::xs(m);
  Weight lambda = zero_weight(m);
  lambda.front() = 1;
  lambda.back() = -1;
  return LaurentPoly::variable(xs, var::s, 2) - LaurentPoly::one(xs) +
         LaurentPoly(xs, Monomial::of(var::s, 2 * (m - 1)) * Monomial::x_power(lambda));
}

}  // namespace iwahori
