#include "iwahori/rings.hpp"

#include <algorithm>
#include <stdexcept>

namespace iwahori {

Weight zero_weight(int m) { return Weight(static_cast<std::size_t>(m), 0); }

Weight fundamental_weight(int m, int i) {
  if (i < 0 || i > m) throw std::out_of_range("fundamental weight index out of range");
  Weight w = zero_weight(m);
  std::fill(w.begin(), w.begin() + i, 1);
  return w;
}

Weight simple_root(int m, int i) {
  if (i < 1 || i >= m) throw std::out_of_range("simple root index out of range");
  Weight a = zero_weight(m);
  a[static_cast<std::size_t>(i - 1)] = 1;
  a[static_cast<std::size_t>(i)] = -1;
  return a;
}

Weight reflect(const Weight& lambda, int i) {
  Weight r = lambda;
  std::swap(r.at(static_cast<std::size_t>(i - 1)), r.at(static_cast<std::size_t>(i)));
  return r;
}

int pairing(const Weight& lambda, int i) {
  return lambda.at(static_cast<std::size_t>(i - 1)) - lambda.at(static_cast<std::size_t>(i));
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b.at(k);
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b.at(k);
  return r;
}

Weight operator-(const Weight& a) {
  Weight r = a;
  for (int& x : r) x = -x;
  return r;
}

std::vector<std::pair<Weight, int>> telescoping_terms(const Weight& lambda, int i, int j) {
  std::vector<std::pair<Weight, int>> out;
  auto shifted = [&](int k) {
    Weight w = lambda;
    w[static_cast<std::size_t>(i - 1)] += k;
    w[static_cast<std::size_t>(i)] -= k;
    return w;
  };
  // (e^l - e^{l - j a}) / (e^a - 1) = sum_{k=1..j} e^{l - k a}      (j > 0)
  //                                 = -sum_{k=0..-j-1} e^{l + k a}  (j < 0)
  if (j > 0) {
    for (int k = 1; k <= j; ++k) out.emplace_back(shifted(-k), 1);
  } else if (j < 0) {
    for (int k = 0; k < -j; ++k) out.emplace_back(shifted(k), -1);
  }
  return out;
}

std::vector<std::pair<Weight, int>> demazure_terms(const Weight& lambda, int i) {
  // Multiplying the telescoping quotient by e^{alpha} turns e^a - 1 into 1 - e^{-a}.
  auto terms = telescoping_terms(lambda, i, pairing(lambda, i));
  for (auto& [w, c] : terms) {
    w[static_cast<std::size_t>(i - 1)] += 1;
    w[static_cast<std::size_t>(i)] -= 1;
  }
  return terms;
}

LaurentPoly x_monomial(const Weight& lambda) {
  const int m = static_cast<int>(lambda.size());
  return LaurentPoly(Profile::xs(m), Monomial::x_power(lambda));
}

LaurentPoly demazure_quotient(const Weight& lambda, int i) {
  const int m = static_cast<int>(lambda.size());
  if (i < 1 || i >= m) throw std::out_of_range("demazure_quotient: index out of range");
  LaurentPoly r = LaurentPoly::zero(Profile::xs(m));
  for (const auto& [w, c] : demazure_terms(lambda, i)) r.add_term(Monomial::x_power(w), c);
  return r;
}

std::vector<Weight> weight_orbit(const Weight& lambda) {
  Weight w = lambda;
  std::sort(w.begin(), w.end());
  std::vector<Weight> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

LaurentPoly orbit_sum(const Weight& lambda) {
  const int m = static_cast<int>(lambda.size());
  LaurentPoly r = LaurentPoly::zero(Profile::xs(m));
  for (const Weight& mu : weight_orbit(lambda)) r.add_term(Monomial::x_power(mu), 1);
  return r;
}

LaurentPoly swap_variables(const LaurentPoly& p, int i) {
  const int m = p.profile().rank();
  LaurentPoly r = LaurentPoly::zero(p.profile());
  for (const auto& [mono, c] : p.terms()) {
    Weight x = mono.x_exponents(m);
    std::swap(x[static_cast<std::size_t>(i - 1)], x[static_cast<std::size_t>(i)]);
    Monomial rest = mono;
    for (int k = 1; k <= m; ++k) rest = rest.without(var::x(k));
    r.add_term(rest * Monomial::x_power(x), c);
  }
  return r;
}

bool is_symmetric(const LaurentPoly& p) {
  if (p.profile().kind() != Profile::Kind::XS) return true;
  for (int i = 1; i < p.profile().rank(); ++i)
    if (!(swap_variables(p, i) == p)) return false;
  return true;
}

LaurentPoly elementary_symmetric(int m, int k) { return orbit_sum(fundamental_weight(m, k)); }

}  // namespace iwahori
