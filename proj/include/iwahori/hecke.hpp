#pragma once

// Extended affine Hecke algebra of GL_m in the Bernstein basis e^lambda T_w,
// lambda in Z^m, w in S_m, with coefficients in Z[s, s^-1] and v = s^2.
//
// Relations: (T_s + 1)(T_s - v) = 0, braid relations, and
//   T_{s_i} e^mu = e^{s_i mu} T_{s_i} + (v - 1)(e^mu - e^{s_i mu}) / (1 - e^{-alpha_i}).

#include <compare>
#include <map>
#include <string>

#include "iwahori/laurent.hpp"
#include "iwahori/weyl.hpp"

namespace iwahori {

struct BernsteinKey {
  Weight lambda;
  Perm w;
  auto operator<=>(const BernsteinKey&) const = default;
};

class HeckeElt {
 public:
  using Terms = std::map<BernsteinKey, LaurentPoly>;

  explicit HeckeElt(int m);

  static HeckeElt zero(int m) { return HeckeElt(m); }
  static HeckeElt one(int m);
  /// c * 1 with c in the {s} profile.
  static HeckeElt scalar(int m, const LaurentPoly& c);
  static HeckeElt e(const Weight& lambda);
  /// T_w for a finite permutation w.
  static HeckeElt T(const Perm& w);
  static HeckeElt basis(const Weight& lambda, const Perm& w, const LaurentPoly& c);

  int rank() const { return m_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const Weight& lambda, const Perm& w) const;

  void add_term(const BernsteinKey& key, const LaurentPoly& c);
  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  HeckeElt operator-() const;
  HeckeElt scaled(const LaurentPoly& c) const;

  /// Canonical text, e.g. `(s^2 - 1) + s^4*e[1,0,-1]*T[3,2,1]`.
  std::string to_string() const;

  bool operator==(const HeckeElt& o) const { return m_ == o.m_ && terms_ == o.terms_; }

 private:
  int m_;
  Terms terms_;
};

HeckeElt operator+(HeckeElt a, const HeckeElt& b);
HeckeElt operator-(HeckeElt a, const HeckeElt& b);
HeckeElt hecke_mul(const HeckeElt& a, const HeckeElt& b);
inline HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) { return hecke_mul(a, b); }

/// Integer power; negative exponents are accepted for T_{w_1^k} only via t_omega.
HeckeElt hecke_pow(const HeckeElt& h, int k);

/// s^k in the {s} profile.
LaurentPoly s_power(int k);
/// v = s^2.
LaurentPoly v_param();

/// T_{w_1^k}: e^{-q(1,..,1)} s^{r(r-m)} e^{-omega_r} T_{sigma_r} for k = qm + r.
HeckeElt t_omega(int m, int k);
/// T_{s_i}, 1 <= i <= m; the affine generator is T_{w_1}^-1 T_{s_1} T_{w_1}.
HeckeElt t_simple(int m, int i);
/// T_{s_i}^-1 = v^-1 T_{s_i} + (v^-1 - 1).
HeckeElt t_inverse(int m, int i);
/// T_w along a reduced word w = w_1^k s_{i_1} ... s_{i_l}.
HeckeElt t_element(const AffineWeylElt& w);
/// T_w^-1.
HeckeElt t_element_inverse(const AffineWeylElt& w);

/// lambda = lambda_plus - lambda_minus with both parts dominant; lambda_minus
/// is the smallest such part with last entry 0.
std::pair<Weight, Weight> dominant_split(const Weight& lambda);
/// e^lambda rebuilt as s^-l(+) T_{t^{lambda+}} (s^-l(-) T_{t^{lambda-}})^-1.
HeckeElt translation_via_dominant(const Weight& lambda);

/// Sum of e^mu over the S_m-orbit of lambda (Bernstein center).
HeckeElt central_element(const Weight& lambda);

/// Image under s -> 1 in the group algebra of the extended affine Weyl group.
std::map<AffineWeylElt, BigInt> specialize_at_one(const HeckeElt& h);

/// Number of cached T_w e^mu expansions held by the calling thread.
std::size_t hecke_cache_size();
void clear_hecke_cache();

}  // namespace iwahori
