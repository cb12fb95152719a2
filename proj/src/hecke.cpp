#include "iwahori/hecke.hpp"

#include <sstream>
#include <stdexcept>

namespace iwahori {

namespace {

const Profile kS = Profile::s();

// Finite part of an element: permutation -> coefficient, for one fixed e^lambda.
using FiniteSum = std::map<Perm, LaurentPoly>;

void accumulate(FiniteSum& x, const Perm& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

// x * T_{s_i}, i finite.
FiniteSum right_mul_simple(const FiniteSum& x, int m, int i) {
  const Perm s = simple_transposition(m, i);
  const LaurentPoly v = v_param();
  const LaurentPoly v_minus_one = v - LaurentPoly::one(kS);
  FiniteSum r;
  for (const auto& [w, c] : x) {
    Perm ws = compose(w, s);
    if (perm_length(ws) > perm_length(w)) {
      accumulate(r, ws, c);
    } else {
      accumulate(r, w, c * v_minus_one);
      accumulate(r, ws, c * v);
    }
  }
  return r;
}

FiniteSum right_mul(FiniteSum x, int m, const Perm& u) {
  for (int i : finite_reduced_word(u)) x = right_mul_simple(x, m, i);
  return x;
}

using Expansion = std::map<BernsteinKey, LaurentPoly>;

void accumulate(Expansion& x, BernsteinKey key, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

std::map<std::pair<Perm, Weight>, Expansion>& cache() {
  thread_local std::map<std::pair<Perm, Weight>, Expansion> c;
  return c;
}

// T_w e^mu in normal order, peeling a right descent w = w' s:
//   T_w e^mu = (T_{w'} e^{s mu}) T_s + (1 - v) sum_k T_{w'} e^{kappa_k}
// where sum_k e^{kappa_k} = (e^{s mu} - e^mu) / (1 - e^{-alpha}).
const Expansion& move_left(const Perm& w, const Weight& mu) {
  auto& memo = cache();
  auto key = std::make_pair(w, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int m = static_cast<int>(mu.size());
  Expansion result;
  int descent = 0;
  for (int i = 0; i + 1 < m; ++i)
    if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i) + 1]) {
      descent = i + 1;
      break;
    }
  if (descent == 0) {
    result.emplace(BernsteinKey{mu, w}, LaurentPoly::one(kS));
  } else {
    const Perm wp = compose(w, simple_transposition(m, descent));
    const Weight smu = reflect(mu, descent);
    for (const auto& [k, c] : move_left(wp, smu)) {
      for (const auto& [u, cu] : right_mul_simple(FiniteSum{{k.w, c}}, m, descent))
        accumulate(result, BernsteinKey{k.lambda, u}, cu);
    }
    const LaurentPoly one_minus_v = LaurentPoly::one(kS) - v_param();
    for (const auto& [kappa, sign] : demazure_terms(smu, descent)) {
      const LaurentPoly factor = one_minus_v.scaled(sign);
      for (const auto& [k, c] : move_left(wp, kappa)) accumulate(result, k, c * factor);
    }
  }
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

LaurentPoly s_power(int k) { return LaurentPoly::variable(kS, var::s, k); }
LaurentPoly v_param() { return s_power(2); }

std::size_t hecke_cache_size() { return cache().size(); }
void clear_hecke_cache() { cache().clear(); }

// ------------------------------------------------------------ HeckeElt

HeckeElt::HeckeElt(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("Hecke algebra rank must be positive");
}

HeckeElt HeckeElt::one(int m) { return basis(zero_weight(m), identity_perm(m), LaurentPoly::one(kS)); }

HeckeElt HeckeElt::scalar(int m, const LaurentPoly& c) { return basis(zero_weight(m), identity_perm(m), c); }

HeckeElt HeckeElt::e(const Weight& lambda) {
  const int m = static_cast<int>(lambda.size());
  return basis(lambda, identity_perm(m), LaurentPoly::one(kS));
}

HeckeElt HeckeElt::T(const Perm& w) {
  const int m = static_cast<int>(w.size());
  return basis(zero_weight(m), w, LaurentPoly::one(kS));
}

HeckeElt HeckeElt::basis(const Weight& lambda, const Perm& w, const LaurentPoly& c) {
  if (lambda.size() != w.size()) throw std::invalid_argument("basis element rank mismatch");
  HeckeElt h(static_cast<int>(lambda.size()));
  h.add_term(BernsteinKey{lambda, w}, c);
  return h;
}

LaurentPoly HeckeElt::coefficient(const Weight& lambda, const Perm& w) const {
  auto it = terms_.find(BernsteinKey{lambda, w});
  return it == terms_.end() ? LaurentPoly::zero(kS) : it->second;
}

void HeckeElt::add_term(const BernsteinKey& key, const LaurentPoly& c) {
  if (static_cast<int>(key.lambda.size()) != m_ || static_cast<int>(key.w.size()) != m_)
    throw std::invalid_argument("Bernstein term of wrong rank");
  if (!(c.profile() == kS)) throw ProfileError("Hecke coefficients must lie in Z[s, s^-1]");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  if (m_ != o.m_) throw std::invalid_argument("Hecke rank mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  if (m_ != o.m_) throw std::invalid_argument("Hecke rank mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

HeckeElt HeckeElt::operator-() const {
  HeckeElt r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

HeckeElt HeckeElt::scaled(const LaurentPoly& c) const {
  HeckeElt r(m_);
  for (const auto& [k, coef] : terms_) r.add_term(k, coef * c);
  return r;
}

std::string HeckeElt::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  const Weight zero = zero_weight(m_);
  const Perm id = identity_perm(m_);
  for (const auto& [k, c] : terms_) {
    const bool plain = k.lambda == zero && k.w == id;
    std::string coef = c.to_string();
    bool negative = false;
    if (c.size() == 1 && coef.front() == '-') {
      negative = true;
      coef.erase(0, 1);
    }
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << '-';
    first = false;
    const bool unit = coef == "1";
    if (plain) {
      out << (c.size() > 1 ? "(" + coef + ")" : coef);
      continue;
    }
    if (!unit) out << (c.size() > 1 ? "(" + coef + ")" : coef) << '*';
    bool need_star = false;
    if (k.lambda != zero) {
      out << "e[";
      for (std::size_t i = 0; i < k.lambda.size(); ++i) out << (i ? "," : "") << k.lambda[i];
      out << ']';
      need_star = true;
    }
    if (k.w != id) {
      if (need_star) out << '*';
      out << "T[";
      for (std::size_t i = 0; i < k.w.size(); ++i) out << (i ? "," : "") << k.w[i] + 1;
      out << ']';
    }
  }
  return out.str();
}

HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }

HeckeElt hecke_mul(const HeckeElt& a, const HeckeElt& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("Hecke rank mismatch in product");
  const int m = a.rank();
  HeckeElt r(m);
  // (e^l1 T_w1)(e^l2 T_w2) = e^l1 (T_w1 e^l2) T_w2
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const LaurentPoly cab = ca * cb;
      const Expansion& moved = move_left(ka.w, kb.lambda);
      // Group by translation so each finite part is multiplied by T_w2 once.
      std::map<Weight, FiniteSum> grouped;
      for (const auto& [k, c] : moved) accumulate(grouped[k.lambda], k.w, c);
      for (auto& [nu, fs] : grouped) {
        const Weight lam = ka.lambda + nu;
        for (const auto& [u, c] : right_mul(std::move(fs), m, kb.w)) r.add_term(BernsteinKey{lam, u}, c * cab);
      }
    }
  }
  return r;
}

HeckeElt hecke_pow(const HeckeElt& h, int k) {
  if (k < 0) throw std::invalid_argument("hecke_pow: negative exponent");
  HeckeElt r = HeckeElt::one(h.rank());
  for (int i = 0; i < k; ++i) r = r * h;
  return r;
}

HeckeElt t_omega(int m, int k) {
  const int r = ((k % m) + m) % m;
  const int q = (k - r) / m;
  Weight lambda = -fundamental_weight(m, r);
  for (int& x : lambda) x -= q;
  return HeckeElt::basis(lambda, rotation(m, r), s_power(r * (r - m)));
}

HeckeElt t_simple(int m, int i) {
  if (m < 2 || i < 1 || i > m) throw std::out_of_range("simple reflection index out of range");
  if (i < m) return HeckeElt::T(simple_transposition(m, i));
  return t_omega(m, -1) * HeckeElt::T(simple_transposition(m, 1)) * t_omega(m, 1);
}

HeckeElt t_inverse(int m, int i) {
  const LaurentPoly vinv = s_power(-2);
  return t_simple(m, i).scaled(vinv) + HeckeElt::scalar(m, vinv - LaurentPoly::one(kS));
}

HeckeElt t_element(const AffineWeylElt& w) {
  const int m = w.rank();
  const ReducedWord rw = reduced_word(w);
  HeckeElt r = t_omega(m, rw.omega_power);
  for (int i : rw.word) r = r * t_simple(m, i);
  return r;
}

HeckeElt t_element_inverse(const AffineWeylElt& w) {
  const int m = w.rank();
  const ReducedWord rw = reduced_word(w);
  HeckeElt r = HeckeElt::one(m);
  for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) r = r * t_inverse(m, *it);
  return r * t_omega(m, -rw.omega_power);
}

std::pair<Weight, Weight> dominant_split(const Weight& lambda) {
  const std::size_t m = lambda.size();
  Weight minus(m, 0);
  for (std::size_t i = m - 1; i-- > 0;) {
    const int gap = lambda[i + 1] - lambda[i];
    minus[i] = minus[i + 1] + (gap > 0 ? gap : 0);
  }
  return {lambda + minus, minus};
}

HeckeElt translation_via_dominant(const Weight& lambda) {
  const auto [plus, minus] = dominant_split(lambda);
  const AffineWeylElt tp = AffineWeylElt::translation(plus);
  const AffineWeylElt tm = AffineWeylElt::translation(minus);
  return t_element(tp).scaled(s_power(-tp.length())) * t_element_inverse(tm).scaled(s_power(tm.length()));
}

HeckeElt central_element(const Weight& lambda) {
  HeckeElt r(static_cast<int>(lambda.size()));
  for (const Weight& mu : weight_orbit(lambda)) r += HeckeElt::e(mu);
  return r;
}

std::map<AffineWeylElt, BigInt> specialize_at_one(const HeckeElt& h) {
  std::map<AffineWeylElt, BigInt> out;
  for (const auto& [k, c] : h.terms()) {
    BigInt total = 0;
    for (const auto& [mono, coef] : c.terms()) total += coef;
    if (total == 0) continue;
    AffineWeylElt g(k.lambda, k.w);
    auto [it, inserted] = out.try_emplace(g, total);
    if (!inserted) {
      it->second += total;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

}  // namespace iwahori
