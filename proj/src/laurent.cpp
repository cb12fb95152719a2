#include "iwahori/laurent.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace iwahori {

namespace {

std::atomic<std::size_t>& term_cap() {
  static std::atomic<std::size_t> cap = [] {
    const char* env = std::getenv("IWAHORI_MAX_TERMS");
    if (env == nullptr || *env == '\0') return std::size_t{0};
    return static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
  }();
  return cap;
}

}  // namespace

std::size_t max_terms() { return term_cap().load(); }
void set_max_terms(std::size_t cap) { term_cap().store(cap); }

// ---------------------------------------------------------------- Profile

Profile Profile::xs(int m) {
  if (m < 1) throw ProfileError("x-profile needs rank >= 1");
  return Profile(Kind::XS, m);
}

bool Profile::allows(int var_id) const {
  switch (kind_) {
    case Kind::S:
      return var_id == var::s;
    case Kind::GS:
      return var_id == var::g || var_id == var::s;
    case Kind::XS:
      return var_id == var::s || (var_id >= var::x(1) && var_id <= var::x(rank_));
  }
  return false;
}

std::vector<int> Profile::variables() const {
  switch (kind_) {
    case Kind::S:
      return {var::s};
    case Kind::GS:
      return {var::g, var::s};
    case Kind::XS: {
      std::vector<int> v{var::s};
      for (int i = 1; i <= rank_; ++i) v.push_back(var::x(i));
      return v;
    }
  }
  return {};
}

std::string Profile::describe() const {
  switch (kind_) {
    case Kind::S:
      return "{s}";
    case Kind::GS:
      return "{g,s}";
    case Kind::XS:
      return "{s,x1..x" + std::to_string(rank_) + "}";
  }
  return "?";
}

std::string variable_name(int var_id) {
  if (var_id == var::g) return "g";
  if (var_id == var::s) return "s";
  return "x" + std::to_string(var_id - 1);
}

// --------------------------------------------------------------- Monomial

Monomial Monomial::of(int var_id, int exponent) {
  Monomial m;
  if (exponent != 0) m.entries_.emplace_back(var_id, exponent);
  return m;
}

Monomial Monomial::x_power(std::span<const int> lambda) {
  Monomial m;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] != 0) m.entries_.emplace_back(var::x(static_cast<int>(i) + 1), lambda[i]);
  return m;
}

int Monomial::exponent(int var_id) const {
  for (const auto& [v, e] : entries_)
    if (v == var_id) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.entries_.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin(), b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      r.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      r.entries_.push_back(*b++);
    } else {
      const int e = a->second + b->second;
      if (e != 0) r.entries_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return r;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int k) const {
  Monomial r;
  if (k == 0) return r;
  r.entries_ = entries_;
  for (auto& [v, e] : r.entries_) e *= k;
  return r;
}

std::vector<int> Monomial::x_exponents(int m) const {
  std::vector<int> out(static_cast<std::size_t>(m), 0);
  for (const auto& [v, e] : entries_)
    if (v >= var::x(1) && v <= var::x(m)) out[static_cast<std::size_t>(v - var::x(1))] = e;
  return out;
}

Monomial Monomial::without(int var_id) const {
  Monomial r;
  for (const auto& entry : entries_)
    if (entry.first != var_id) r.entries_.push_back(entry);
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  // Dense lexicographic comparison by increasing variable id; absent = 0.
  auto a = entries_.begin(), b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first))
      return a->second <=> 0;
    if (a == entries_.end() || b->first < a->first) return 0 <=> b->second;
    if (a->second != b->second) return a->second <=> b->second;
    ++a;
    ++b;
  }
  return std::strong_ordering::equal;
}

// ------------------------------------------------------------ LaurentPoly

LaurentPoly::LaurentPoly(Profile p, const BigInt& c) : profile_(p) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPoly::LaurentPoly(Profile p, const Monomial& mono, const BigInt& c) : profile_(p) {
  for (const auto& [v, e] : mono.entries())
    if (!profile_.allows(v))
      throw ProfileError("variable " + variable_name(v) + " not in profile " + profile_.describe());
  if (c != 0) terms_.emplace(mono, c);
}

LaurentPoly LaurentPoly::variable(Profile p, int var_id, int exponent) {
  return LaurentPoly(p, Monomial::of(var_id, exponent));
}

std::optional<BigInt> LaurentPoly::as_constant() const {
  if (terms_.empty()) return BigInt(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

std::optional<std::pair<Monomial, BigInt>> LaurentPoly::as_term() const {
  if (terms_.size() != 1) return std::nullopt;
  return *terms_.begin();
}

BigInt LaurentPoly::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::check_compatible(const LaurentPoly& o, const char* op) const {
  if (!(profile_ == o.profile_))
    throw ProfileError(std::string("profile mismatch in ") + op + ": " + profile_.describe() +
                       " vs " + o.profile_.describe());
}

void LaurentPoly::check_limit() const {
  const std::size_t cap = max_terms();
  if (cap != 0 && terms_.size() > cap)
    throw TermLimitExceeded("polynomial has " + std::to_string(terms_.size()) +
                            " terms, cap is " + std::to_string(cap));
}

void LaurentPoly::add_term(const Monomial& mono, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_compatible(o, "add");
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  check_limit();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_compatible(o, "sub");
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  check_limit();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [mono, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
  if (c == 0) return LaurentPoly(profile_);
  LaurentPoly r = *this;
  for (auto& [mono, coef] : r.terms_) coef *= c;
  return r;
}

LaurentPoly LaurentPoly::times(const Monomial& mono) const {
  LaurentPoly r(profile_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, c);
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) {
    auto t = as_term();
    if (!t || (t->second != 1 && t->second != -1))
      throw std::domain_error("negative power of a non-unit Laurent polynomial");
    BigInt c = (k % 2 == 0) ? BigInt(1) : t->second;
    return LaurentPoly(profile_, t->first.pow(k), c);
  }
  LaurentPoly result = one(profile_);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::reprofiled(Profile p) const {
  LaurentPoly r(p);
  for (const auto& [mono, c] : terms_) {
    for (const auto& [v, e] : mono.entries())
      if (!p.allows(v))
        throw ProfileError("cannot move " + variable_name(v) + " into profile " + p.describe());
    r.terms_.emplace_hint(r.terms_.end(), mono, c);
  }
  return r;
}

int LaurentPoly::min_exponent(int var_id) const {
  int lo = 0;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    const int e = mono.exponent(var_id);
    lo = first ? e : std::min(lo, e);
    first = false;
  }
  return lo;
}

int LaurentPoly::max_exponent(int var_id) const {
  int hi = 0;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    const int e = mono.exponent(var_id);
    hi = first ? e : std::max(hi, e);
    first = false;
  }
  return hi;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return profile_ == o.profile_ && terms_ == o.terms_;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.profile() == b.profile()))
    throw ProfileError("profile mismatch in mul: " + a.profile().describe() + " vs " +
                       b.profile().describe());
  LaurentPoly r(a.profile());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
  const std::size_t cap = max_terms();
  if (cap != 0 && r.size() > cap)
    throw TermLimitExceeded("product has " + std::to_string(r.size()) + " terms, cap is " +
                            std::to_string(cap));
  return r;
}

// ------------------------------------------------------------ text format

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& mono = it->first;
    BigInt c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mono.is_one() || c != 1) {
      out << c;
      need_star = true;
    }
    for (const auto& [v, e] : mono.entries()) {
      if (need_star) out << '*';
      out << variable_name(v);
      if (e != 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, Profile p) : text_(text), profile_(p) {}

  LaurentPoly run() {
    LaurentPoly r = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial literal at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly r(profile_);
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    LaurentPoly t = term();
    r += negate ? -t : t;
    while (true) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        break;
    }
    return r;
  }

  LaurentPoly term() {
    LaurentPoly r = power();
    while (eat('*')) r = r * power();
    return r;
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (eat('^')) {
      skip();
      bool neg = false;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        neg = text_[pos_] == '-';
        ++pos_;
      }
      const long long k = integer_token();
      try {
        base = base.pow(static_cast<int>(neg ? -k : k));
      } catch (const std::domain_error& e) {
        fail(e.what());
      }
    }
    return base;
  }

  long long integer_token() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  LaurentPoly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly(profile_, BigInt(std::string(text_.substr(start, pos_ - start))));
    }
    if (c == 'g' || c == 's' || c == 'v') {
      ++pos_;
      const int id = (c == 'g') ? var::g : var::s;
      if (!profile_.allows(id)) fail(std::string("variable ") + c + " not in profile " + profile_.describe());
      return LaurentPoly::variable(profile_, id, c == 'v' ? 2 : 1);
    }
    if (c == 'x') {
      ++pos_;
      const long long i = integer_token();
      const int id = var::x(static_cast<int>(i));
      if (i < 1 || !profile_.allows(id))
        fail("variable x" + std::to_string(i) + " not in profile " + profile_.describe());
      return LaurentPoly::variable(profile_, id);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Profile profile_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, Profile p) { return PolyParser(text, p).run(); }

// ------------------------------------------------------------- division

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.profile() == b.profile())) throw ProfileError("profile mismatch in exact_divide");
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return a;

  // Shift both into the polynomial ring; b then has no monomial factor, so
  // Laurent divisibility coincides with polynomial divisibility.
  Monomial shift_a, shift_b;
  for (int v : a.profile().variables()) {
    shift_a = shift_a * Monomial::of(v, -a.min_exponent(v));
    shift_b = shift_b * Monomial::of(v, -b.min_exponent(v));
  }
  LaurentPoly rem = a.times(shift_a);
  const LaurentPoly divisor = b.times(shift_b);
  const auto& [lead_mono, lead_coef] = *divisor.terms().rbegin();

  LaurentPoly quotient(a.profile());
  while (!rem.is_zero()) {
    const auto& [m, c] = *rem.terms().rbegin();
    const Monomial ratio = m * lead_mono.inverse();
    for (const auto& [v, e] : ratio.entries())
      if (e < 0) return std::nullopt;
    if (c % lead_coef != 0) return std::nullopt;
    const BigInt q = c / lead_coef;
    quotient.add_term(ratio, q);
    rem -= divisor.times(ratio).scaled(q);
  }
  return quotient.times(shift_b * shift_a.inverse());
}

Rational specialize(const LaurentPoly& p, const std::map<int, Rational>& assignments) {
  for (const auto& [v, value] : assignments)
    if (value == 0) throw std::invalid_argument("variable " + variable_name(v) + " assigned 0");
  Rational total = 0;
  for (const auto& [mono, c] : p.terms()) {
    Rational t = Rational(c);
    for (const auto& [v, e] : mono.entries()) {
      auto it = assignments.find(v);
      if (it == assignments.end())
        throw std::invalid_argument("no value for variable " + variable_name(v));
      Rational base = e > 0 ? it->second : Rational(1) / it->second;
      for (int k = 0; k < (e > 0 ? e : -e); ++k) t *= base;
    }
    total += t;
  }
  return total;
}

}  // namespace iwahori
