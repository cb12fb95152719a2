#include "iwahori/expr.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "iwahori/polyrep.hpp"
#include "iwahori/rings.hpp"

namespace iwahori {

namespace {

class Evaluator {
 public:
  Evaluator(std::string_view text, int m) : text_(text), m_(m), xs_(Profile::xs(m)) {}

  ExprValue run() {
    ExprValue v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("eval: " + what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  long integer() {
    skip();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) neg = text_[pos_++] == '-';
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) fail("integer too large");
    const long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  std::vector<int> int_list() {
    expect('[');
    std::vector<int> out;
    if (accept(']')) return out;
    do out.push_back(static_cast<int>(integer()));
    while (accept(','));
    expect(']');
    return out;
  }

  // Raw text up to the parenthesis closing the one just consumed.
  std::string balanced() {
    int depth = 1;
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      if (text_[pos_] == '(') ++depth;
      if (text_[pos_] == ')' && --depth == 0) {
        std::string inner(text_.substr(start, pos_ - start));
        ++pos_;
        return inner;
      }
      ++pos_;
    }
    fail("unbalanced parenthesis");
  }

  bool is_s_only(const LaurentPoly& p) const {
    for (const auto& [mono, c] : p.terms())
      for (const auto& [id, e] : mono.entries())
        if (id != var::s) return false;
    return true;
  }

  LaurentPoly as_s(const LaurentPoly& p, const char* op) const {
    if (!is_s_only(p)) fail(std::string("polynomial with x-variables cannot ") + op + " a Hecke element");
    return p.reprofiled(Profile::s());
  }

  ExprValue add(const ExprValue& a, const ExprValue& b, bool minus) {
    const auto* pa = std::get_if<LaurentPoly>(&a);
    const auto* pb = std::get_if<LaurentPoly>(&b);
    if (pa && pb) return minus ? *pa - *pb : *pa + *pb;
    const HeckeElt ha = pa ? HeckeElt::scalar(m_, as_s(*pa, "be added to")) : std::get<HeckeElt>(a);
    const HeckeElt hb = pb ? HeckeElt::scalar(m_, as_s(*pb, "be added to")) : std::get<HeckeElt>(b);
    return minus ? ha - hb : ha + hb;
  }

  ExprValue mul(const ExprValue& a, const ExprValue& b) {
    const auto* pa = std::get_if<LaurentPoly>(&a);
    const auto* pb = std::get_if<LaurentPoly>(&b);
    if (pa && pb) return *pa * *pb;
    if (!pa && pb) return act(std::get<HeckeElt>(a), *pb);
    if (pa && !pb) return std::get<HeckeElt>(b).scaled(as_s(*pa, "scale"));
    return std::get<HeckeElt>(a) * std::get<HeckeElt>(b);
  }

  ExprValue power(const ExprValue& base, long k) {
    if (const auto* p = std::get_if<LaurentPoly>(&base)) {
      if (k < 0 && !p->as_term()) fail("negative power of a non-monomial");
      return p->pow(static_cast<int>(k));
    }
    if (k < 0) fail("negative power of a Hecke element; use Tinv(..) or Tw[-k]");
    return hecke_pow(std::get<HeckeElt>(base), static_cast<int>(k));
  }

  ExprValue expr() {
    ExprValue v = term();
    while (true) {
      if (accept('+'))
        v = add(v, term(), false);
      else if (accept('-'))
        v = add(v, term(), true);
      else
        return v;
    }
  }

  ExprValue term() {
    ExprValue v = unary();
    while (accept('*')) v = mul(v, unary());
    return v;
  }

  ExprValue unary() {
    if (accept('-')) {
      const ExprValue v = unary();
      if (const auto* p = std::get_if<LaurentPoly>(&v)) return -*p;
      return -std::get<HeckeElt>(v);
    }
    ExprValue v = atom();
    if (accept('^')) v = power(v, integer());
    return v;
  }

  void check_weight(const std::vector<int>& w) const {
    if (static_cast<int>(w.size()) != m_) fail("weight needs " + std::to_string(m_) + " entries");
  }

  ExprValue atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (accept('(')) {
      ExprValue v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly(xs_, BigInt(integer()));
    if (accept_word("Tinv(")) return t_element_inverse(weyl(balanced()));
    if (accept_word("Tw[")) {
      const long k = integer();
      expect(']');
      return t_omega(m_, static_cast<int>(k));
    }
    if (accept_word("T[")) {
      const long i = integer();
      expect(']');
      if (i < 1 || i > m_ || m_ < 2) fail("T[i] needs 1 <= i <= m and m >= 2");
      return t_simple(m_, static_cast<int>(i));
    }
    if (accept_word("T(")) return t_element(weyl(balanced()));
    if (accept_word("e")) {
      const auto w = int_list();
      check_weight(w);
      return HeckeElt::e(w);
    }
    if (accept_word("s")) return LaurentPoly::variable(xs_, var::s);
    if (accept_word("v")) return LaurentPoly::variable(xs_, var::s, 2);
    if (accept_word("x")) {
      const long i = integer();
      if (i < 1 || i > m_) fail("variable x" + std::to_string(i) + " outside x1..x" + std::to_string(m_));
      return LaurentPoly::variable(xs_, var::x(static_cast<int>(i)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  AffineWeylElt weyl(const std::string& literal) const {
    try {
      return AffineWeylElt::parse(literal, m_);
    } catch (const std::exception& e) {
      throw ParseError(std::string("eval: ") + e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int m_;
  Profile xs_;
};

}  // namespace

ExprValue evaluate(std::string_view text, int m) {
  if (m < 1) throw ParseError("eval: m must be positive");
  return Evaluator(text, m).run();
}

std::string to_string(const ExprValue& v) {
  if (const auto* p = std::get_if<LaurentPoly>(&v)) return p->to_string();
  return std::get<HeckeElt>(v).to_string();
}

}  // namespace iwahori
