#include "iwahori/weyl.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace iwahori {

Perm identity_perm(int m) {
  Perm p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) r[j] = a.at(static_cast<std::size_t>(b[j]));
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) r[static_cast<std::size_t>(p[j])] = static_cast<int>(j);
  return r;
}

int perm_length(const Perm& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++n;
  return n;
}

Perm simple_transposition(int m, int i) {
  if (i < 1 || i >= m) throw std::out_of_range("finite simple reflection index out of range");
  Perm p = identity_perm(m);
  std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
  return p;
}

Perm rotation(int m, int i) {
  Perm p(static_cast<std::size_t>(m));
  const int shift = ((i % m) + m) % m;
  for (int j = 0; j < m; ++j) p[static_cast<std::size_t>(j)] = (j + shift) % m;
  return p;
}

Weight act(const Perm& w, const Weight& lambda) {
  Weight r(lambda.size());
  for (std::size_t j = 0; j < lambda.size(); ++j) r[static_cast<std::size_t>(w[j])] = lambda[j];
  return r;
}

std::vector<int> finite_reduced_word(const Perm& w) {
  // Strip right descents w(i) > w(i+1); the stripped letters, reversed,
  // spell a reduced word.
  Perm p = w;
  std::vector<int> word;
  bool found = true;
  while (found) {
    found = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        found = true;
        break;
      }
    }
  }
  return {word.rbegin(), word.rend()};
}

bool is_dominant(const Weight& lambda) {
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1]) return false;
  return true;
}

AffineWeylElt::AffineWeylElt(Weight lambda, Perm w) : lambda_(std::move(lambda)), w_(std::move(w)) {
  if (lambda_.size() != w_.size() || lambda_.empty())
    throw std::invalid_argument("translation and permutation ranks differ");
  std::vector<bool> seen(w_.size(), false);
  for (int x : w_) {
    if (x < 0 || x >= static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

AffineWeylElt AffineWeylElt::identity(int m) { return {zero_weight(m), identity_perm(m)}; }

AffineWeylElt AffineWeylElt::translation(Weight lambda) {
  const int m = static_cast<int>(lambda.size());
  return {std::move(lambda), identity_perm(m)};
}

AffineWeylElt AffineWeylElt::finite(Perm w) {
  const int m = static_cast<int>(w.size());
  return {zero_weight(m), std::move(w)};
}

AffineWeylElt AffineWeylElt::simple(int m, int i) {
  if (m < 2 || i < 1 || i > m) throw std::out_of_range("simple reflection index out of range");
  if (i < m) return finite(simple_transposition(m, i));
  Weight lambda = zero_weight(m);
  lambda.front() = -1;
  lambda.back() = 1;
  Perm p = identity_perm(m);
  std::swap(p.front(), p.back());
  return {lambda, p};
}

AffineWeylElt AffineWeylElt::omega(int m, int k) {
  const AffineWeylElt w1(-fundamental_weight(m, 1), rotation(m, 1));
  return w1.pow(k);
}

AffineWeylElt AffineWeylElt::operator*(const AffineWeylElt& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("rank mismatch in Weyl product");
  return {lambda_ + act(w_, o.lambda_), compose(w_, o.w_)};
}

AffineWeylElt AffineWeylElt::inverse() const {
  Perm wi = iwahori::inverse(w_);
  return {-act(wi, lambda_), wi};
}

AffineWeylElt AffineWeylElt::pow(int k) const {
  AffineWeylElt base = k < 0 ? inverse() : *this;
  AffineWeylElt r = identity(rank());
  for (int n = k < 0 ? -k : k; n > 0; n >>= 1) {
    if (n & 1) r = r * base;
    base = base * base;
  }
  return r;
}

int AffineWeylElt::length() const {
  const Perm wi = iwahori::inverse(w_);
  int total = 0;
  for (std::size_t i = 0; i < lambda_.size(); ++i)
    for (std::size_t j = i + 1; j < lambda_.size(); ++j) {
      const int d = lambda_[i] - lambda_[j] + (wi[i] > wi[j] ? 1 : 0);
      total += d < 0 ? -d : d;
    }
  return total;
}

int AffineWeylElt::omega_power() const {
  return -std::accumulate(lambda_.begin(), lambda_.end(), 0);
}

AffineWeylElt AffineWeylElt::flip_translations() const { return {-lambda_, w_}; }

std::string AffineWeylElt::to_string() const {
  std::ostringstream out;
  out << "t[";
  for (std::size_t i = 0; i < lambda_.size(); ++i) out << (i ? "," : "") << lambda_[i];
  out << "]*p[";
  for (std::size_t i = 0; i < w_.size(); ++i) out << (i ? "," : "") << w_[i] + 1;
  out << ']';
  return out.str();
}

namespace {

struct WeylParser {
  std::string_view text;
  int m;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("Weyl literal at offset " + std::to_string(pos) + ": " + what);
  }
  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  int integer() {
    skip();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) neg = text[pos++] == '-';
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    const int v = std::stoi(std::string(text.substr(start, pos - start)));
    return neg ? -v : v;
  }
  std::vector<int> bracket_list() {
    if (!eat('[')) fail("expected '['");
    std::vector<int> v;
    if (!eat(']')) {
      do v.push_back(integer());
      while (eat(','));
      if (!eat(']')) fail("expected ']'");
    }
    if (static_cast<int>(v.size()) != m) fail("expected " + std::to_string(m) + " entries");
    return v;
  }
  AffineWeylElt factor() {
    skip();
    if (pos >= text.size()) fail("unexpected end of input");
    if (text[pos] == 't') {
      ++pos;
      return AffineWeylElt::translation(bracket_list());
    }
    if (text[pos] == 'p') {
      ++pos;
      std::vector<int> images = bracket_list();
      for (int& x : images) --x;
      try {
        return AffineWeylElt::finite(images);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    if (text.substr(pos, 2) == "W1") {
      pos += 2;
      int k = 1;
      if (eat('^')) k = integer();
      return AffineWeylElt::omega(m, k);
    }
    if (text[pos] == 's') {
      ++pos;
      const int i = integer();
      if (i < 1 || i > m || m < 2) fail("no simple reflection s" + std::to_string(i));
      return AffineWeylElt::simple(m, i);
    }
    fail("unexpected '" + std::string(1, text[pos]) + "'");
  }
  AffineWeylElt run() {
    AffineWeylElt r = factor();
    while (eat('*')) r = r * factor();
    skip();
    if (pos != text.size()) fail("trailing input");
    return r;
  }
};

}  // namespace

AffineWeylElt AffineWeylElt::parse(std::string_view text, int m) {
  if (m < 1) throw ParseError("rank must be positive");
  return WeylParser{text, m}.run();
}

ReducedWord reduced_word(const AffineWeylElt& w) {
  const int m = w.rank();
  ReducedWord rw;
  AffineWeylElt cur = w;
  std::vector<int> stripped;
  int len = cur.length();
  while (len > 0) {
    bool found = false;
    for (int i = 1; i <= m && !found; ++i) {
      AffineWeylElt next = cur * AffineWeylElt::simple(m, i);
      const int l = next.length();
      if (l < len) {
        cur = next;
        len = l;
        stripped.push_back(i);
        found = true;
      }
    }
    if (!found) throw std::logic_error("no right descent for element of positive length");
  }
  rw.omega_power = cur.omega_power();
  if (!(cur == AffineWeylElt::omega(m, rw.omega_power)))
    throw std::logic_error("length-zero remainder is not a power of w_1");
  rw.word.assign(stripped.rbegin(), stripped.rend());
  return rw;
}

AffineWeylElt recompose(int m, const ReducedWord& rw) {
  AffineWeylElt r = AffineWeylElt::omega(m, rw.omega_power);
  for (int i : rw.word) r = r * AffineWeylElt::simple(m, i);
  return r;
}

int conjugate_simple(int m, int i, int j) {
  if (i < 1 || i > m) throw std::out_of_range("simple reflection index out of range");
  return (((i - 1 + j) % m) + m) % m + 1;
}

}  // namespace iwahori
