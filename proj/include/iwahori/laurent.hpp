#pragma once

// Exact sparse Laurent polynomials with arbitrary-precision integer coefficients.
//
// Every polynomial carries a Profile naming the variables it may use. Three
// profiles exist: {s}, {g, s} and {s, x1..xm}. Variable ids are global
// (g = 0, s = 1, x_i = 1 + i) so that the canonical monomial order is the
// same lexicographic order on (variable-id, exponent) in every profile.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace iwahori {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace var {
inline constexpr int g = 0;
inline constexpr int s = 1;
/// Id of x_i, 1-based.
constexpr int x(int i) { return 1 + i; }
}  // namespace var

struct ProfileError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when a result exceeds the term cap set by IWAHORI_MAX_TERMS.
struct TermLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Profile {
 public:
  enum class Kind { S, GS, XS };

  static Profile s() { return Profile(Kind::S, 0); }
  static Profile gs() { return Profile(Kind::GS, 0); }
  static Profile xs(int m);

  Kind kind() const { return kind_; }
  /// m for the {s, x1..xm} profile, 0 otherwise.
  int rank() const { return rank_; }
  bool allows(int var_id) const;
  std::vector<int> variables() const;
  std::string describe() const;

  bool operator==(const Profile&) const = default;

 private:
  Profile(Kind k, int rank) : kind_(k), rank_(rank) {}
  Kind kind_;
  int rank_;
};

std::string variable_name(int var_id);

/// Sparse exponent vector; entries sorted by variable id, exponents nonzero.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(int var_id, int exponent);
  /// x^lambda: exponent lambda[i-1] on x_i.
  static Monomial x_power(std::span<const int> lambda);

  int exponent(int var_id) const;
  const std::vector<std::pair<int, int>>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(int k) const;
  /// Exponents of x_1..x_m as a dense vector.
  std::vector<int> x_exponents(int m) const;
  /// Copy with the given variable removed.
  Monomial without(int var_id) const;

  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial& o) const = default;

 private:
  std::vector<std::pair<int, int>> entries_;
};

class LaurentPoly {
 public:
  using Terms = std::map<Monomial, BigInt>;

  explicit LaurentPoly(Profile p) : profile_(p) {}
  LaurentPoly(Profile p, const BigInt& c);
  LaurentPoly(Profile p, const Monomial& mono, const BigInt& c = 1);

  static LaurentPoly zero(Profile p) { return LaurentPoly(p); }
  static LaurentPoly one(Profile p) { return LaurentPoly(p, BigInt(1)); }
  static LaurentPoly variable(Profile p, int var_id, int exponent = 1);
  /// Parses the text grammar, e.g. "3*s^-2*x1^2 - x2".
  static LaurentPoly parse(std::string_view text, Profile p);

  const Profile& profile() const { return profile_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the empty monomial if the polynomial is a constant.
  std::optional<BigInt> as_constant() const;
  std::optional<std::pair<Monomial, BigInt>> as_term() const;
  BigInt coefficient(const Monomial& mono) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  /// Adds c * mono in place.
  void add_term(const Monomial& mono, const BigInt& c);

  LaurentPoly operator-() const;
  LaurentPoly scaled(const BigInt& c) const;
  LaurentPoly times(const Monomial& mono) const;
  LaurentPoly pow(int k) const;
  /// Same terms under a different, compatible profile.
  LaurentPoly reprofiled(Profile p) const;

  int min_exponent(int var_id) const;
  int max_exponent(int var_id) const;

  std::string to_string() const;

  bool operator==(const LaurentPoly& o) const;

 private:
  void check_compatible(const LaurentPoly& o, const char* op) const;
  void check_limit() const;

  Profile profile_;
  Terms terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

/// a/b if the quotient is again a Laurent polynomial, nullopt otherwise.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Exact evaluation at nonzero rational values; every variable of p must be
/// assigned.
Rational specialize(const LaurentPoly& p, const std::map<int, Rational>& assignments);

/// Current term cap (0 = unlimited), read once from IWAHORI_MAX_TERMS.
std::size_t max_terms();
void set_max_terms(std::size_t cap);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace iwahori
