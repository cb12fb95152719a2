#pragma once

// Equivariant K-theory of the subregular Springer fiber of GL_m: a chain of
// m-1 projective lines V_1..V_{m-1}, V_i joining the torus-fixed flags p_i
// and p_{i+1}. Classes are recorded by their values at p_1..p_m, which are
// Laurent polynomials in g (the GL_1 character) and s (the loop rotation).
//
// Basis vectors u_1..u_m carry weights g, s^{m-2}, s^{m-4}, .., s^{2-m}. At
// p_k the graded lines F_i/F_{i-1} are spanned by u_2..u_k, u_1, u_{k+1}..u_m.

#include <optional>
#include <stdexcept>
#include <vector>

#include "iwahori/hecke.hpp"
#include "iwahori/laurent.hpp"
#include "iwahori/linalg.hpp"

namespace iwahori {

/// Values at p_1..p_m, each in the {g,s} profile.
using KTuple = std::vector<LaurentPoly>;

struct FixedFlagTable {
  int m = 0;
  /// weights[k][i]: weight of F_{i+1}/F_i at p_{k+1}.
  std::vector<std::vector<Monomial>> weights;
};

/// Raised when the image of a class under a generator leaves the lattice
/// spanned by the theorem basis.
struct KernelStabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FixedFlagTable build_fixed_flags(int m);
/// Weight of u_j.
Monomial u_weight(int m, int j);
/// L_lambda: at p_k the product of graded weights raised to lambda.
KTuple restrict_line_bundle(const FixedFlagTable& flags, const Weight& lambda);
/// Image of a polynomial-module vector, x^mu -> L_{-mu}.
KTuple push_down(const FixedFlagTable& flags, const LaurentPoly& u);
/// x_1 -> g, x_j -> s^{m-2(j-1)} on a symmetric polynomial.
LaurentPoly res_sigma(const LaurentPoly& p);

KTuple scale(const KTuple& t, const LaurentPoly& c);
KTuple add(const KTuple& a, const KTuple& b);
bool is_zero(const KTuple& t);

/// The module with its theorem basis O, s^{i(m-i)} L_{-omega_i} and the
/// polynomial preimages 1, s^{i(m-i)} x^{omega_i} of those classes.
class SpringerModule {
 public:
  explicit SpringerModule(int m);

  int rank() const { return m_; }
  const FixedFlagTable& flags() const { return flags_; }
  const std::vector<KTuple>& theorem_basis() const { return basis_; }
  const std::vector<LaurentPoly>& preimages() const { return preimages_; }
  /// Determinant of the matrix of theorem-basis tuples.
  const LaurentPoly& basis_determinant() const { return solver_.det(); }

  /// Coordinates in the theorem basis when they are Laurent polynomials.
  std::optional<std::vector<LaurentPoly>> coordinates(const KTuple& t) const;
  KTuple tuple_of(const std::vector<LaurentPoly>& coords) const;

  /// h acting on the class with the given coordinates: lift through the
  /// preimages, act in the polynomial module, push down, re-express.
  std::vector<LaurentPoly> k_act(const HeckeElt& h, const std::vector<LaurentPoly>& coords) const;
  /// Same action on tuples; the input must lie in the span.
  KTuple k_act_tuple(const HeckeElt& h, const KTuple& t) const;
  /// Column j holds the coordinates of h acting on the j-th basis class.
  PolyMatrix action_matrix(const HeckeElt& h) const;

 private:
  int m_;
  FixedFlagTable flags_;
  std::vector<LaurentPoly> preimages_;
  std::vector<KTuple> basis_;
  CramerSolver solver_;
};

// ---- the Lusztig basis and the localization model of the chain

struct Frac {
  LaurentPoly num;
  LaurentPoly den;
};
/// Values at p_1..p_m as fractions; used for sheaves on a single line,
/// whose localized values need not be Laurent polynomials.
using FracTuple = std::vector<Frac>;

FracTuple to_fractions(const KTuple& t);
FracTuple add(const FracTuple& a, const FracTuple& b);
FracTuple scale(const FracTuple& a, const LaurentPoly& c);
bool equal(const FracTuple& a, const FracTuple& b);

/// Localized class of a line bundle on V_i with the given fibers at p_i and
/// p_{i+1}: each fiber over (1 - cotangent weight), normalized by the local
/// contribution of the structure sheaf at that point.
FracTuple chain_sheaf(int m, int i, const LaurentPoly& fiber_at_pi, const LaurentPoly& fiber_at_next);
/// Cotangent weight of V_i at p_k, k in {i, i+1}.
LaurentPoly cotangent_weight(int m, int i, int k);
/// O_{V_i}(-1): fibers g at p_i and s^{m-2i} at p_{i+1}.
FracTuple ov_minus_one(int m, int i);
FracTuple ov_minus_point(int m, int i, int k);
/// Skyscraper at an end point p_1 or p_m.
FracTuple skyscraper(int m, int k);

/// Fibers of L_lambda at the two ends of V_j.
std::pair<LaurentPoly, LaurentPoly> fibers_on_line(const FixedFlagTable& flags, const Weight& lambda, int j);

struct DeclaredBases {
  int m = 0;
  /// Rows: O, L_{omega_1}, .., L_{omega_{m-1}}; columns: O_{p_1},
  /// O_{V_1}(-1), .., O_{V_{m-1}}(-1). Entries in {g,s}.
  PolyMatrix change_of_basis;
  LaurentPoly system_determinant;
  /// O_{p_1}, O_{V_1}(-1), .., solved from the change-of-basis system.
  std::vector<FracTuple> lusztig;
  std::vector<KTuple> theorem;
};

/// Solves the change-of-basis system for the Lusztig basis. Row k >= 1 reads
/// L_{omega_k} = s^{(k-1)(m-k)} [sum_{j<=k} O_{V_j}(-1) + sum_{j>k} s^{2(j-k)} O_{V_j}(-1)].
DeclaredBases declared_bases(int m);

/// Kernel vector of the restriction map on monomials x^{mu_0}..x^{mu_m}:
/// signed maximal minors of the m x (m+1) matrix of their tuples.
std::vector<LaurentPoly> kernel_coefficients(const FixedFlagTable& flags, const std::vector<Weight>& mus);

}  // namespace iwahori
