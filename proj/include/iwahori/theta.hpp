#pragma once

// Rank-m theta module with basis IC^0..IC^{m-1}, defined by transporting the
// Springer-fiber action along B_i -> IC^i. Extended indices follow
// IC^{k - mj} = g^j IC^k, and multiplication by s is the shift [-1].

#include <map>
#include <string>
#include <vector>

#include "iwahori/hecke.hpp"
#include "iwahori/linalg.hpp"
#include "iwahori/springer.hpp"

namespace iwahori {

class ThetaModule {
 public:
  explicit ThetaModule(int m);

  int rank() const { return m_; }
  const SpringerModule& springer() const { return springer_; }

  /// T_{s_i}, 1 <= i <= m (requires m >= 2).
  const PolyMatrix& t_simple(int i) const;
  const PolyMatrix& t_w1() const { return t_w1_; }
  const PolyMatrix& t_w1_inverse() const { return t_w1_inv_; }
  /// T_{w_1}^k for any integer k.
  PolyMatrix t_omega(int k) const;
  PolyMatrix e(const Weight& lambda) const;
  PolyMatrix scalar(const LaurentPoly& c) const;
  PolyMatrix of(const HeckeElt& h) const { return springer_.action_matrix(h); }

  /// Coordinates of IC^k for any integer k.
  std::vector<LaurentPoly> ic(int k) const;

 private:
  int m_;
  SpringerModule springer_;
  std::vector<PolyMatrix> t_simple_;
  PolyMatrix t_w1_;
  PolyMatrix t_w1_inv_;
  mutable std::map<Weight, PolyMatrix> e_cache_;
};

struct RelationCheck {
  std::string name;
  bool holds = true;
  int instances = 0;
  std::string witness;  // first failing instance, if any
};

/// Quadratic, braid (including the affine node), length-zero conjugation,
/// and Bernstein commutation for e^lambda with entries in [-box, box].
std::vector<RelationCheck> check_theta_relations(const ThetaModule& theta, int box);
/// det [IC^0, T_{w1} IC^0, .., T_{w1}^{m-1} IC^0].
LaurentPoly freeness_determinant(const ThetaModule& theta);

// ---- sheaf/function dictionary

enum class Convention { A, B };

struct ConventionData {
  std::string name;
  std::string description;
  LaurentPoly shift;       // value of the shift [1]
  LaurentPoly half_twist;  // value of the Tate twist (1/2)
};

ConventionData convention_data(Convention c);

struct FormulaResult {
  int index = 0;
  std::string statement;
  bool matches = true;
  int instances = 0;
  std::string witness;
};

struct DictionaryReport {
  int m = 0;
  ConventionData convention;
  std::vector<FormulaResult> formulas;
  bool all_match() const;
};

/// Translates [L_{s_i}], [L_{s_i!}], [L_{w_i}] into the Hecke algebra under
/// the given convention and evaluates the five IC formulas through the theta
/// matrices.
DictionaryReport ic_sheaf_dictionary(const ThetaModule& theta, Convention c);

}  // namespace iwahori
