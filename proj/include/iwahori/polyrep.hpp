#pragma once

// Polynomial representation of the affine Hecke algebra on Z[s^±][x_1^±..x_m^±]:
//   e^lambda * u = x^-lambda u,
//   T_{s_i} * x^l = (x^l - x^{s_i l}) / (x^a - 1) - s^2 (x^l - x^{s_i l + a}) / (x^a - 1),
// with a = alpha_i. Both quotients are finite geometric sums.

#include "iwahori/hecke.hpp"
#include "iwahori/laurent.hpp"

namespace iwahori {

/// T_{s_i} * u for a finite index 1 <= i < m.
LaurentPoly act_simple(int i, const LaurentPoly& u);
/// T_w * u for a finite permutation w.
LaurentPoly act_finite(const Perm& w, const LaurentPoly& u);
/// h * u, expanding h in the Bernstein basis.
LaurentPoly act(const HeckeElt& h, const LaurentPoly& u);

/// T_{s_m} * 1 computed through T_{w_1}^-1 T_{s_1} T_{w_1}.
LaurentPoly t_sm_on_one(int m);
/// (s^2 - 1) + s^{2(m-1)} x^{(1,0,..,0,-1)}.
LaurentPoly t_sm_on_one_expected(int m);

}  // namespace iwahori
