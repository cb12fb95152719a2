#include "iwahori/theta.hpp"

#include <stdexcept>

namespace iwahori {

namespace {

const Profile kGS = Profile::gs();

LaurentPoly gs(int g_exp, int s_exp, long coef = 1) {
  return LaurentPoly(kGS, Monomial::of(var::g, g_exp) * Monomial::of(var::s, s_exp), coef);
}

std::string coords_string(const std::vector<LaurentPoly>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

std::vector<LaurentPoly> combine(const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b,
                                 const LaurentPoly& cb) {
  std::vector<LaurentPoly> r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k] * cb;
  return r;
}

void record(RelationCheck& c, bool ok, const std::string& instance) {
  ++c.instances;
  if (!ok && c.holds) {
    c.holds = false;
    c.witness = instance;
  }
}

void record(FormulaResult& f, bool ok, const std::string& instance) {
  ++f.instances;
  if (!ok && f.matches) {
    f.matches = false;
    f.witness = instance;
  }
}

}  // namespace

ThetaModule::ThetaModule(int m)
    : m_(m),
      springer_(m),
      t_w1_(springer_.action_matrix(iwahori::t_omega(m, 1))),
      t_w1_inv_(springer_.action_matrix(iwahori::t_omega(m, -1))) {
  if (m >= 2)
    for (int i = 1; i <= m; ++i) t_simple_.push_back(springer_.action_matrix(iwahori::t_simple(m, i)));
}

const PolyMatrix& ThetaModule::t_simple(int i) const {
  if (i < 1 || i > static_cast<int>(t_simple_.size())) throw std::out_of_range("no such simple reflection");
  return t_simple_[static_cast<std::size_t>(i - 1)];
}

PolyMatrix ThetaModule::t_omega(int k) const {
  PolyMatrix r = PolyMatrix::identity(kGS, m_);
  const PolyMatrix& step = k >= 0 ? t_w1_ : t_w1_inv_;
  for (int n = 0; n < (k >= 0 ? k : -k); ++n) r = step * r;
  return r;
}

PolyMatrix ThetaModule::e(const Weight& lambda) const {
  auto it = e_cache_.find(lambda);
  if (it == e_cache_.end()) it = e_cache_.emplace(lambda, springer_.action_matrix(HeckeElt::e(lambda))).first;
  return it->second;
}

PolyMatrix ThetaModule::scalar(const LaurentPoly& c) const { return PolyMatrix::identity(kGS, m_).scaled(c); }

std::vector<LaurentPoly> ThetaModule::ic(int k) const {
  const int r = ((k % m_) + m_) % m_;
  const int q = (k - r) / m_;
  std::vector<LaurentPoly> v(static_cast<std::size_t>(m_), LaurentPoly::zero(kGS));
  v[static_cast<std::size_t>(r)] = gs(-q, 0);
  return v;
}

std::vector<RelationCheck> check_theta_relations(const ThetaModule& theta, int box) {
  const int m = theta.rank();
  const PolyMatrix id = PolyMatrix::identity(kGS, m);
  const LaurentPoly v = gs(0, 2);
  const LaurentPoly one = gs(0, 0);
  std::vector<RelationCheck> out;

  RelationCheck omega{"T_w1 T_w1^-1 = 1"};
  record(omega, theta.t_w1() * theta.t_w1_inverse() == id && theta.t_w1_inverse() * theta.t_w1() == id, "");
  out.push_back(omega);

  if (m >= 2) {
    RelationCheck quad{"quadratic (T_i + 1)(T_i - v) = 0"};
    RelationCheck braid{"braid T_i T_j T_i = T_j T_i T_j, |i-j| = 1 mod m"};
    RelationCheck commute{"T_i T_j = T_j T_i, i, j not adjacent mod m"};
    RelationCheck conj{"T_w1 T_i T_w1^-1 = T_{i+1 mod m}"};
    for (int i = 1; i <= m; ++i) {
      const PolyMatrix& t = theta.t_simple(i);
      record(quad, (t + id) * (t - id.scaled(v)) == PolyMatrix(kGS, m, m), "i=" + std::to_string(i));
      const int next = conjugate_simple(m, i, 1);
      record(conj, theta.t_w1() * t * theta.t_w1_inverse() == theta.t_simple(next), "i=" + std::to_string(i));
      for (int j = i + 1; j <= m; ++j) {
        const PolyMatrix& u = theta.t_simple(j);
        const bool adjacent = conjugate_simple(m, i, 1) == j || conjugate_simple(m, j, 1) == i;
        const std::string tag = "i=" + std::to_string(i) + ", j=" + std::to_string(j);
        if (m == 2) continue;  // s_1 and s_2 generate an infinite dihedral group
        if (adjacent)
          record(braid, t * u * t == u * t * u, tag);
        else
          record(commute, t * u == u * t, tag);
      }
    }
    out.push_back(quad);
    if (m >= 3) out.push_back(braid);
    if (m >= 4) out.push_back(commute);
    out.push_back(conj);
  }

  RelationCheck bern{"T_i e^l = e^{s_i l} T_i + (1 - v)(e^{s_i l} - e^l)/(1 - e^{-a_i})"};
  RelationCheck lattice{"e^l e^mu = e^{l+mu}"};
  std::vector<Weight> lambdas;
  Weight lam(static_cast<std::size_t>(m), -box);
  while (true) {
    lambdas.push_back(lam);
    std::size_t k = 0;
    while (k < lam.size() && lam[k] == box) lam[k++] = -box;
    if (k == lam.size()) break;
    ++lam[k];
  }
  for (const Weight& l : lambdas) {
    const PolyMatrix el = theta.e(l);
    for (int i = 1; i < m; ++i) {
      const Weight sl = reflect(l, i);
      PolyMatrix rhs = theta.e(sl) * theta.t_simple(i);
      for (const auto& [kappa, c] : demazure_terms(sl, i)) rhs = rhs + theta.e(kappa).scaled((one - v).scaled(c));
      std::string tag = "i=" + std::to_string(i) + ", l=[";
      for (std::size_t k = 0; k < l.size(); ++k) tag += (k ? "," : "") + std::to_string(l[k]);
      record(bern, theta.t_simple(i) * el == rhs, tag + "]");
    }
  }
  for (int i = 1; i <= m; ++i) {
    Weight eps = zero_weight(m);
    eps[static_cast<std::size_t>(i - 1)] = 1;
    for (const Weight& l : lambdas) record(lattice, theta.e(eps) * theta.e(l) == theta.e(eps + l), "eps_" + std::to_string(i));
  }
  if (m >= 2) out.push_back(bern);
  out.push_back(lattice);
  return out;
}

LaurentPoly freeness_determinant(const ThetaModule& theta) {
  const int m = theta.rank();
  std::vector<std::vector<LaurentPoly>> cols;
  std::vector<LaurentPoly> cur = theta.ic(0);
  for (int k = 0; k < m; ++k) {
    cols.push_back(cur);
    cur = theta.t_w1().apply(cur);
  }
  return determinant(PolyMatrix::from_columns(kGS, cols));
}

ConventionData convention_data(Convention c) {
  if (c == Convention::A)
    return {"A", "Grothendieck group: [1] -> s^-1, Tate twists trivial", gs(0, -1), gs(0, 0)};
  return {"B", "trace of Frobenius: [1] -> -1, (1/2) -> s^-1", gs(0, 0, -1), gs(0, -1)};
}

bool DictionaryReport::all_match() const {
  for (const auto& f : formulas)
    if (!f.matches) return false;
  return true;
}

DictionaryReport ic_sheaf_dictionary(const ThetaModule& theta, Convention c) {
  const int m = theta.rank();
  if (m < 2) throw std::invalid_argument("the dictionary needs m >= 2");
  DictionaryReport rep{m, convention_data(c), {}};
  const LaurentPoly& shift = rep.convention.shift;
  const LaurentPoly& tw = rep.convention.half_twist;
  const LaurentPoly one = gs(0, 0);
  const LaurentPoly shift_inv = *exact_divide(one, shift);
  const LaurentPoly tw_inv = *exact_divide(one, tw);
  const PolyMatrix id = PolyMatrix::identity(kGS, m);

  FormulaResult f1{1, "L_{s_i} * IC^i = IC^{i+1} + IC^{i-1}"};
  FormulaResult f2{2, "L_{s_i!} * IC^i = IC^{i+1,!} + IC^{i-1}"};
  FormulaResult f3{3, "L_{s_i} * IC^j = IC^j ([1](1/2) + [-1](-1/2)), j != i mod m"};
  FormulaResult f4{4, "L_{s_i!} * IC^j = IC^j [-1](-1/2), j != i mod m"};
  FormulaResult f5{5, "L_{w_i} * IC^k = IC^{k+i}"};

  for (int i = 1; i <= m; ++i) {
    // [L_{s!}] = [1](1/2) T_s on the open stratum; [L_s] adds the closed point.
    const PolyMatrix l_shriek = theta.t_simple(i).scaled(shift * tw);
    const PolyMatrix l_s = (theta.t_simple(i) + id).scaled(shift * tw);
    const std::string tag_i = "i=" + std::to_string(i);

    const auto got1 = l_s.apply(theta.ic(i));
    const auto want1 = combine(theta.ic(i + 1), theta.ic(i - 1), one);
    record(f1, got1 == want1, tag_i + ": got " + coords_string(got1) + ", expected " + coords_string(want1));

    // IC^{i+1,!} = IC^{i+1} - IC^i[1].
    const auto bang = combine(theta.ic(i + 1), theta.ic(i), -shift);
    const auto got2 = l_shriek.apply(theta.ic(i));
    const auto want2 = combine(bang, theta.ic(i - 1), one);
    record(f2, got2 == want2, tag_i + ": got " + coords_string(got2) + ", expected " + coords_string(want2));

    for (int j = 0; j < m; ++j) {
      if ((j - i) % m == 0) continue;
      const std::string tag = tag_i + ", j=" + std::to_string(j);
      const auto got3 = l_s.apply(theta.ic(j));
      std::vector<LaurentPoly> expected3 = theta.ic(j);
      for (auto& x : expected3) x = x * (shift * tw + shift_inv * tw_inv);
      record(f3, got3 == expected3, tag + ": got " + coords_string(got3) + ", expected " + coords_string(expected3));
      const auto got4 = l_shriek.apply(theta.ic(j));
      std::vector<LaurentPoly> expected4 = theta.ic(j);
      for (auto& x : expected4) x = x * (shift_inv * tw_inv);
      record(f4, got4 == expected4, tag + ": got " + coords_string(got4) + ", expected " + coords_string(expected4));
    }
  }
  for (int i = -m; i <= m; ++i) {
    const PolyMatrix lw = theta.t_omega(i);
    for (int k = -m; k < 2 * m; ++k) {
      const auto got = lw.apply(theta.ic(k));
      record(f5, got == theta.ic(k + i), "i=" + std::to_string(i) + ", k=" + std::to_string(k));
    }
  }
  rep.formulas = {f1, f2, f3, f4, f5};
  return rep;
}

}  // namespace iwahori
