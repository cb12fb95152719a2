#include "iwahori/springer.hpp"

#include <stdexcept>

#include "iwahori/polyrep.hpp"

namespace iwahori {

namespace {

const Profile kGS = Profile::gs();

LaurentPoly mono(const Monomial& m) { return LaurentPoly(kGS, m); }
LaurentPoly gs_one() { return LaurentPoly::one(kGS); }
LaurentPoly s_to(int k) { return LaurentPoly::variable(kGS, var::s, k); }

std::vector<KTuple> theorem_tuples(const FixedFlagTable& flags, const std::vector<LaurentPoly>& pre) {
  std::vector<KTuple> out;
  for (const auto& p : pre) out.push_back(push_down(flags, p));
  return out;
}

std::vector<LaurentPoly> theorem_preimages(int m) {
  const Profile xs = Profile::xs(m);
  std::vector<LaurentPoly> pre{LaurentPoly::one(xs)};
  for (int i = 1; i < m; ++i)
    pre.emplace_back(xs, Monomial::of(var::s, i * (m - i)) * Monomial::x_power(fundamental_weight(m, i)));
  return pre;
}

}  // namespace

Monomial u_weight(int m, int j) {
  if (j < 1 || j > m) throw std::out_of_range("u index out of range");
  return j == 1 ? Monomial::of(var::g, 1) : Monomial::of(var::s, m - 2 * (j - 1));
}

FixedFlagTable build_fixed_flags(int m) {
  if (m < 1) throw std::invalid_argument("rank must be positive");
  FixedFlagTable t;
  t.m = m;
  for (int k = 1; k <= m; ++k) {
    std::vector<Monomial> row;
    for (int j = 2; j <= k; ++j) row.push_back(u_weight(m, j));
    row.push_back(u_weight(m, 1));
    for (int j = k + 1; j <= m; ++j) row.push_back(u_weight(m, j));
    t.weights.push_back(std::move(row));
  }
  return t;
}

KTuple restrict_line_bundle(const FixedFlagTable& flags, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != flags.m) throw std::invalid_argument("weight of wrong rank");
  KTuple t;
  for (const auto& row : flags.weights) {
    Monomial acc;
    for (std::size_t i = 0; i < row.size(); ++i) acc = acc * row[i].pow(lambda[i]);
    t.push_back(mono(acc));
  }
  return t;
}

KTuple push_down(const FixedFlagTable& flags, const LaurentPoly& u) {
  const int m = flags.m;
  if (u.profile().kind() != Profile::Kind::XS || u.profile().rank() != m)
    throw ProfileError("push_down expects a vector of the rank-" + std::to_string(m) + " polynomial module");
  KTuple t(static_cast<std::size_t>(m), LaurentPoly::zero(kGS));
  for (const auto& [mo, c] : u.terms()) {
    const Weight mu = mo.x_exponents(m);
    const Monomial s_part = Monomial::of(var::s, mo.exponent(var::s));
    for (int k = 0; k < m; ++k) {
      Monomial acc = s_part;
      const auto& row = flags.weights[static_cast<std::size_t>(k)];
      for (int i = 0; i < m; ++i) acc = acc * row[static_cast<std::size_t>(i)].pow(-mu[static_cast<std::size_t>(i)]);
      t[static_cast<std::size_t>(k)].add_term(acc, c);
    }
  }
  return t;
}

LaurentPoly res_sigma(const LaurentPoly& p) {
  if (p.profile().kind() != Profile::Kind::XS) throw ProfileError("res_sigma expects a polynomial in x1..xm");
  if (!is_symmetric(p)) throw std::invalid_argument("res_sigma: polynomial is not symmetric");
  const int m = p.profile().rank();
  LaurentPoly r = LaurentPoly::zero(kGS);
  for (const auto& [mo, c] : p.terms()) {
    Monomial acc = Monomial::of(var::s, mo.exponent(var::s));
    const Weight e = mo.x_exponents(m);
    for (int j = 1; j <= m; ++j) acc = acc * u_weight(m, j).pow(e[static_cast<std::size_t>(j - 1)]);
    r.add_term(acc, c);
  }
  return r;
}

KTuple scale(const KTuple& t, const LaurentPoly& c) {
  KTuple r;
  for (const auto& x : t) r.push_back(x * c);
  return r;
}

KTuple add(const KTuple& a, const KTuple& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tuple length mismatch");
  KTuple r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

bool is_zero(const KTuple& t) {
  for (const auto& x : t)
    if (!x.is_zero()) return false;
  return true;
}

// ------------------------------------------------------------ module

SpringerModule::SpringerModule(int m)
    : m_(m),
      flags_(build_fixed_flags(m)),
      preimages_(theorem_preimages(m)),
      basis_(theorem_tuples(flags_, preimages_)),
      solver_(PolyMatrix::from_columns(kGS, basis_)) {}

std::optional<std::vector<LaurentPoly>> SpringerModule::coordinates(const KTuple& t) const {
  return solver_.solve(t);
}

KTuple SpringerModule::tuple_of(const std::vector<LaurentPoly>& coords) const {
  if (static_cast<int>(coords.size()) != m_) throw std::invalid_argument("coordinate vector of wrong length");
  KTuple t(static_cast<std::size_t>(m_), LaurentPoly::zero(kGS));
  for (int j = 0; j < m_; ++j) t = add(t, scale(basis_[static_cast<std::size_t>(j)], coords[static_cast<std::size_t>(j)]));
  return t;
}

std::vector<LaurentPoly> SpringerModule::k_act(const HeckeElt& h, const std::vector<LaurentPoly>& coords) const {
  if (h.rank() != m_) throw std::invalid_argument("Hecke element of wrong rank");
  if (static_cast<int>(coords.size()) != m_) throw std::invalid_argument("coordinate vector of wrong length");
  KTuple image(static_cast<std::size_t>(m_), LaurentPoly::zero(kGS));
  for (int j = 0; j < m_; ++j) {
    const LaurentPoly& c = coords[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    image = add(image, scale(push_down(flags_, act(h, preimages_[static_cast<std::size_t>(j)])), c));
  }
  auto out = coordinates(image);
  if (!out) throw KernelStabilityError("image leaves the span of the theorem basis");
  return *out;
}

KTuple SpringerModule::k_act_tuple(const HeckeElt& h, const KTuple& t) const {
  auto c = coordinates(t);
  if (!c) throw std::invalid_argument("class is not in the span of the theorem basis");
  return tuple_of(k_act(h, *c));
}

PolyMatrix SpringerModule::action_matrix(const HeckeElt& h) const {
  std::vector<std::vector<LaurentPoly>> cols;
  for (int j = 0; j < m_; ++j) {
    std::vector<LaurentPoly> unit(static_cast<std::size_t>(m_), LaurentPoly::zero(kGS));
    unit[static_cast<std::size_t>(j)] = gs_one();
    cols.push_back(k_act(h, unit));
  }
  return PolyMatrix::from_columns(kGS, cols);
}

// ------------------------------------------------------------ fractions

FracTuple to_fractions(const KTuple& t) {
  FracTuple r;
  for (const auto& x : t) r.push_back({x, gs_one()});
  return r;
}

FracTuple add(const FracTuple& a, const FracTuple& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tuple length mismatch");
  FracTuple r;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].den == b[k].den)
      r.push_back({a[k].num + b[k].num, a[k].den});
    else
      r.push_back({a[k].num * b[k].den + b[k].num * a[k].den, a[k].den * b[k].den});
  }
  return r;
}

FracTuple scale(const FracTuple& a, const LaurentPoly& c) {
  FracTuple r = a;
  for (auto& f : r) f.num = f.num * c;
  return r;
}

bool equal(const FracTuple& a, const FracTuple& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k].num * b[k].den == b[k].num * a[k].den)) return false;
  return true;
}

LaurentPoly cotangent_weight(int m, int i, int k) {
  if (i < 1 || i >= m || (k != i && k != i + 1)) throw std::out_of_range("no such point on this line");
  return k == i ? mono(u_weight(m, 1) * u_weight(m, i + 1).inverse()) : mono(u_weight(m, i + 1) * u_weight(m, 1).inverse());
}

FracTuple chain_sheaf(int m, int i, const LaurentPoly& fiber_at_pi, const LaurentPoly& fiber_at_next) {
  if (i < 1 || i >= m) throw std::out_of_range("no such line");
  FracTuple t(static_cast<std::size_t>(m), Frac{LaurentPoly::zero(kGS), gs_one()});
  // At an end of the chain the structure sheaf contributes 1/(1 - c), which
  // cancels the sheaf's own 1/(1 - c). At a node p_k joining V_{k-1} and V_k
  // with cotangent weights a and b the contribution is (1 - ab)/((1 - a)(1 - b)),
  // leaving (1 - b)/(1 - ab) for a sheaf on V_{k-1} and (1 - a)/(1 - ab) on V_k.
  auto entry = [&](int k, const LaurentPoly& fiber) -> Frac {
    if (k == 1 || k == m) return {fiber, gs_one()};
    const LaurentPoly a = cotangent_weight(m, k - 1, k);
    const LaurentPoly b = cotangent_weight(m, k, k);
    const LaurentPoly den = gs_one() - a * b;
    const LaurentPoly other = (k == i + 1) ? b : a;
    return {fiber * (gs_one() - other), den};
  };
  t[static_cast<std::size_t>(i - 1)] = entry(i, fiber_at_pi);
  t[static_cast<std::size_t>(i)] = entry(i + 1, fiber_at_next);
  return t;
}

FracTuple ov_minus_one(int m, int i) {
  return chain_sheaf(m, i, mono(u_weight(m, 1)), mono(u_weight(m, i + 1)));
}

FracTuple ov_minus_point(int m, int i, int k) {
  // The ideal sheaf of a point has the cotangent line as fiber there.
  if (k == i) return chain_sheaf(m, i, cotangent_weight(m, i, i), gs_one());
  if (k == i + 1) return chain_sheaf(m, i, gs_one(), cotangent_weight(m, i, i + 1));
  throw std::out_of_range("point not on line");
}

FracTuple skyscraper(int m, int k) {
  if (k != 1 && k != m) throw std::out_of_range("skyscrapers are modelled at the ends of the chain only");
  FracTuple t(static_cast<std::size_t>(m), Frac{LaurentPoly::zero(kGS), gs_one()});
  // The structure sheaf contributes 1/(1 - c) at an end point.
  auto& f = t[static_cast<std::size_t>(k - 1)];
  if (m == 1)
    f.num = gs_one();
  else
    f.num = gs_one() - (k == 1 ? cotangent_weight(m, 1, 1) : cotangent_weight(m, m - 1, m));
  return t;
}

std::pair<LaurentPoly, LaurentPoly> fibers_on_line(const FixedFlagTable& flags, const Weight& lambda, int j) {
  const KTuple t = restrict_line_bundle(flags, lambda);
  return {t.at(static_cast<std::size_t>(j - 1)), t.at(static_cast<std::size_t>(j))};
}

DeclaredBases declared_bases(int m) {
  const FixedFlagTable flags = build_fixed_flags(m);
  DeclaredBases out{m, PolyMatrix(kGS, m, m), gs_one(), {}, {}};
  PolyMatrix& c = out.change_of_basis;
  c(0, 0) = gs_one();
  for (int j = 1; j < m; ++j) c(0, j) = s_to(2 * j - m);
  for (int k = 1; k < m; ++k) {
    const int f = (k - 1) * (m - k);
    for (int j = 1; j < m; ++j) c(k, j) = s_to(j <= k ? f : f + 2 * (j - k));
  }
  std::vector<KTuple> known{restrict_line_bundle(flags, zero_weight(m))};
  for (int k = 1; k < m; ++k) known.push_back(restrict_line_bundle(flags, fundamental_weight(m, k)));

  const CramerSolver solver(c);
  out.system_determinant = solver.det();
  // Solve per fixed point: the unknown classes' values at p solve c x = known(p).
  out.lusztig.assign(static_cast<std::size_t>(m), FracTuple(static_cast<std::size_t>(m), Frac{LaurentPoly::zero(kGS), gs_one()}));
  for (int p = 0; p < m; ++p) {
    std::vector<LaurentPoly> rhs;
    for (const auto& t : known) rhs.push_back(t[static_cast<std::size_t>(p)]);
    const auto nums = solver.numerators(rhs);
    for (int j = 0; j < m; ++j) {
      Frac& f = out.lusztig[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)];
      if (auto q = exact_divide(nums[static_cast<std::size_t>(j)], solver.det()))
        f = {*q, gs_one()};
      else
        f = {nums[static_cast<std::size_t>(j)], solver.det()};
    }
  }
  const SpringerModule module(m);
  out.theorem = module.theorem_basis();
  return out;
}

std::vector<LaurentPoly> kernel_coefficients(const FixedFlagTable& flags, const std::vector<Weight>& mus) {
  const int m = flags.m;
  if (static_cast<int>(mus.size()) != m + 1) throw std::invalid_argument("need m+1 monomials");
  std::vector<KTuple> cols;
  for (const auto& mu : mus) cols.push_back(push_down(flags, x_monomial(mu)));
  const PolyMatrix a = PolyMatrix::from_columns(kGS, cols);
  std::vector<LaurentPoly> coeffs;
  for (int j = 0; j <= m; ++j) {
    PolyMatrix sub(kGS, m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0, oc = 0; c <= m; ++c)
        if (c != j) sub(r, oc++) = a(r, c);
    LaurentPoly d = determinant(sub);
    coeffs.push_back(j % 2 == 0 ? d : -d);
  }
  return coeffs;
}

}  // namespace iwahori
