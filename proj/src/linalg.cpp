#include "iwahori/linalg.hpp"

#include <stdexcept>

namespace iwahori {

PolyMatrix::PolyMatrix(Profile p, int rows, int cols)
    : profile_(p), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows * cols), LaurentPoly::zero(p)) {}

PolyMatrix PolyMatrix::identity(Profile p, int n) {
  PolyMatrix r(p, n, n);
  for (int i = 0; i < n; ++i) r(i, i) = LaurentPoly::one(p);
  return r;
}

PolyMatrix PolyMatrix::from_columns(Profile p, const std::vector<std::vector<LaurentPoly>>& cols) {
  const int n = cols.empty() ? 0 : static_cast<int>(cols.front().size());
  PolyMatrix r(p, n, static_cast<int>(cols.size()));
  for (int c = 0; c < r.cols_; ++c) {
    if (static_cast<int>(cols[static_cast<std::size_t>(c)].size()) != n) throw std::invalid_argument("ragged columns");
    for (int i = 0; i < n; ++i) r(i, c) = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
  }
  return r;
}

std::size_t PolyMatrix::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index out of range");
  return static_cast<std::size_t>(r * cols_ + c);
}

std::vector<LaurentPoly> PolyMatrix::column(int c) const {
  std::vector<LaurentPoly> v;
  for (int r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix r(profile_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const LaurentPoly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
    }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

PolyMatrix PolyMatrix::scaled(const LaurentPoly& c) const {
  PolyMatrix r = *this;
  for (auto& x : r.data_) x = x * c;
  return r;
}

std::vector<LaurentPoly> PolyMatrix::apply(const std::vector<LaurentPoly>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<LaurentPoly> y(static_cast<std::size_t>(rows_), LaurentPoly::zero(profile_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) y[static_cast<std::size_t>(i)] += (*this)(i, j) * x[static_cast<std::size_t>(j)];
  return y;
}

PolyMatrix PolyMatrix::minor_matrix(int r, int c) const {
  PolyMatrix out(profile_, rows_ - 1, cols_ - 1);
  for (int i = 0, oi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (int j = 0, oj = 0; j < cols_; ++j) {
      if (j == c) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j).to_string());
  return out;
}

LaurentPoly determinant(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = a.rows();
  const Profile p = a.profile();
  if (n == 0) return LaurentPoly::one(p);
  PolyMatrix m = a;
  LaurentPoly prev = LaurentPoly::one(p);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m(r, k).is_zero()) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return LaurentPoly::zero(p);
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("Bareiss step not exact");
        m(i, j) = std::move(*q);
      }
      m(i, k) = LaurentPoly::zero(p);
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

CramerSolver::CramerSolver(const PolyMatrix& a)
    : adjugate_(a.profile(), a.rows(), a.cols()), det_(determinant(a)) {
  if (det_.is_zero()) throw std::domain_error("singular matrix");
  const int n = a.rows();
  if (n == 1) {
    adjugate_(0, 0) = LaurentPoly::one(a.profile());
    return;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LaurentPoly cof = determinant(a.minor_matrix(i, j));
      adjugate_(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
}

std::vector<LaurentPoly> CramerSolver::numerators(const std::vector<LaurentPoly>& b) const {
  return adjugate_.apply(b);
}

std::optional<std::vector<LaurentPoly>> CramerSolver::solve(const std::vector<LaurentPoly>& b) const {
  std::vector<LaurentPoly> x = numerators(b);
  for (auto& xi : x) {
    auto q = exact_divide(xi, det_);
    if (!q) return std::nullopt;
    xi = std::move(*q);
  }
  return x;
}

}  // namespace iwahori
