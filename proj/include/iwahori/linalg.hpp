#pragma once

// Small dense matrices over a Laurent polynomial ring, with fraction-free
// elimination. Only what the K-group and theta computations need.

#include <optional>
#include <string>
#include <vector>

#include "iwahori/laurent.hpp"

namespace iwahori {

class PolyMatrix {
 public:
  PolyMatrix(Profile p, int rows, int cols);
  static PolyMatrix identity(Profile p, int n);
  /// Matrix whose j-th column is cols[j].
  static PolyMatrix from_columns(Profile p, const std::vector<std::vector<LaurentPoly>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Profile& profile() const { return profile_; }

  LaurentPoly& operator()(int r, int c) { return data_.at(index(r, c)); }
  const LaurentPoly& operator()(int r, int c) const { return data_.at(index(r, c)); }
  std::vector<LaurentPoly> column(int c) const;

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix scaled(const LaurentPoly& c) const;
  std::vector<LaurentPoly> apply(const std::vector<LaurentPoly>& x) const;
  /// Copy without row r and column c.
  PolyMatrix minor_matrix(int r, int c) const;

  bool operator==(const PolyMatrix& o) const;
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t index(int r, int c) const;

  Profile profile_;
  int rows_;
  int cols_;
  std::vector<LaurentPoly> data_;
};

/// Determinant by Bareiss elimination; every intermediate division is exact.
LaurentPoly determinant(const PolyMatrix& a);

/// Solves a x = b for square a with nonzero determinant, returning nullopt
/// when the solution has a non-Laurent entry.
class CramerSolver {
 public:
  explicit CramerSolver(const PolyMatrix& a);
  const LaurentPoly& det() const { return det_; }
  std::optional<std::vector<LaurentPoly>> solve(const std::vector<LaurentPoly>& b) const;
  /// Numerators adj(a) b; the solution is these divided by det().
  std::vector<LaurentPoly> numerators(const std::vector<LaurentPoly>& b) const;

 private:
  PolyMatrix adjugate_;
  LaurentPoly det_;
};

}  // namespace iwahori
