/**
 * Dense matrices over Q with exact Gauss-Jordan elimination.
 *
 * Subspaces are always returned as matrices whose rows form a basis, in
 * reduced row echelon form.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace mesacurve {

using Rational = boost::multiprecision::mpq_rational;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows,
                          std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<Rational> row(std::size_t i) const;
  void append_row(const std::vector<Rational>& r);

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

  bool is_zero() const;
  bool operator==(const Matrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;                    // full RREF, zero rows kept at the bottom
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis (rows, RREF) of {x : m x = 0}.
Matrix kernel(const Matrix& m);
/// Basis (rows, RREF) of the row space.
Matrix row_space(const Matrix& m);
/// Basis (rows, RREF) of the column space, as row vectors.
Matrix column_space(const Matrix& m);
/// Basis (rows, RREF) of {y : y^T m = 0}.
Matrix left_kernel(const Matrix& m);

/// Some x with m x = b, if one exists.
bool solve(const Matrix& m, const std::vector<Rational>& b,
           std::vector<Rational>& x);

/// Canonical rendering "p/q" or "p".
std::string to_string(const Rational& q);
/// Accepts "p", "-p", "p/q"; throws Error(SchemaError) otherwise.
Rational parse_rational(const std::string& text);

}  // namespace mesacurve
