#include "mesacurve/linalg.hpp"

#include <regex>
#include <sstream>

#include "mesacurve/errors.hpp"

namespace mesacurve {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows,
                         std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  return std::vector<Rational>(data_.begin() + i * cols_,
                               data_.begin() + (i + 1) * cols_);
}

void Matrix::append_row(const std::vector<Rational>& r) {
  if (r.size() != cols_) {
    throw Error(ErrorCode::InvariantBreach, "append_row: width mismatch");
  }
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) {
    throw Error(ErrorCode::InvariantBreach, "matrix product: shape mismatch");
  }
  Matrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
    }
  return p;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) {
    throw Error(ErrorCode::InvariantBreach, "matrix apply: shape mismatch");
  }
  std::vector<Rational> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << mesacurve::to_string((*this)(i, j));
    }
  }
  out << ']';
  return out.str();
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead_row, j));
    }
    const Rational inv = 1 / m(lead_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(lead_row, j);
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel(const Matrix& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      v[e.pivots[r]] = -e.reduced(r, free);
    }
    basis.append_row(v);
  }
  return row_space(basis);
}

Matrix row_space(const Matrix& m) {
  const auto e = rref(m);
  Matrix basis(0, m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) basis.append_row(e.reduced.row(r));
  return basis;
}

Matrix column_space(const Matrix& m) { return row_space(m.transpose()); }

Matrix left_kernel(const Matrix& m) { return kernel(m.transpose()); }

bool solve(const Matrix& m, const std::vector<Rational>& b,
           std::vector<Rational>& x) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b.at(i);
  }
  const auto e = rref(aug);
  x.assign(m.cols(), Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return false;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return true;
}

std::string to_string(const Rational& q) {
  std::ostringstream out;
  out << numerator(q);
  if (denominator(q) != 1) out << '/' << denominator(q);
  return out.str();
}

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) {
    throw Error(ErrorCode::SchemaError, "malformed rational \"" + text + "\"");
  }
  boost::multiprecision::mpz_int num(match[1].str().front() == '+'
                                         ? match[1].str().substr(1)
                                         : match[1].str());
  boost::multiprecision::mpz_int den(1);
  if (match[2].matched) den = boost::multiprecision::mpz_int(match[2].str());
  if (den == 0) {
    throw Error(ErrorCode::SchemaError, "zero denominator in \"" + text + "\"");
  }
  return Rational(num, den);
}

}  // namespace mesacurve
