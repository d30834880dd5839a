#pragma once

/// \file
/// Dense matrices and vectors over an idempotent semifield.
///
/// A vector is a matrix with one column (or one row, as produced by
/// conjugation). All entries of a matrix share the matrix's semifield kind.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tropopt/semifield.hpp"

namespace tropopt {

class Matrix {
 public:
  /// rows x cols matrix of zeros. Both dimensions must be positive.
  Matrix(SemifieldKind kind, std::size_t rows, std::size_t cols);

  static Matrix zero(SemifieldKind kind, std::size_t rows, std::size_t cols) {
    return Matrix(kind, rows, cols);
  }
  static Matrix identity(SemifieldKind kind, std::size_t n);
  static Matrix column(SemifieldKind kind, std::span<const double> values);
  static Matrix column(SemifieldKind kind, std::initializer_list<double> values);
  static Matrix row(SemifieldKind kind, std::span<const double> values);
  static Matrix row(SemifieldKind kind, std::initializer_list<double> values);
  static Matrix from_rows(SemifieldKind kind, const std::vector<std::vector<double>>& rows);
  static Matrix from_rows(SemifieldKind kind,
                          std::initializer_list<std::initializer_list<double>> rows);

  SemifieldKind kind() const { return kind_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool is_square() const { return rows_ == cols_; }
  bool is_vector() const { return rows_ == 1 || cols_ == 1; }

  Scalar operator()(std::size_t i, std::size_t j) const;
  /// Vector component (row- or column vector alike).
  Scalar operator[](std::size_t k) const;

  double value(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Throws DomainError when `v` is outside the carrier.
  void set(std::size_t i, std::size_t j, double v);
  void set(std::size_t i, std::size_t j, const Scalar& s);

  /// Row-major encoded entries.
  std::span<const double> values() const { return data_; }

  /// 1x1 matrix as a scalar; DimensionError otherwise.
  Scalar scalar() const;

  Matrix transpose() const;

  /// Exact equality of kind, shape and entries.
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  SemifieldKind kind_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

Matrix add(const Matrix& a, const Matrix& b);
Matrix multiply(const Matrix& a, const Matrix& c);
Matrix scale(const Scalar& x, const Matrix& a);

inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator*(const Matrix& a, const Matrix& c) { return multiply(a, c); }
inline Matrix operator*(const Scalar& x, const Matrix& a) { return scale(x, a); }

/// a^k for k >= 0 by binary exponentiation; a^0 = I.
Matrix power(const Matrix& a, unsigned k);

/// a11 (+) ... (+) ann.
Scalar trace(const Matrix& a);

/// tr A (+) tr A^2 (+) ... (+) tr A^n. Tr(A) <= 1 means no cycle of A has
/// weight above one.
Scalar trace_of_powers(const Matrix& a);

/// Kleene star I (+) A (+) ... (+) A^(n-1), computed as (I (+) A)^(n-1).
Matrix asterate(const Matrix& a);

/// Multiplicative conjugate transpose: inverses of the non-zero components,
/// zero elsewhere, with rows and columns swapped. Throws DomainError for the
/// zero vector and DimensionError for a non-vector.
Matrix conjugate(const Matrix& x);

/// Componentwise greatest lower bound of two vectors of the same shape.
Matrix meet(const Matrix& a, const Matrix& b);

bool is_regular(const Matrix& v);
bool is_row_regular(const Matrix& a);
bool is_column_regular(const Matrix& a);
bool is_zero(const Matrix& a);

/// Entrywise order a <= b.
bool leq(const Matrix& a, const Matrix& b, const Tolerance& tol = {});
bool approx_equal(const Matrix& a, const Matrix& b, const Tolerance& tol = {});

std::string to_string(const Matrix& a);

}  // namespace tropopt
