#include "tropopt/matrix.hpp"

#include <algorithm>

#include "tropopt/error.hpp"
#include "tropopt/format.hpp"

namespace tropopt {

namespace {

void require_same_kind(const Matrix& a, const Matrix& b, const char* op) {
  if (a.kind() != b.kind()) throw DomainError(std::string(op) + ": semifield kind mismatch");
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) {
    throw DimensionError(std::string(op) + ": matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", expected square");
  }
}

}  // namespace

Matrix::Matrix(SemifieldKind kind, std::size_t rows, std::size_t cols)
    : kind_(kind), rows_(rows), cols_(cols), data_(rows * cols, detail::zero(kind)) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

Matrix Matrix::identity(SemifieldKind kind, std::size_t n) {
  Matrix m(kind, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = detail::one(kind);
  return m;
}

Matrix Matrix::column(SemifieldKind kind, std::span<const double> values) {
  Matrix m(kind, values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) m.set(i, 0, values[i]);
  return m;
}

Matrix Matrix::column(SemifieldKind kind, std::initializer_list<double> values) {
  return column(kind, std::span<const double>(values.begin(), values.size()));
}

Matrix Matrix::row(SemifieldKind kind, std::span<const double> values) {
  Matrix m(kind, 1, values.size());
  for (std::size_t j = 0; j < values.size(); ++j) m.set(0, j, values[j]);
  return m;
}

Matrix Matrix::row(SemifieldKind kind, std::initializer_list<double> values) {
  return row(kind, std::span<const double>(values.begin(), values.size()));
}

Matrix Matrix::from_rows(SemifieldKind kind, const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw DimensionError("matrix needs at least one row");
  Matrix m(kind, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_rows(SemifieldKind kind,
                         std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(kind, v);
}

Scalar Matrix::operator()(std::size_t i, std::size_t j) const {
  return Scalar(kind_, data_.at(i * cols_ + j));
}

Scalar Matrix::operator[](std::size_t k) const {
  if (!is_vector()) throw DimensionError("component access on a non-vector");
  return Scalar(kind_, data_.at(k));
}

void Matrix::set(std::size_t i, std::size_t j, double v) {
  detail::validate(kind_, v);
  data_.at(i * cols_ + j) = v + 0.0;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& s) {
  if (s.kind() != kind_) throw DomainError("set: semifield kind mismatch");
  data_.at(i * cols_ + j) = s.value();
}

Scalar Matrix::scalar() const {
  if (rows_ != 1 || cols_ != 1) throw DimensionError("scalar(): matrix is not 1x1");
  return Scalar(kind_, data_[0]);
}

Matrix Matrix::transpose() const {
  Matrix t(kind_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  return t;
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_kind(a, b, "add");
  require_same_shape(a, b, "add");
  Matrix r(a.kind(), a.rows(), a.cols());
  auto av = a.values();
  auto bv = b.values();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::size_t k = i * a.cols() + j;
      r.set(i, j, detail::add(a.kind(), av[k], bv[k]));
    }
  return r;
}

Matrix multiply(const Matrix& a, const Matrix& c) {
  require_same_kind(a, c, "multiply");
  if (a.cols() != c.rows()) {
    throw DimensionError("multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " by " + std::to_string(c.rows()) + "x" + std::to_string(c.cols()));
  }
  const SemifieldKind kind = a.kind();
  Matrix r(kind, a.rows(), c.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      double acc = detail::zero(kind);
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc = detail::add(kind, acc, detail::mul(kind, a.value(i, k), c.value(k, j)));
      r.set(i, j, acc);
    }
  }
  return r;
}

Matrix scale(const Scalar& x, const Matrix& a) {
  if (x.kind() != a.kind()) throw DomainError("scale: semifield kind mismatch");
  Matrix r(a.kind(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r.set(i, j, detail::mul(a.kind(), x.value(), a.value(i, j)));
  return r;
}

Matrix power(const Matrix& a, unsigned k) {
  require_square(a, "power");
  Matrix result = Matrix::identity(a.kind(), a.rows());
  Matrix base = a;
  while (k != 0) {
    if (k & 1u) result = multiply(result, base);
    k >>= 1;
    if (k != 0) base = multiply(base, base);
  }
  return result;
}

Scalar trace(const Matrix& a) {
  require_square(a, "trace");
  double acc = detail::zero(a.kind());
  for (std::size_t i = 0; i < a.rows(); ++i) acc = detail::add(a.kind(), acc, a.value(i, i));
  return Scalar(a.kind(), acc);
}

Scalar trace_of_powers(const Matrix& a) {
  require_square(a, "trace_of_powers");
  Scalar acc = trace(a);
  Matrix p = a;
  for (std::size_t k = 2; k <= a.rows(); ++k) {
    p = multiply(p, a);
    acc = add(acc, trace(p));
  }
  return acc;
}

Matrix asterate(const Matrix& a) {
  require_square(a, "asterate");
  const std::size_t n = a.rows();
  if (n == 1) return Matrix::identity(a.kind(), 1);
  // (I + A)^k = I + A + ... + A^k by idempotency.
  return power(add(Matrix::identity(a.kind(), n), a), static_cast<unsigned>(n - 1));
}

Matrix conjugate(const Matrix& x) {
  if (!x.is_vector()) throw DimensionError("conjugate: argument is not a vector");
  if (is_zero(x)) throw DomainError("conjugate of the zero vector");
  Matrix r(x.kind(), x.cols(), x.rows());
  auto xv = x.values();
  for (std::size_t k = 0; k < xv.size(); ++k) {
    if (detail::is_zero(x.kind(), xv[k])) continue;
    const double v = detail::inv(x.kind(), xv[k]);
    if (r.rows() == 1) r.set(0, k, v);
    else r.set(k, 0, v);
  }
  return r;
}

Matrix meet(const Matrix& a, const Matrix& b) {
  require_same_kind(a, b, "meet");
  require_same_shape(a, b, "meet");
  Matrix r(a.kind(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double x = a.value(i, j);
      const double y = b.value(i, j);
      r.set(i, j, detail::add(a.kind(), x, y) == y ? x : y);
    }
  return r;
}

bool is_regular(const Matrix& v) {
  return std::none_of(v.values().begin(), v.values().end(),
                      [&](double x) { return detail::is_zero(v.kind(), x); });
}

bool is_row_regular(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < a.cols() && !nonzero; ++j)
      nonzero = !detail::is_zero(a.kind(), a.value(i, j));
    if (!nonzero) return false;
  }
  return true;
}

bool is_column_regular(const Matrix& a) { return is_row_regular(a.transpose()); }

bool is_zero(const Matrix& a) {
  return std::all_of(a.values().begin(), a.values().end(),
                     [&](double x) { return detail::is_zero(a.kind(), x); });
}

bool leq(const Matrix& a, const Matrix& b, const Tolerance& tol) {
  require_same_kind(a, b, "leq");
  require_same_shape(a, b, "leq");
  const double eps = tol.for_kind(a.kind());
  auto av = a.values();
  auto bv = b.values();
  for (std::size_t k = 0; k < av.size(); ++k)
    if (!detail::leq(a.kind(), av[k], bv[k], eps)) return false;
  return true;
}

bool approx_equal(const Matrix& a, const Matrix& b, const Tolerance& tol) {
  if (a.kind() != b.kind() || a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const double eps = tol.for_kind(a.kind());
  auto av = a.values();
  auto bv = b.values();
  for (std::size_t k = 0; k < av.size(); ++k)
    if (!detail::approx_equal(a.kind(), av[k], bv[k], eps)) return false;
  return true;
}

std::string to_string(const Matrix& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) s += ' ';
      s += format_number(a.value(i, j));
    }
  }
  return s + "]";
}

}  // namespace tropopt
