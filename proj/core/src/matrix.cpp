#include "phtandem/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

#include "phtandem/errors.hpp"

namespace phtandem {

namespace {
void require_nonempty(const Matrix& m, const char* op) {
  if (m.empty()) {
    throw DimensionError(std::string(op) + ": empty matrix operand");
  }
}
}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be at least 1x1");
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be at least 1x1");
  }
  if (data_.size() != rows * cols) {
    throw DimensionError("entry count does not match rows*cols");
  }
  ensure_finite("matrix construction");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  if (rows_ == 0) {
    throw DimensionError("matrix dimensions must be at least 1x1");
  }
  cols_ = rows.begin()->size();
  if (cols_ == 0) {
    throw DimensionError("matrix dimensions must be at least 1x1");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw DimensionError("ragged row lengths in matrix literal");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
  ensure_finite("matrix construction");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix Matrix::unit_column(std::size_t n) {
  Matrix m(n, 1);
  for (std::size_t i = 0; i < n; ++i) m(i, 0) = 1.0;
  return m;
}

Matrix Matrix::row_vector(std::vector<double> entries) {
  const std::size_t n = entries.size();
  return Matrix(1, n, std::move(entries));
}

Matrix Matrix::transpose() const {
  require_nonempty(*this, "transpose");
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator+(const Matrix& other) const {
  require_nonempty(*this, "add");
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("add: shape mismatch");
  }
  Matrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + other.data_[k];
  r.ensure_finite("matrix add");
  return r;
}

Matrix Matrix::operator-(const Matrix& other) const {
  require_nonempty(*this, "subtract");
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("subtract: shape mismatch");
  }
  Matrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - other.data_[k];
  r.ensure_finite("matrix subtract");
  return r;
}

Matrix Matrix::operator*(const Matrix& other) const {
  require_nonempty(*this, "multiply");
  require_nonempty(other, "multiply");
  if (cols_ != other.rows_) {
    throw DimensionError("multiply: inner dimensions disagree");
  }
  Matrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const double aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        r(i, j) += aik * other(k, j);
      }
    }
  }
  r.ensure_finite("matrix multiply");
  return r;
}

Matrix Matrix::operator*(double scalar) const {
  require_nonempty(*this, "scale");
  Matrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * scalar;
  r.ensure_finite("matrix scale");
  return r;
}

Matrix Matrix::operator-() const { return (*this) * -1.0; }

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::inf_norm() const {
  double norm = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) row_sum += std::abs((*this)(i, j));
    norm = std::max(norm, row_sum);
  }
  return norm;
}

double Matrix::sum() const {
  double s = 0.0;
  for (double v : data_) s += v;
  return s;
}

bool Matrix::is_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void Matrix::ensure_finite(const char* what) const {
  if (!is_finite()) {
    throw NumericError(std::string(what) + ": non-finite entry");
  }
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

}  // namespace phtandem
