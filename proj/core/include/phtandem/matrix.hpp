#ifndef PHTANDEM_MATRIX_HPP
#define PHTANDEM_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace phtandem {

/// Dense real matrix, row-major. Values are immutable in spirit: every
/// operation returns a new matrix, and a constructed matrix is safe to share
/// read-only across threads. Entries must stay finite; operations that could
/// produce NaN/Inf verify their output and throw NumericError.
class Matrix {
 public:
  /// Empty 0x0 sentinel. Any arithmetic on it throws DimensionError.
  Matrix() = default;

  /// rows x cols matrix of zeros.
  Matrix(std::size_t rows, std::size_t cols);

  /// rows x cols matrix from row-major entries. Throws DimensionError on a
  /// size mismatch and NumericError on non-finite entries.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  /// Nested-list construction: Matrix{{1,2},{3,4}}. Rows must have equal length.
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zeros(std::size_t rows, std::size_t cols);
  /// All-ones column vector of order n (the unity vector u).
  static Matrix unit_column(std::size_t n);
  static Matrix row_vector(std::vector<double> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool square() const { return !empty() && rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  const std::vector<double>& data() const { return data_; }

  Matrix transpose() const;

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator*(double scalar) const;
  Matrix operator-() const;
  friend Matrix operator*(double scalar, const Matrix& m) { return m * scalar; }

  bool operator==(const Matrix& other) const;

  /// Largest |entry|. The vector infinity norm for row/column vectors.
  double max_abs() const;
  /// Operator infinity norm: max row sum of |entries|.
  double inf_norm() const;
  /// Sum of all entries (a * u for a row vector a).
  double sum() const;

  bool is_finite() const;
  /// Throws NumericError naming `what` if any entry is NaN/Inf.
  void ensure_finite(const char* what) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Largest |a(i,j) - b(i,j)|; throws DimensionError if shapes differ.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace phtandem

#endif
