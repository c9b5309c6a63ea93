#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace realform {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Representative of a modulo m in [0, |m|). m must be nonzero.
Integer floor_mod(const Integer& a, const Integer& m);

/// Floor division rounding toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g;  // g = a*x + b*y, g >= 0
  Integer x;
  Integer y;
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

bool is_prime(const Integer& p);

/// Throws std::overflow_error if the value does not fit.
std::int64_t to_int64(const Integer& v);

std::string to_string(const Integer& v);

/// Dense row-major integer matrix. Rows are the natural unit throughout the
/// library: lattices are row spans and homomorphisms act on row vectors.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const IntVector& diag);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  void set_row(std::size_t r, const IntVector& v);
  bool row_is_zero(std::size_t r) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  /// Rows [begin, end) as a new matrix.
  IntMatrix row_block(std::size_t begin, std::size_t end) const;
  /// Vertical concatenation; column counts must agree.
  static IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Row vector times matrix.
IntVector multiply(const IntVector& v, const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace realform
