#include "realform/integer.hpp"

#include <cassert>
#include <stdexcept>

namespace realform {

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  ExtendedGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_prime(const Integer& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  return static_cast<std::int64_t>(v.get_si());
}

std::string to_string(const Integer& v) { return v.get_str(); }

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    m.set_row(r, rows[r]);
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void IntMatrix::set_row(std::size_t r, const IntVector& v) {
  assert(v.size() == cols_);
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

bool IntMatrix::row_is_zero(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c) {
    if ((*this)(r, c) != 0) return false;
  }
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::row_block(std::size_t begin, std::size_t end) const {
  IntMatrix out(end - begin, cols_);
  for (std::size_t r = begin; r < end; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r - begin, c) = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::stack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(top.rows_ + bottom.rows_, top.cols_);
  for (std::size_t r = 0; r < top.rows_; ++r)
    for (std::size_t c = 0; c < top.cols_; ++c) out(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows_; ++r)
    for (std::size_t c = 0; c < top.cols_; ++c) out(top.rows_ + r, c) = bottom(r, c);
  return out;
}

IntVector multiply(const IntVector& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector/matrix dimension mismatch");
  IntVector out(m.cols(), Integer(0));
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace realform
