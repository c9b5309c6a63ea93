#include "realform/normal_form.hpp"

#include <stdexcept>

namespace realform {

HermiteForm hermite(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  HermiteForm out{input, IntMatrix::identity(m), 0, {}};
  IntMatrix& h = out.hnf;
  IntMatrix& u = out.transform;

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Fold every entry below row r in column c into row r with gcd steps.
    for (std::size_t i = r + 1; i < m; ++i) {
      if (h(i, c) == 0) continue;
      if (h(r, c) == 0) {
        h.swap_rows(r, i);
        u.swap_rows(r, i);
        continue;
      }
      const Integer a = h(r, c);
      const Integer b = h(i, c);
      const ExtendedGcd eg = extended_gcd(a, b);
      const Integer a_g = a / eg.g;
      const Integer b_g = b / eg.g;
      // [row_r; row_i] <- [[x, y], [-b/g, a/g]] * [row_r; row_i], det 1.
      for (IntMatrix* mat : {&h, &u}) {
        for (std::size_t k = 0; k < mat->cols(); ++k) {
          const Integer vr = (*mat)(r, k);
          const Integer vi = (*mat)(i, k);
          (*mat)(r, k) = eg.x * vr + eg.y * vi;
          (*mat)(i, k) = a_g * vi - b_g * vr;
        }
      }
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t j = 0; j < r; ++j) {
      const Integer q = floor_div(h(j, c), h(r, c));
      if (q == 0) continue;
      h.add_row_multiple(j, r, -q);
      u.add_row_multiple(j, r, -q);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

namespace {

struct SmithState {
  IntMatrix m, left, right, right_inv;

  void swap_rows(std::size_t a, std::size_t b) {
    m.swap_rows(a, b);
    left.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    m.swap_cols(a, b);
    right.swap_cols(a, b);
    right_inv.swap_rows(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    m.add_row_multiple(dst, src, k);
    left.add_row_multiple(dst, src, k);
  }
  // col_dst += k col_src; inverse side is row_src -= k row_dst.
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    m.add_col_multiple(dst, src, k);
    right.add_col_multiple(dst, src, k);
    right_inv.add_row_multiple(src, dst, -k);
  }
  void negate_row(std::size_t r) {
    m.negate_row(r);
    left.negate_row(r);
  }
};

}  // namespace

SmithForm smith(const IntMatrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  SmithState s{input, IntMatrix::identity(rows), IntMatrix::identity(cols), IntMatrix::identity(cols)};
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // Smallest nonzero entry in the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (s.m(i, j) == 0) continue;
          if (pi == rows || abs(s.m(i, j)) < abs(s.m(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) break;
      s.swap_rows(t, pi);
      s.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.m(i, t) == 0) continue;
        s.add_row(i, t, -floor_div(s.m(i, t), s.m(t, t)));
        if (s.m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.m(t, j) == 0) continue;
        s.add_col(j, t, -floor_div(s.m(t, j), s.m(t, t)));
        if (s.m(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: pull in a row whose entries the pivot does not divide.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (s.m(i, j) % s.m(t, t) != 0) {
            s.add_row(t, i, Integer(1));
            divides_all = false;
            break;
          }
        }
      if (divides_all) break;
    }
    if (s.m(t, t) < 0) s.negate_row(t);
  }

  SmithForm out;
  out.invariants.reserve(diag);
  for (std::size_t t = 0; t < diag; ++t) out.invariants.push_back(s.m(t, t));
  out.left = std::move(s.left);
  out.right = std::move(s.right);
  out.right_inverse = std::move(s.right_inv);
  return out;
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  HermiteForm hf = hermite(generators);
  return hf.hnf.row_block(0, hf.rank);
}

IntVector reduce_mod_lattice(const IntMatrix& basis, IntVector v) {
  const std::size_t k = basis.rows();
  if (basis.cols() != k || v.size() != k) throw std::invalid_argument("reduce_mod_lattice: shape mismatch");
  for (std::size_t c = 0; c < k; ++c) {
    const Integer q = floor_div(v[c], basis(c, c));
    if (q == 0) continue;
    for (std::size_t j = c; j < k; ++j) v[j] -= q * basis(c, j);
  }
  return v;
}

std::optional<IntVector> coordinates_in_basis(const IntMatrix& basis, const IntVector& v) {
  const std::size_t k = basis.rows();
  if (basis.cols() != k || v.size() != k) throw std::invalid_argument("coordinates_in_basis: shape mismatch");
  IntVector rest = v;
  IntVector x(k, Integer(0));
  for (std::size_t c = 0; c < k; ++c) {
    if (rest[c] % basis(c, c) != 0) return std::nullopt;
    x[c] = rest[c] / basis(c, c);
    for (std::size_t j = c; j < k; ++j) rest[j] -= x[c] * basis(c, j);
  }
  return x;
}

Integer diagonal_product(const IntMatrix& m) {
  Integer p = 1;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) p *= m(i, i);
  return p;
}

}  // namespace realform
