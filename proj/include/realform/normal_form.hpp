#pragma once

#include <optional>

#include "realform/integer.hpp"

namespace realform {

/// Row Hermite normal form: transform * input == hnf, transform unimodular.
/// Nonzero rows of hnf come first, pivots are positive and strictly increase
/// in column index, and entries above each pivot lie in [0, pivot).
struct HermiteForm {
  IntMatrix hnf;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

HermiteForm hermite(const IntMatrix& input);

/// Smith normal form: left * input * right == diag(invariants), with
/// invariants[i] | invariants[i+1], nonnegative, zeros last.
/// right_inverse is right^{-1}, kept so callers can lift quotient generators.
struct SmithForm {
  IntVector invariants;
  IntMatrix left;
  IntMatrix right;
  IntMatrix right_inverse;
};

SmithForm smith(const IntMatrix& input);

/// HNF basis (nonzero rows only) of the row lattice spanned by generators.
IntMatrix lattice_basis(const IntMatrix& generators);

/// For a square, nonsingular HNF basis: reduces v to its canonical
/// representative modulo the lattice, with coordinate i in [0, basis(i,i)).
IntVector reduce_mod_lattice(const IntMatrix& basis, IntVector v);

/// For a square, nonsingular HNF basis: integer x with x * basis == v, or
/// nullopt if v is not in the lattice.
std::optional<IntVector> coordinates_in_basis(const IntMatrix& basis, const IntVector& v);

/// Product of the diagonal of a square matrix.
Integer diagonal_product(const IntMatrix& m);

}  // namespace realform
