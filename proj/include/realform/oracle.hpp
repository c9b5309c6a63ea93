#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "realform/gamma.hpp"

namespace realform {

struct EnumerationBudget {
  std::uint64_t max_order = 4096;

  /// Throws InvalidInput unless max_order >= 1.
  void validate() const;
  /// Default budget, overridden by REALFORM_BUDGET when set.
  static EnumerationBudget from_environment();
};

/// Brute-force counterparts of the normal-form computations. Everything here
/// works on explicit element tables and never calls into the lattice code,
/// except to convert final answers into canonical Subgroup values.
namespace oracle {

struct Enumerated {
  Integer count;
  /// Lexicographically smallest element of each class, ascending.
  std::vector<GroupElement> representatives;
};

/// Z^1 = {a : a + gamma a = 0} over B^1 = {b - gamma b}.
Enumerated h1_enumerate(const GammaModule& m, const EnumerationBudget& budget);
/// A^Gamma over {a + gamma a}.
Enumerated h2_enumerate(const GammaModule& m, const EnumerationBudget& budget);

/// All subgroups, ascending by order and then by canonical basis.
std::vector<Subgroup> enumerate_subgroups(const FinAbGroup& g, const EnumerationBudget& budget);

/// Enumeration count of H^1 == h1_count_formula == 2^(rank from h1).
bool verify_formula(const GammaModule& m, const EnumerationBudget& budget);

/// Every automorphism of g, or nullopt once more than limit are found.
std::optional<std::vector<Homomorphism>> enumerate_automorphisms(const FinAbGroup& g, std::size_t limit,
                                                                 const EnumerationBudget& budget);

/// Involutive automorphisms (identity included), or nullopt when g has more
/// than automorphism_limit automorphisms.
std::optional<std::vector<Homomorphism>> involutive_automorphisms(const FinAbGroup& g,
                                                                  std::size_t automorphism_limit,
                                                                  const EnumerationBudget& budget);

/// Up to count distinct involutions obtained by conjugating random sign/swap
/// involutions with random automorphisms. Deterministic in seed.
std::vector<Homomorphism> sample_involutions(const FinAbGroup& g, std::size_t count, std::uint64_t seed,
                                             const EnumerationBudget& budget);

}  // namespace oracle
}  // namespace realform
