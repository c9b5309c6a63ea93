#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "realform/engine.hpp"
#include "realform/factor_graph.hpp"

namespace realform {

/// G = SL_{2n} with the symplectic involution, H = <xi^r, G^theta> for a
/// primitive 2n-th root of unity xi, and sigma the inner twist of the
/// SU(n,n) structure with real locus SU(n+s, n-s).
struct SlSymplecticSpec {
  std::int64_t n = 2;
  std::int64_t r = 1;
  std::int64_t s = 0;
};

/// G = SL_n x SL_n (n odd) with transpose-inverse on both factors and sigma
/// exchanging the factors; h_gens generate H/G^theta in (Z/n)^2.
struct SlPairSpec {
  std::int64_t n = 3;
  std::vector<std::array<std::int64_t, 2>> h_gens;
};

/// Fully user-supplied datum. delta is a representative of the class in
/// H^2(Gamma, z); compat is either asserted or decided from a factor graph.
struct GenericSpec {
  GammaModule q;
  std::vector<GroupElement> h_gens;
  GammaModule z;
  Homomorphism chi;
  GroupElement delta;
  std::variant<bool, FactorGraph> compat;
};

/// All three throw InvalidInput (or a subclass) naming the offending field.
EngineInput build_sl_symplectic(const SlSymplecticSpec& spec);
EngineInput build_sl_pair(const SlPairSpec& spec);
EngineInput build_generic(const GenericSpec& spec);

}  // namespace realform
