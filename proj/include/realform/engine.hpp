#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realform/gamma.hpp"

namespace realform {

/// Abstract datum of a symmetric space G/H with a real structure on G,
/// normalized so the quasi-split structure preserves H.
///
///   q      N_G(G^theta)/G^theta with the induced Gamma-action
///   h_bar  H/G^theta inside q
///   z      center of G with the quasi-split action
///   chi    center -> q
///   delta  image of the inner-twist class in H^2(Gamma, z)
///   compat whether sigma o theta o sigma and theta are inner-conjugate
struct EngineInput {
  GammaModule q;
  Subgroup h_bar;
  GammaModule z;
  Homomorphism chi;
  CohClass delta;
  bool compat = false;

  /// Throws ParentMismatch / NotEquivariant / InvalidInput.
  void validate() const;
};

enum class FailedCondition { None, NotCompatible, NotStable, DeltaNonzero };

std::string to_string(FailedCondition c);
/// Throws InvalidInput on an unknown name.
FailedCondition parse_failed_condition(const std::string& name);

struct Decision {
  bool exists = false;
  /// First failing condition in the order compat, stability, obstruction.
  FailedCondition failed_condition = FailedCondition::None;
  bool compatible = false;
  bool stable = false;
  /// Set whenever h_bar is stable (the obstruction is only defined then).
  std::optional<bool> delta_zero;
  /// A = q / h_bar with the induced action; set whenever h_bar is stable.
  std::optional<GammaModule> quotient_module;
  /// 2^n, set iff exists.
  std::optional<Integer> num_classes;

  /// Invariant factors of A, empty when A is trivial or undefined.
  IntVector a_canonical() const;
};

/// gamma(h_bar) == h_bar, checked on generators.
bool check_stability(const EngineInput& input);

struct QuotientModule {
  GammaModule module;
  /// Gamma-equivariant projection q -> A.
  Homomorphism projection;
};

/// Throws PreconditionViolation when h_bar is not stable.
QuotientModule quotient_module(const EngineInput& input);

/// delta pushed along center -> q -> A. Throws PreconditionViolation when
/// h_bar is not stable.
CohClass compute_delta_H(const EngineInput& input);

Decision decide_existence(const EngineInput& input);

/// Number of equivalence classes of equivariant real structures.
/// Throws PreconditionViolation when no structure exists.
Integer count_classes(const EngineInput& input);

struct SweepRecord {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  bool exists = false;
  FailedCondition failed_condition = FailedCondition::None;
  std::optional<Integer> num_classes;
};

/// SL_{2n} symplectic family over n in [n_min, n_max], every r | 2n and
/// s in [0, n], ordered by (n, r, s). Throws InvalidInput on a bad range.
std::vector<SweepRecord> sweep_sl(std::int64_t n_min, std::int64_t n_max);

}  // namespace realform
