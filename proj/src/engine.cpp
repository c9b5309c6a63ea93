#include "realform/engine.hpp"

#include <cstdlib>
#include <iostream>
#include <numeric>

#include "realform/errors.hpp"
#include "realform/families.hpp"

namespace realform {

void EngineInput::validate() const {
  if (!h_bar.parent().same_presentation(q.group())) throw ParentMismatch("h_bar is not a subgroup of Q");
  if (!chi.domain().same_presentation(z.group()) || !chi.codomain().same_presentation(q.group())) {
    throw ParentMismatch("chi must map Z to Q");
  }
  if (!is_equivariant(chi, z, q)) throw NotEquivariant("chi is not Gamma-equivariant");
  if (delta.degree() != 2 || !(delta.module() == z)) throw InvalidInput("delta must be a degree-2 class over Z");
}

std::string to_string(FailedCondition c) {
  switch (c) {
    case FailedCondition::None: return "none";
    case FailedCondition::NotCompatible: return "not_compatible";
    case FailedCondition::NotStable: return "not_stable";
    case FailedCondition::DeltaNonzero: return "delta_nonzero";
  }
  return "none";
}

FailedCondition parse_failed_condition(const std::string& name) {
  for (FailedCondition c : {FailedCondition::None, FailedCondition::NotCompatible, FailedCondition::NotStable,
                            FailedCondition::DeltaNonzero}) {
    if (to_string(c) == name) return c;
  }
  throw InvalidInput("unknown failed_condition '" + name + "'");
}

IntVector Decision::a_canonical() const {
  if (!quotient_module) return {};
  return quotient_module->group().canonical();
}

bool check_stability(const EngineInput& input) {
  for (const GroupElement& h : input.h_bar.generators()) {
    if (!input.h_bar.contains(input.q.apply(h))) return false;
  }
  return true;
}

QuotientModule quotient_module(const EngineInput& input) {
  if (!check_stability(input)) {
    throw PreconditionViolation("H/G^theta is not stable under the Gamma-action; the quotient action is undefined");
  }
  const QuotientResult quot = quotient(input.q.group(), input.h_bar);
  const std::size_t k = quot.group.rank();
  IntMatrix action(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const GroupElement image = quot.projection(input.q.apply(quot.generator_lifts[i]));
    action.set_row(i, image.coords());
  }
  GammaModule module = GammaModule::create(quot.group, Homomorphism(quot.group, quot.group, std::move(action)));
  return {std::move(module), quot.projection};
}

CohClass compute_delta_H(const EngineInput& input) {
  const QuotientModule a = quotient_module(input);
  return induced_h2(input.chi.then(a.projection), a.module, input.delta);
}

Decision decide_existence(const EngineInput& input) {
  Decision d;
  d.compatible = input.compat;
  d.stable = check_stability(input);
  if (d.stable) {
    const QuotientModule a = quotient_module(input);
    d.quotient_module = a.module;
    d.delta_zero = class_is_zero(induced_h2(input.chi.then(a.projection), a.module, input.delta));
  }
  if (!d.compatible) {
    d.failed_condition = FailedCondition::NotCompatible;
  } else if (!d.stable) {
    d.failed_condition = FailedCondition::NotStable;
  } else if (!*d.delta_zero) {
    d.failed_condition = FailedCondition::DeltaNonzero;
  } else {
    d.exists = true;
    d.num_classes = count_classes(input);
  }
  return d;
}

Integer count_classes(const EngineInput& input) {
  if (!input.compat || !check_stability(input) || !class_is_zero(compute_delta_H(input))) {
    throw PreconditionViolation("no equivariant real structure exists, so there are no classes to count");
  }
  const GammaModule a = quotient_module(input).module;
  const Integer count = h1_count_formula(a);
  const Integer by_rank = h1(a).order();
  if (count != by_rank) {
    std::cerr << "internal error: class count formula gives " << count << " but H^1 has order " << by_rank << '\n';
    std::abort();
  }
  return count;
}

std::vector<SweepRecord> sweep_sl(std::int64_t n_min, std::int64_t n_max) {
  if (n_min < 2 || n_max < n_min) {
    throw InvalidInput("sweep range must satisfy 2 <= n_min <= n_max, got [" + std::to_string(n_min) + ", " +
                       std::to_string(n_max) + "]");
  }
  std::vector<SweepRecord> out;
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    for (std::int64_t r = 1; r <= 2 * n; ++r) {
      if ((2 * n) % r != 0) continue;
      for (std::int64_t s = 0; s <= n; ++s) {
        const Decision d = decide_existence(build_sl_symplectic({n, r, s}));
        out.push_back({n, r, s, std::gcd(r, n), d.exists, d.failed_condition, d.num_classes});
      }
    }
  }
  return out;
}

}  // namespace realform
