#include "realform/families.hpp"

#include <numeric>

#include "realform/errors.hpp"

namespace realform {

EngineInput build_sl_symplectic(const SlSymplecticSpec& spec) {
  const auto [n, r, s] = spec;
  if (n < 2) throw InvalidInput("sl-symplectic: n must be >= 2, got " + std::to_string(n));
  if (r < 1 || (2 * n) % r != 0) {
    throw InvalidInput("sl-symplectic: r must be a positive divisor of 2n = " + std::to_string(2 * n) + ", got " +
                       std::to_string(r));
  }
  if (s < 0 || s > n) throw InvalidInput("sl-symplectic: s must lie in [0, n], got " + std::to_string(s));

  // N_G(G^theta)/G^theta is the image of the center Z/2n modulo the central
  // elements of G^theta (+-1), i.e. Z/n, and the center acts on it by
  // reduction. Both actions are trivial.
  const FinAbGroup q_group = FinAbGroup::cyclic(Integer(static_cast<long>(n)));
  const FinAbGroup z_group = FinAbGroup::cyclic(Integer(static_cast<long>(2 * n)));
  GammaModule q = GammaModule::trivial(q_group);
  GammaModule z = GammaModule::trivial(z_group);
  const GroupElement h = q_group.element({Integer(static_cast<long>(r))});
  Subgroup h_bar = Subgroup::generate(q_group, std::span(&h, 1));
  IntMatrix chi_m(1, 1);
  chi_m(0, 0) = 1;
  Homomorphism chi(z_group, q_group, std::move(chi_m));
  // H^2(Gamma, Z/2n) = Z/2 under the trivial action, and the inner twist
  // class of sigma_s is s mod 2; 1 represents the nonzero class.
  CohClass delta(2, z, z_group.element({Integer(static_cast<long>(s % 2))}));
  EngineInput input{std::move(q), std::move(h_bar), std::move(z), std::move(chi), std::move(delta), true};
  input.validate();
  return input;
}

EngineInput build_sl_pair(const SlPairSpec& spec) {
  if (spec.n < 3 || spec.n % 2 == 0) {
    throw InvalidInput("sl-pair: n must be odd and >= 3, got " + std::to_string(spec.n));
  }
  const Integer n(static_cast<long>(spec.n));
  const FinAbGroup group = FinAbGroup::canonicalize({n, n});
  IntMatrix swap_neg(2, 2);
  swap_neg(0, 1) = -1;
  swap_neg(1, 0) = -1;
  GammaModule q = GammaModule::create(group, Homomorphism(group, group, swap_neg));
  std::vector<GroupElement> gens;
  for (const auto& [a, b] : spec.h_gens) {
    gens.push_back(group.element({Integer(static_cast<long>(a)), Integer(static_cast<long>(b))}));
  }
  Subgroup h_bar = Subgroup::generate(group, gens);
  // For odd n the center meets G^theta trivially and maps isomorphically
  // onto q, so the center is modelled by q itself.
  GammaModule z = q;
  CohClass delta = CohClass::zero(2, z);
  EngineInput input{std::move(q), std::move(h_bar), std::move(z), Homomorphism::identity(group), std::move(delta),
                    true};
  input.validate();
  return input;
}

EngineInput build_generic(const GenericSpec& spec) {
  for (std::size_t i = 0; i < spec.h_gens.size(); ++i) {
    if (!spec.h_gens[i].parent().same_presentation(spec.q.group())) {
      throw ParentMismatch("field h_gens[" + std::to_string(i) + "]: element does not belong to Q");
    }
  }
  if (!spec.chi.domain().same_presentation(spec.z.group())) {
    throw ParentMismatch("field chi: domain must be the group of Z");
  }
  if (!spec.chi.codomain().same_presentation(spec.q.group())) {
    throw ParentMismatch("field chi: codomain must be the group of Q");
  }
  if (!is_equivariant(spec.chi, spec.z, spec.q)) throw NotEquivariant("field chi: map is not Gamma-equivariant");
  if (!spec.delta.parent().same_presentation(spec.z.group())) {
    throw ParentMismatch("field delta: representative must be an element of Z");
  }
  if (!(spec.z.apply(spec.delta) == spec.delta)) {
    throw InvalidInput("field delta: degree-2 representative must be fixed by the Gamma-action on Z");
  }
  bool compat = false;
  if (const bool* flag = std::get_if<bool>(&spec.compat)) {
    compat = *flag;
  } else {
    compat = is_theta_sigma_compatible(std::get<FactorGraph>(spec.compat));
  }
  EngineInput input{spec.q, Subgroup::generate(spec.q.group(), spec.h_gens), spec.z, spec.chi,
                    CohClass(2, spec.z, spec.delta), compat};
  input.validate();
  return input;
}

}  // namespace realform
