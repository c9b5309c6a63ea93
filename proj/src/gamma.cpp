#include "realform/gamma.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>

#include "realform/errors.hpp"

namespace realform {

GammaModule GammaModule::create(const FinAbGroup& group, const Homomorphism& action) {
  if (!action.domain().same_presentation(group) || !action.codomain().same_presentation(group)) {
    throw ParentMismatch("Gamma action must be an endomorphism of the module's group");
  }
  if (!action.is_automorphism()) throw NotAutomorphism("Gamma action is not an automorphism");
  if (!(action.then(action) == Homomorphism::identity(group))) {
    throw NotInvolution("Gamma action does not square to the identity");
  }
  return GammaModule(group, action);
}

GammaModule GammaModule::trivial(const FinAbGroup& group) {
  return GammaModule(group, Homomorphism::identity(group));
}

GammaModule GammaModule::inversion(const FinAbGroup& group) {
  return GammaModule(group, Homomorphism::scalar(group, Integer(-1)));
}

Subgroup fixed_subgroup(const GammaModule& m) {
  return (m.action() - Homomorphism::identity(m.group())).kernel();
}

Subgroup cocycles(const GammaModule& m) { return (m.action() + Homomorphism::identity(m.group())).kernel(); }

Subgroup coboundaries(const GammaModule& m) {
  return (m.action() - Homomorphism::identity(m.group())).image();
}

Subgroup norms(const GammaModule& m) { return (m.action() + Homomorphism::identity(m.group())).image(); }

GammaModule twisted(const GammaModule& m) { return GammaModule::create(m.group(), -m.action()); }

GammaModule restrict_to_primary(const GammaModule& m, const Integer& p) {
  const PrimaryPart part = primary_part(m.group(), p);
  // The inclusion scales coordinate i by the p'-part of orders[i]; every
  // element of A_p is a multiple of that scale coordinatewise.
  const std::size_t k = part.group.rank();
  IntMatrix action(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const GroupElement image = m.apply(part.inclusion(part.group.generator(i)));
    for (std::size_t j = 0; j < k; ++j) {
      // scale = orders[j] / |part j|; the matrix entry itself is reduced mod orders[j]
      const Integer scale = m.group().orders()[j] / part.group.orders()[j];
      action(i, j) = image.coords()[j] / scale;
    }
  }
  return GammaModule::create(part.group, Homomorphism(part.group, part.group, std::move(action)));
}

Integer H1Result::order() const {
  Integer o = 1;
  for (std::size_t i = 0; i < rank; ++i) o *= 2;
  return o;
}

H1Result h1(const GammaModule& m) {
  const Subgroup z1 = cocycles(m);
  const Subgroup b1 = coboundaries(m);
  const SubquotientResult sq = subquotient(z1, b1);
  for (const Integer& d : sq.invariants) {
    if (d != 2) {
      std::cerr << "internal error: H^1 invariant factor " << d << " is not 2\n";
      std::abort();
    }
  }
  H1Result out;
  out.rank = sq.generators.size();
  const std::size_t count = std::size_t{1} << out.rank;
  out.representatives.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    GroupElement x = m.group().zero();
    for (std::size_t i = 0; i < out.rank; ++i) {
      if (mask & (std::size_t{1} << i)) x = x + sq.generators[i];
    }
    out.representatives.push_back(b1.coset_representative(x));
  }
  std::sort(out.representatives.begin(), out.representatives.end());
  return out;
}

H2Result h2(const GammaModule& m) {
  Subgroup fixed = fixed_subgroup(m);
  Subgroup norm = norms(m);
  const SubquotientResult sq = subquotient(fixed, norm);
  FinAbGroup group = sq.invariants.empty() ? FinAbGroup::trivial() : FinAbGroup::canonicalize(sq.invariants);
  return {group, std::move(fixed), std::move(norm)};
}

// ------------------------------------------------------------------ CohClass

CohClass::CohClass(int degree, GammaModule module, const GroupElement& representative)
    : degree_(degree), module_(std::move(module)), rep_(representative) {
  if (degree_ != 1 && degree_ != 2) throw InvalidInput("cohomology degree must be 1 or 2");
  if (!rep_.parent().same_presentation(module_.group())) {
    throw ParentMismatch("class representative does not belong to the module");
  }
  if (degree_ == 1) {
    if (!(rep_ + module_.apply(rep_)).is_zero()) throw InvalidInput("degree-1 representative is not a cocycle");
    rep_ = coboundaries(module_).coset_representative(rep_);
  } else {
    if (!(module_.apply(rep_) == rep_)) throw InvalidInput("degree-2 representative is not Gamma-fixed");
    rep_ = norms(module_).coset_representative(rep_);
  }
}

CohClass CohClass::zero(int degree, const GammaModule& module) {
  return CohClass(degree, module, module.group().zero());
}

bool CohClass::operator==(const CohClass& other) const {
  return degree_ == other.degree_ && module_ == other.module_ && rep_ == other.rep_;
}

bool class_is_zero(const CohClass& c) {
  if (c.degree() == 1) return coboundaries(c.module()).contains(c.representative());
  return norms(c.module()).contains(c.representative());
}

bool is_equivariant(const Homomorphism& f, const GammaModule& source, const GammaModule& target) {
  if (!f.domain().same_presentation(source.group()) || !f.codomain().same_presentation(target.group())) {
    return false;
  }
  return source.action().then(f) == f.then(target.action());
}

CohClass induced_h2(const Homomorphism& f, const GammaModule& target, const CohClass& c) {
  if (c.degree() != 2) throw InvalidInput("induced_h2 expects a degree-2 class");
  if (!f.domain().same_presentation(c.module().group()) || !f.codomain().same_presentation(target.group())) {
    throw ParentMismatch("induced_h2: map does not go from the class's module to the target");
  }
  if (!is_equivariant(f, c.module(), target)) throw NotEquivariant("induced_h2: map is not Gamma-equivariant");
  return CohClass(2, target, f(c.representative()));
}

Integer h1_count_formula(const GammaModule& m) {
  const GammaModule a2 = restrict_to_primary(m, Integer(2));
  const Integer numerator = fixed_subgroup(twisted(a2)).order() * fixed_subgroup(a2).order();
  const Integer& denominator = a2.group().order();
  if (numerator % denominator != 0) {
    std::cerr << "internal error: |A2^G'|*|A2^G| = " << numerator << " not divisible by |A2| = " << denominator
              << '\n';
    std::abort();
  }
  return numerator / denominator;
}

}  // namespace realform
