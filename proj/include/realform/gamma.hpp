#pragma once

#include <vector>

#include "realform/abelian.hpp"

namespace realform {

/// Finite abelian group with an involutive automorphism, the action of the
/// generator of Gal(C/R). All notation is additive.
class GammaModule {
 public:
  /// Throws NotAutomorphism or NotInvolution (distinct types) on bad actions,
  /// ParentMismatch if action is not an endomorphism of group.
  static GammaModule create(const FinAbGroup& group, const Homomorphism& action);
  static GammaModule trivial(const FinAbGroup& group);
  static GammaModule inversion(const FinAbGroup& group);

  const FinAbGroup& group() const { return group_; }
  const Homomorphism& action() const { return action_; }
  GroupElement apply(const GroupElement& x) const { return action_(x); }

  /// Same group and same action matrix.
  bool operator==(const GammaModule& other) const {
    return group_.same_presentation(other.group_) && action_ == other.action_;
  }

 private:
  GammaModule(FinAbGroup g, Homomorphism a) : group_(std::move(g)), action_(std::move(a)) {}
  FinAbGroup group_;
  Homomorphism action_;
};

/// A^Gamma = ker(gamma - 1).
Subgroup fixed_subgroup(const GammaModule& m);
/// Z^1 = ker(1 + gamma).
Subgroup cocycles(const GammaModule& m);
/// B^1 = im(gamma - 1).
Subgroup coboundaries(const GammaModule& m);
/// N(A) = im(1 + gamma).
Subgroup norms(const GammaModule& m);

/// Same group with action -gamma.
GammaModule twisted(const GammaModule& m);

/// Restriction to the maximal p-subgroup, in the coordinates of primary_part.
GammaModule restrict_to_primary(const GammaModule& m, const Integer& p);

struct H1Result {
  /// H^1 is elementary abelian of this rank.
  std::size_t rank = 0;
  /// Canonical representative of every class, sorted; the zero class first.
  std::vector<GroupElement> representatives;
  Integer order() const;
};

H1Result h1(const GammaModule& m);

struct H2Result {
  /// A^Gamma / N(A) by invariant factors.
  FinAbGroup group;
  Subgroup fixed;
  Subgroup norm_subgroup;
};

H2Result h2(const GammaModule& m);

/// An element of H^1 or H^2 stored by its canonical representative.
class CohClass {
 public:
  /// Throws InvalidInput if representative is not a cocycle (degree 1) or is
  /// not Gamma-fixed (degree 2), or the degree is not 1 or 2.
  CohClass(int degree, GammaModule module, const GroupElement& representative);
  static CohClass zero(int degree, const GammaModule& module);

  int degree() const { return degree_; }
  const GammaModule& module() const { return module_; }
  const GroupElement& representative() const { return rep_; }

  bool operator==(const CohClass& other) const;

 private:
  int degree_;
  GammaModule module_;
  GroupElement rep_;
};

bool class_is_zero(const CohClass& c);

/// Pushes a degree-2 class along a Gamma-equivariant f: c.module() -> target.
/// Throws NotEquivariant if f does not commute with the actions.
CohClass induced_h2(const Homomorphism& f, const GammaModule& target, const CohClass& c);

/// f o gamma_source == gamma_target o f.
bool is_equivariant(const Homomorphism& f, const GammaModule& source, const GammaModule& target);

/// |H^1| via |A_2^{Gamma'}| * |A_2^Gamma| / |A_2|.
Integer h1_count_formula(const GammaModule& m);

}  // namespace realform
