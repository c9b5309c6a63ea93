#pragma once

#include <memory>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "realform/integer.hpp"

namespace realform {

class GroupElement;

/// Finite abelian group presented as Z/orders[0] x ... x Z/orders[k-1].
///
/// The presentation fixes the coordinate system for elements and matrices.
/// Equality is isomorphism: two groups compare equal iff their invariant
/// factors agree, whatever their presentations. Use same_presentation() when
/// coordinates must line up.
class FinAbGroup {
 public:
  /// Throws InvalidInput on an empty list or a non-positive order.
  static FinAbGroup canonicalize(IntVector orders);
  static FinAbGroup cyclic(const Integer& n);
  static FinAbGroup trivial();

  const IntVector& orders() const { return data_->orders; }
  /// Invariant factors d1 | d2 | ... with d1 >= 2; empty for the trivial group.
  const IntVector& canonical() const { return data_->canonical; }
  std::size_t rank() const { return data_->orders.size(); }
  const Integer& order() const { return data_->order; }
  Integer exponent() const;
  bool is_trivial() const { return data_->order == 1; }
  bool is_cyclic() const { return data_->canonical.size() <= 1; }

  bool operator==(const FinAbGroup& other) const { return canonical() == other.canonical(); }
  bool same_presentation(const FinAbGroup& other) const {
    return data_ == other.data_ || orders() == other.orders();
  }

  /// Coordinates are reduced modulo the orders; length must equal rank().
  GroupElement element(IntVector coords) const;
  GroupElement zero() const;
  GroupElement generator(std::size_t i) const;

 private:
  struct Data {
    IntVector orders;
    IntVector canonical;
    Integer order;
  };
  explicit FinAbGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

std::ostream& operator<<(std::ostream& os, const FinAbGroup& g);

class GroupElement {
 public:
  const FinAbGroup& parent() const { return parent_; }
  const IntVector& coords() const { return coords_; }
  bool is_zero() const;
  /// Smallest m > 0 with m*x == 0.
  Integer order() const;

  GroupElement operator+(const GroupElement& rhs) const;
  GroupElement operator-(const GroupElement& rhs) const;
  GroupElement operator-() const;
  GroupElement scaled(const Integer& k) const;

  /// Coordinates compared lexicographically; parents must share a presentation.
  bool operator==(const GroupElement& rhs) const;
  bool operator<(const GroupElement& rhs) const;

 private:
  friend class FinAbGroup;
  GroupElement(FinAbGroup parent, IntVector coords) : parent_(std::move(parent)), coords_(std::move(coords)) {}
  void require_same_parent(const GroupElement& rhs) const;
  FinAbGroup parent_;
  IntVector coords_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& x);

/// Subgroup stored as the HNF basis of the lattice spanned by its generator
/// rows together with the relation rows diag(orders). The basis is canonical,
/// so equality and membership are decided on it directly.
class Subgroup {
 public:
  /// Throws ParentMismatch if a generator lives in another group.
  static Subgroup generate(const FinAbGroup& parent, std::span<const GroupElement> gens);
  static Subgroup trivial(const FinAbGroup& parent);
  static Subgroup whole(const FinAbGroup& parent);

  const FinAbGroup& parent() const { return parent_; }
  const IntMatrix& basis() const { return basis_; }
  const Integer& order() const { return order_; }
  Integer index() const { return parent_.order() / order_; }

  bool contains(const GroupElement& x) const;
  /// Lexicographically smallest element of the coset x + this.
  GroupElement coset_representative(const GroupElement& x) const;
  /// Nonzero basis rows read as elements; they generate the subgroup.
  std::vector<GroupElement> generators() const;
  bool is_subgroup_of(const Subgroup& other) const;
  Subgroup join(const Subgroup& other) const;

  bool operator==(const Subgroup& other) const;

 private:
  Subgroup(FinAbGroup parent, IntMatrix basis);
  void require_parent(const GroupElement& x) const;
  FinAbGroup parent_;
  IntMatrix basis_;
  Integer order_;
};

/// Group homomorphism given by the images of the domain generators: row i of
/// matrix() is the image of generator i in codomain coordinates, and
/// f(x) = x * matrix() reduced modulo the codomain orders.
class Homomorphism {
 public:
  /// Throws IllDefinedMap unless orders[i] * row i vanishes in the codomain.
  Homomorphism(FinAbGroup domain, FinAbGroup codomain, IntMatrix images);

  static Homomorphism identity(const FinAbGroup& g);
  static Homomorphism zero(const FinAbGroup& domain, const FinAbGroup& codomain);
  /// x -> k*x.
  static Homomorphism scalar(const FinAbGroup& g, const Integer& k);

  const FinAbGroup& domain() const { return domain_; }
  const FinAbGroup& codomain() const { return codomain_; }
  const IntMatrix& matrix() const { return matrix_; }

  GroupElement operator()(const GroupElement& x) const;
  /// this, then next.
  Homomorphism then(const Homomorphism& next) const;
  Homomorphism operator+(const Homomorphism& rhs) const;
  Homomorphism operator-(const Homomorphism& rhs) const;
  Homomorphism operator-() const;
  bool operator==(const Homomorphism& rhs) const;

  Subgroup kernel() const;
  Subgroup image() const;
  bool is_automorphism() const;

 private:
  FinAbGroup domain_;
  FinAbGroup codomain_;
  IntMatrix matrix_;
};

struct KernelImage {
  Subgroup kernel;
  Subgroup image;
};

KernelImage kernel_image(const Homomorphism& f);

struct QuotientResult {
  /// Presented by its invariant factors (or [1] when trivial).
  FinAbGroup group;
  Homomorphism projection;
  /// Section on generators: projection(lift(q)) == q.
  std::vector<GroupElement> generator_lifts;

  GroupElement lift(const GroupElement& q) const;
};

QuotientResult quotient(const FinAbGroup& parent, const Subgroup& sub);

struct SubquotientResult {
  /// Invariant factors of sup/sub, each >= 2.
  IntVector invariants;
  /// Elements of sup whose classes generate sup/sub, one per invariant.
  std::vector<GroupElement> generators;
};

/// Structure of sup/sub for sub a subgroup of sup (same parent).
SubquotientResult subquotient(const Subgroup& sup, const Subgroup& sub);

struct PrimaryPart {
  /// Presented as Z/p^{e_i} for each presentation factor of the parent.
  FinAbGroup group;
  Subgroup subgroup;
  /// Embedding group -> parent with image subgroup.
  Homomorphism inclusion;
};

/// Maximal p-subgroup. Throws InvalidInput if p is not prime.
PrimaryPart primary_part(const FinAbGroup& g, const Integer& p);

/// Distinct primes dividing n, ascending.
std::vector<Integer> prime_divisors(Integer n);

}  // namespace realform
