#include "realform/abelian.hpp"

#include <algorithm>
#include <numeric>

#include "realform/errors.hpp"
#include "realform/normal_form.hpp"

namespace realform {

namespace {

std::string format_orders(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + "]";
}

IntVector reduce_coords(const IntVector& orders, IntVector coords) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = floor_mod(coords[i], orders[i]);
  return coords;
}

}  // namespace

// ---------------------------------------------------------------- FinAbGroup

FinAbGroup FinAbGroup::canonicalize(IntVector orders) {
  if (orders.empty()) throw InvalidInput("group presentation must list at least one cyclic order");
  for (const Integer& d : orders) {
    if (d < 1) throw InvalidInput("cyclic orders must be >= 1, got " + d.get_str());
  }
  Data data;
  data.order = 1;
  for (const Integer& d : orders) data.order *= d;
  const SmithForm sf = smith(IntMatrix::diagonal(orders));
  for (const Integer& d : sf.invariants) {
    if (d != 1) data.canonical.push_back(d);
  }
  data.orders = std::move(orders);
  return FinAbGroup(std::make_shared<const Data>(std::move(data)));
}

FinAbGroup FinAbGroup::cyclic(const Integer& n) { return canonicalize({n}); }

FinAbGroup FinAbGroup::trivial() { return canonicalize({Integer(1)}); }

Integer FinAbGroup::exponent() const {
  Integer e = 1;
  for (const Integer& d : orders()) e = lcm(e, d);
  return e;
}

GroupElement FinAbGroup::element(IntVector coords) const {
  if (coords.size() != rank()) {
    throw ParentMismatch("element has " + std::to_string(coords.size()) + " coordinates, group " +
                         format_orders(orders()) + " has rank " + std::to_string(rank()));
  }
  return GroupElement(*this, reduce_coords(orders(), std::move(coords)));
}

GroupElement FinAbGroup::zero() const { return GroupElement(*this, IntVector(rank(), Integer(0))); }

GroupElement FinAbGroup::generator(std::size_t i) const {
  IntVector c(rank(), Integer(0));
  c.at(i) = 1;
  return element(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const FinAbGroup& g) {
  os << "Z/" << format_orders(g.orders());
  return os;
}

// -------------------------------------------------------------- GroupElement

void GroupElement::require_same_parent(const GroupElement& rhs) const {
  if (!parent_.same_presentation(rhs.parent_)) {
    throw ParentMismatch("elements of " + format_orders(parent_.orders()) + " and " +
                         format_orders(rhs.parent_.orders()) + " cannot be combined");
  }
}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

Integer GroupElement::order() const {
  Integer ord = 1;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Integer& n = parent_.orders()[i];
    ord = lcm(ord, Integer(n / gcd(n, coords_[i])));
  }
  return ord;
}

GroupElement GroupElement::operator+(const GroupElement& rhs) const {
  require_same_parent(rhs);
  IntVector c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + rhs.coords_[i];
  return GroupElement(parent_, reduce_coords(parent_.orders(), std::move(c)));
}

GroupElement GroupElement::operator-(const GroupElement& rhs) const { return *this + (-rhs); }

GroupElement GroupElement::operator-() const {
  IntVector c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
  return GroupElement(parent_, reduce_coords(parent_.orders(), std::move(c)));
}

GroupElement GroupElement::scaled(const Integer& k) const {
  IntVector c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * coords_[i];
  return GroupElement(parent_, reduce_coords(parent_.orders(), std::move(c)));
}

bool GroupElement::operator==(const GroupElement& rhs) const {
  require_same_parent(rhs);
  return coords_ == rhs.coords_;
}

bool GroupElement::operator<(const GroupElement& rhs) const {
  require_same_parent(rhs);
  return coords_ < rhs.coords_;
}

std::ostream& operator<<(std::ostream& os, const GroupElement& x) {
  os << '(';
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    if (i) os << ',';
    os << x.coords()[i];
  }
  return os << ')';
}

// ------------------------------------------------------------------ Subgroup

Subgroup::Subgroup(FinAbGroup parent, IntMatrix basis)
    : parent_(std::move(parent)), basis_(std::move(basis)), order_(parent_.order() / diagonal_product(basis_)) {}

Subgroup Subgroup::generate(const FinAbGroup& parent, std::span<const GroupElement> gens) {
  const std::size_t k = parent.rank();
  IntMatrix rows(gens.size() + k, k);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].parent().same_presentation(parent)) {
      throw ParentMismatch("generator " + std::to_string(i) + " does not belong to " + format_orders(parent.orders()));
    }
    rows.set_row(i, gens[i].coords());
  }
  for (std::size_t i = 0; i < k; ++i) rows(gens.size() + i, i) = parent.orders()[i];
  return Subgroup(parent, lattice_basis(rows));
}

Subgroup Subgroup::trivial(const FinAbGroup& parent) { return generate(parent, {}); }

Subgroup Subgroup::whole(const FinAbGroup& parent) {
  return Subgroup(parent, IntMatrix::identity(parent.rank()));
}

void Subgroup::require_parent(const GroupElement& x) const {
  if (!x.parent().same_presentation(parent_)) {
    throw ParentMismatch("element of " + format_orders(x.parent().orders()) + " tested against a subgroup of " +
                         format_orders(parent_.orders()));
  }
}

bool Subgroup::contains(const GroupElement& x) const {
  require_parent(x);
  const IntVector r = reduce_mod_lattice(basis_, x.coords());
  return std::all_of(r.begin(), r.end(), [](const Integer& c) { return c == 0; });
}

GroupElement Subgroup::coset_representative(const GroupElement& x) const {
  require_parent(x);
  return parent_.element(reduce_mod_lattice(basis_, x.coords()));
}

std::vector<GroupElement> Subgroup::generators() const {
  std::vector<GroupElement> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    GroupElement g = parent_.element(basis_.row(r));
    if (!g.is_zero()) out.push_back(std::move(g));
  }
  return out;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (!parent_.same_presentation(other.parent_)) return false;
  for (const GroupElement& g : generators()) {
    if (!other.contains(g)) return false;
  }
  return true;
}

Subgroup Subgroup::join(const Subgroup& other) const {
  if (!parent_.same_presentation(other.parent_)) throw ParentMismatch("join of subgroups of different groups");
  std::vector<GroupElement> gens = generators();
  for (GroupElement& g : other.generators()) gens.push_back(std::move(g));
  return generate(parent_, gens);
}

bool Subgroup::operator==(const Subgroup& other) const {
  return parent_.same_presentation(other.parent_) && basis_ == other.basis_;
}

// -------------------------------------------------------------- Homomorphism

Homomorphism::Homomorphism(FinAbGroup domain, FinAbGroup codomain, IntMatrix images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(images)) {
  if (matrix_.rows() != domain_.rank() || matrix_.cols() != codomain_.rank()) {
    throw IllDefinedMap("homomorphism matrix must be " + std::to_string(domain_.rank()) + "x" +
                        std::to_string(codomain_.rank()));
  }
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
      const Integer& cj = codomain_.orders()[j];
      matrix_(i, j) = floor_mod(matrix_(i, j), cj);
      if ((domain_.orders()[i] * matrix_(i, j)) % cj != 0) {
        throw IllDefinedMap("generator " + std::to_string(i) + " of order " + domain_.orders()[i].get_str() +
                            " cannot map to coordinate " + matrix_(i, j).get_str() + " mod " + cj.get_str());
      }
    }
}

Homomorphism Homomorphism::identity(const FinAbGroup& g) {
  return Homomorphism(g, g, IntMatrix::identity(g.rank()));
}

Homomorphism Homomorphism::zero(const FinAbGroup& domain, const FinAbGroup& codomain) {
  return Homomorphism(domain, codomain, IntMatrix(domain.rank(), codomain.rank()));
}

Homomorphism Homomorphism::scalar(const FinAbGroup& g, const Integer& k) {
  IntMatrix m = IntMatrix::identity(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) m(i, i) = k;
  return Homomorphism(g, g, std::move(m));
}

GroupElement Homomorphism::operator()(const GroupElement& x) const {
  if (!x.parent().same_presentation(domain_)) {
    throw ParentMismatch("homomorphism applied to an element outside its domain");
  }
  return codomain_.element(multiply(x.coords(), matrix_));
}

Homomorphism Homomorphism::then(const Homomorphism& next) const {
  if (!codomain_.same_presentation(next.domain_)) throw ParentMismatch("composition of non-composable maps");
  return Homomorphism(domain_, next.codomain_, matrix_ * next.matrix_);
}

Homomorphism Homomorphism::operator+(const Homomorphism& rhs) const {
  if (!domain_.same_presentation(rhs.domain_) || !codomain_.same_presentation(rhs.codomain_)) {
    throw ParentMismatch("sum of maps with different domain or codomain");
  }
  return Homomorphism(domain_, codomain_, matrix_ + rhs.matrix_);
}

Homomorphism Homomorphism::operator-(const Homomorphism& rhs) const { return *this + (-rhs); }

Homomorphism Homomorphism::operator-() const {
  IntMatrix m = matrix_;
  for (std::size_t r = 0; r < m.rows(); ++r) m.negate_row(r);
  return Homomorphism(domain_, codomain_, std::move(m));
}

bool Homomorphism::operator==(const Homomorphism& rhs) const {
  return domain_.same_presentation(rhs.domain_) && codomain_.same_presentation(rhs.codomain_) &&
         matrix_ == rhs.matrix_;
}

Subgroup Homomorphism::kernel() const {
  // x lies in the kernel iff (x, y) * [M; diag(codomain orders)] == 0 for
  // some integer y, so the kernel lattice is the projection of the left null
  // space of the stacked matrix onto its first k coordinates.
  const std::size_t k = domain_.rank();
  const IntMatrix stacked = IntMatrix::stack(matrix_, IntMatrix::diagonal(codomain_.orders()));
  const HermiteForm hf = hermite(stacked);
  std::vector<GroupElement> gens;
  for (std::size_t r = hf.rank; r < stacked.rows(); ++r) {
    IntVector x(k);
    for (std::size_t c = 0; c < k; ++c) x[c] = hf.transform(r, c);
    gens.push_back(domain_.element(std::move(x)));
  }
  return Subgroup::generate(domain_, gens);
}

Subgroup Homomorphism::image() const {
  std::vector<GroupElement> gens;
  for (std::size_t r = 0; r < matrix_.rows(); ++r) gens.push_back(codomain_.element(matrix_.row(r)));
  return Subgroup::generate(codomain_, gens);
}

bool Homomorphism::is_automorphism() const {
  return domain_.same_presentation(codomain_) && kernel().order() == 1;
}

KernelImage kernel_image(const Homomorphism& f) { return {f.kernel(), f.image()}; }

// ------------------------------------------------------------------ quotient

GroupElement QuotientResult::lift(const GroupElement& q) const {
  if (!q.parent().same_presentation(group)) throw ParentMismatch("lift of an element outside the quotient");
  GroupElement out = projection.domain().zero();
  for (std::size_t i = 0; i < q.coords().size(); ++i) out = out + generator_lifts[i].scaled(q.coords()[i]);
  return out;
}

QuotientResult quotient(const FinAbGroup& parent, const Subgroup& sub) {
  if (!sub.parent().same_presentation(parent)) throw ParentMismatch("quotient by a subgroup of another group");
  // parent/sub == Z^k / L with L the subgroup lattice; with U*L*V = D the
  // map x -> x*V (mod D) realizes Z^k/L as a product of cyclic groups.
  const SmithForm sf = smith(sub.basis());
  std::vector<std::size_t> kept;
  IntVector orders;
  for (std::size_t i = 0; i < sf.invariants.size(); ++i) {
    if (sf.invariants[i] != 1) {
      kept.push_back(i);
      orders.push_back(sf.invariants[i]);
    }
  }
  const std::size_t k = parent.rank();
  if (kept.empty()) {
    FinAbGroup trivial = FinAbGroup::trivial();
    return {trivial, Homomorphism::zero(parent, trivial), {parent.zero()}};
  }
  FinAbGroup group = FinAbGroup::canonicalize(orders);
  IntMatrix proj(k, kept.size());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < kept.size(); ++j) proj(i, j) = sf.right(i, kept[j]);
  std::vector<GroupElement> lifts;
  for (std::size_t idx : kept) lifts.push_back(parent.element(sf.right_inverse.row(idx)));
  return {group, Homomorphism(parent, group, std::move(proj)), std::move(lifts)};
}

SubquotientResult subquotient(const Subgroup& sup, const Subgroup& sub) {
  if (!sub.is_subgroup_of(sup)) throw InvalidInput("subquotient: first argument must contain the second");
  const IntMatrix& hsup = sup.basis();
  const IntMatrix& hsub = sub.basis();
  const std::size_t k = hsup.rows();
  IntMatrix coeffs(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    const auto x = coordinates_in_basis(hsup, hsub.row(r));
    if (!x) throw InvalidInput("subquotient: lattice containment failed");
    coeffs.set_row(r, *x);
  }
  // hsub = C*hsup = U^{-1} D (V^{-1} hsup): rows of V^{-1} hsup generate sup
  // and D times them generates sub.
  const SmithForm sf = smith(coeffs);
  const IntMatrix new_basis = sf.right_inverse * hsup;
  SubquotientResult out;
  for (std::size_t i = 0; i < k; ++i) {
    if (sf.invariants[i] == 1) continue;
    out.invariants.push_back(sf.invariants[i]);
    out.generators.push_back(sup.parent().element(new_basis.row(i)));
  }
  return out;
}

// -------------------------------------------------------------- primary part

std::vector<Integer> prime_divisors(Integer n) {
  std::vector<Integer> out;
  n = abs(n);
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

PrimaryPart primary_part(const FinAbGroup& g, const Integer& p) {
  if (!is_prime(p)) throw InvalidInput(p.get_str() + " is not prime");
  const std::size_t k = g.rank();
  IntVector p_orders(k);
  IntMatrix incl(k, k);
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < k; ++i) {
    Integer ppart = 1;
    Integer rest = g.orders()[i];
    while (rest % p == 0) {
      rest /= p;
      ppart *= p;
    }
    p_orders[i] = ppart;
    incl(i, i) = rest;  // generator of the p-part of the i-th cyclic factor
    gens.push_back(g.generator(i).scaled(rest));
  }
  FinAbGroup part = FinAbGroup::canonicalize(p_orders);
  return {part, Subgroup::generate(g, gens), Homomorphism(part, g, std::move(incl))};
}

}  // namespace realform
