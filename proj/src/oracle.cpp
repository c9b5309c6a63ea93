#include "realform/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "realform/errors.hpp"

namespace realform {

void EnumerationBudget::validate() const {
  if (max_order < 1) throw InvalidInput("enumeration budget must be at least 1");
}

EnumerationBudget EnumerationBudget::from_environment() {
  EnumerationBudget b;
  if (const char* env = std::getenv("REALFORM_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw InvalidInput(std::string("REALFORM_BUDGET is not an integer: ") + env);
    b.max_order = v;
  }
  b.validate();
  return b;
}

namespace oracle {
namespace {

using Index = std::uint32_t;

// Every element of a small group, indexed in mixed radix with the first
// coordinate most significant, so index order is lexicographic order.
class ElementTable {
 public:
  ElementTable(const FinAbGroup& g, const EnumerationBudget& budget) : group_(g) {
    budget.validate();
    if (g.order() > Integer(std::to_string(budget.max_order))) {
      throw BudgetExceeded("group of order " + g.order().get_str() + " exceeds enumeration budget " +
                           std::to_string(budget.max_order));
    }
    for (const Integer& d : g.orders()) orders_.push_back(to_int64(d));
    size_ = static_cast<std::size_t>(to_int64(g.order()));
    strides_.assign(orders_.size(), 1);
    for (std::size_t i = orders_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * orders_[i];
    coords_.resize(size_);
    for (std::size_t idx = 0; idx < size_; ++idx) {
      std::vector<std::int64_t> c(orders_.size());
      std::size_t rest = idx;
      for (std::size_t i = 0; i < orders_.size(); ++i) {
        c[i] = static_cast<std::int64_t>(rest / static_cast<std::size_t>(strides_[i]));
        rest %= static_cast<std::size_t>(strides_[i]);
      }
      coords_[idx] = std::move(c);
    }
  }

  std::size_t size() const { return size_; }
  const std::vector<std::int64_t>& coords(Index i) const { return coords_[i]; }

  Index index_of(const std::vector<std::int64_t>& c) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      idx += (((c[i] % orders_[i]) + orders_[i]) % orders_[i]) * strides_[i];
    }
    return static_cast<Index>(idx);
  }

  Index add(Index a, Index b) const {
    std::vector<std::int64_t> c(orders_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[a][i] + coords_[b][i];
    return index_of(c);
  }

  Index sub(Index a, Index b) const {
    std::vector<std::int64_t> c(orders_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[a][i] - coords_[b][i];
    return index_of(c);
  }

  Index generator(std::size_t i) const {
    std::vector<std::int64_t> c(orders_.size(), 0);
    c[i] = 1;
    return index_of(c);
  }

  std::int64_t element_order(Index a) const {
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      ord = std::lcm(ord, orders_[i] / std::gcd(orders_[i], coords_[a][i]));
    }
    return ord;
  }

  /// Table of x -> x * images for a map given by generator images.
  std::vector<Index> map_table(const std::vector<Index>& generator_images) const {
    std::vector<Index> out(size_);
    for (std::size_t idx = 0; idx < size_; ++idx) {
      std::vector<std::int64_t> c(orders_.size(), 0);
      for (std::size_t i = 0; i < orders_.size(); ++i) {
        const auto& img = coords_[generator_images[i]];
        for (std::size_t j = 0; j < orders_.size(); ++j) c[j] += coords_[idx][i] * img[j];
      }
      out[idx] = index_of(c);
    }
    return out;
  }

  std::vector<Index> action_table(const Homomorphism& f) const {
    std::vector<Index> images;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      std::vector<std::int64_t> c(orders_.size());
      for (std::size_t j = 0; j < orders_.size(); ++j) c[j] = to_int64(f.matrix()(i, j));
      images.push_back(index_of(c));
    }
    return map_table(images);
  }

  GroupElement element(Index a) const {
    IntVector c;
    for (std::int64_t v : coords_[a]) c.emplace_back(static_cast<long>(v));
    return group_.element(std::move(c));
  }

  Homomorphism homomorphism(const std::vector<Index>& generator_images) const {
    IntMatrix m(orders_.size(), orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i)
      for (std::size_t j = 0; j < orders_.size(); ++j) m(i, j) = static_cast<long>(coords_[generator_images[i]][j]);
    return Homomorphism(group_, group_, std::move(m));
  }

  std::size_t rank() const { return orders_.size(); }
  std::int64_t factor_order(std::size_t i) const { return orders_[i]; }

 private:
  FinAbGroup group_;
  std::vector<std::int64_t> orders_;
  std::vector<std::int64_t> strides_;
  std::size_t size_ = 0;
  std::vector<std::vector<std::int64_t>> coords_;
};

Enumerated quotient_census(const ElementTable& t, const std::vector<bool>& top, const std::vector<bool>& bottom) {
  std::size_t top_count = 0, bottom_count = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    top_count += top[i];
    bottom_count += bottom[i];
  }
  if (bottom_count == 0 || top_count % bottom_count != 0) {
    std::cerr << "oracle: coset census " << top_count << '/' << bottom_count << " is not exact\n";
    std::abort();
  }
  std::vector<Index> bottom_elems;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (bottom[i]) bottom_elems.push_back(static_cast<Index>(i));
  Enumerated out;
  out.count = static_cast<unsigned long>(top_count / bottom_count);
  std::vector<bool> covered(t.size(), false);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!top[i] || covered[i]) continue;
    out.representatives.push_back(t.element(static_cast<Index>(i)));
    for (Index b : bottom_elems) covered[t.add(static_cast<Index>(i), b)] = true;
  }
  return out;
}

}  // namespace

Enumerated h1_enumerate(const GammaModule& m, const EnumerationBudget& budget) {
  const ElementTable t(m.group(), budget);
  const std::vector<Index> act = t.action_table(m.action());
  std::vector<bool> z1(t.size(), false), b1(t.size(), false);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto a = static_cast<Index>(i);
    z1[i] = t.add(a, act[a]) == 0;
    b1[t.sub(a, act[a])] = true;
  }
  return quotient_census(t, z1, b1);
}

Enumerated h2_enumerate(const GammaModule& m, const EnumerationBudget& budget) {
  const ElementTable t(m.group(), budget);
  const std::vector<Index> act = t.action_table(m.action());
  std::vector<bool> fixed(t.size(), false), norm(t.size(), false);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto a = static_cast<Index>(i);
    fixed[i] = act[a] == a;
    norm[t.add(a, act[a])] = true;
  }
  return quotient_census(t, fixed, norm);
}

std::vector<Subgroup> enumerate_subgroups(const FinAbGroup& g, const EnumerationBudget& budget) {
  const ElementTable t(g, budget);
  using ElementSet = std::vector<Index>;  // sorted
  std::map<ElementSet, std::vector<Index>> found;  // subgroup -> generators

  auto cyclic = [&](Index x) {
    ElementSet s;
    Index y = 0;
    do {
      s.push_back(y);
      y = t.add(y, x);
    } while (y != 0);
    std::sort(s.begin(), s.end());
    return s;
  };
  auto join = [&](const ElementSet& a, const ElementSet& b) {
    std::vector<bool> mark(t.size(), false);
    for (Index x : a)
      for (Index y : b) mark[t.add(x, y)] = true;
    ElementSet s;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (mark[i]) s.push_back(static_cast<Index>(i));
    return s;
  };

  std::vector<std::pair<ElementSet, Index>> cyclics;
  for (std::size_t i = 0; i < t.size(); ++i) {
    ElementSet c = cyclic(static_cast<Index>(i));
    if (found.emplace(c, std::vector<Index>{static_cast<Index>(i)}).second) cyclics.emplace_back(c, i);
  }
  std::vector<ElementSet> work;
  for (const auto& [s, gens] : found) work.push_back(s);
  while (!work.empty()) {
    const ElementSet s = std::move(work.back());
    work.pop_back();
    const std::vector<Index> gens = found.at(s);
    for (const auto& [c, x] : cyclics) {
      ElementSet j = join(s, c);
      if (found.count(j)) continue;
      std::vector<Index> jg = gens;
      jg.push_back(x);
      found.emplace(j, std::move(jg));
      work.push_back(std::move(j));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& [s, gens] : found) {
    std::vector<GroupElement> elems;
    for (Index x : gens) elems.push_back(t.element(x));
    out.push_back(Subgroup::generate(g, elems));
  }
  auto basis_entries = [](const Subgroup& s) {
    IntVector v;
    for (std::size_t r = 0; r < s.basis().rows(); ++r)
      for (std::size_t c = 0; c < s.basis().cols(); ++c) v.push_back(s.basis()(r, c));
    return v;
  };
  std::sort(out.begin(), out.end(), [&](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return basis_entries(a) < basis_entries(b);
  });
  return out;
}

bool verify_formula(const GammaModule& m, const EnumerationBudget& budget) {
  const Integer enumerated = h1_enumerate(m, budget).count;
  return enumerated == h1_count_formula(m) && enumerated == h1(m).order();
}

namespace {

// Depth-first search over generator images. At depth i the images chosen so
// far span a subgroup of order orders[0]*...*orders[i-1], which is what keeps
// the partial map injective.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const ElementTable& t, std::mt19937_64* rng) : t_(t), rng_(rng) {
    for (std::size_t i = 0; i < t_.rank(); ++i) {
      std::vector<Index> cands;
      for (std::size_t x = 0; x < t_.size(); ++x) {
        if (t_.element_order(static_cast<Index>(x)) == t_.factor_order(i)) cands.push_back(static_cast<Index>(x));
      }
      candidates_.push_back(std::move(cands));
    }
  }

  /// Calls visit(images) for each automorphism; stop when visit returns false.
  template <typename Visit>
  void run(Visit&& visit) {
    std::vector<bool> span(t_.size(), false);
    span[0] = true;
    std::vector<Index> images;
    descend(0, span, images, visit);
  }

 private:
  template <typename Visit>
  bool descend(std::size_t depth, const std::vector<bool>& span, std::vector<Index>& images, Visit& visit) {
    if (depth == t_.rank()) return visit(images);
    std::vector<Index> order = candidates_[depth];
    if (rng_ != nullptr) std::shuffle(order.begin(), order.end(), *rng_);
    for (Index x : order) {
      // <x> must meet the current span trivially.
      bool independent = true;
      Index y = x;
      for (std::int64_t k = 1; k < t_.factor_order(depth); ++k) {
        if (span[y]) {
          independent = false;
          break;
        }
        y = t_.add(y, x);
      }
      if (!independent) continue;
      std::vector<bool> next(t_.size(), false);
      for (std::size_t s = 0; s < t_.size(); ++s) {
        if (!span[s]) continue;
        Index z = static_cast<Index>(s);
        for (std::int64_t k = 0; k < t_.factor_order(depth); ++k) {
          next[z] = true;
          z = t_.add(z, x);
        }
      }
      images.push_back(x);
      const bool keep_going = descend(depth + 1, next, images, visit);
      images.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const ElementTable& t_;
  std::mt19937_64* rng_;
  std::vector<std::vector<Index>> candidates_;
};

bool is_involution_table(const std::vector<Index>& table) {
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[table[i]] != i) return false;
  return true;
}

}  // namespace

std::optional<std::vector<Homomorphism>> enumerate_automorphisms(const FinAbGroup& g, std::size_t limit,
                                                                 const EnumerationBudget& budget) {
  const ElementTable t(g, budget);
  std::vector<std::vector<Index>> all;
  bool overflow = false;
  AutomorphismSearch search(t, nullptr);
  search.run([&](const std::vector<Index>& images) {
    if (all.size() == limit) {
      overflow = true;
      return false;
    }
    all.push_back(images);
    return true;
  });
  if (overflow) return std::nullopt;
  std::vector<Homomorphism> out;
  out.reserve(all.size());
  for (const auto& images : all) out.push_back(t.homomorphism(images));
  return out;
}

std::optional<std::vector<Homomorphism>> involutive_automorphisms(const FinAbGroup& g,
                                                                  std::size_t automorphism_limit,
                                                                  const EnumerationBudget& budget) {
  const ElementTable t(g, budget);
  std::vector<std::vector<Index>> involutions;
  std::size_t seen = 0;
  bool overflow = false;
  AutomorphismSearch search(t, nullptr);
  search.run([&](const std::vector<Index>& images) {
    if (seen == automorphism_limit) {
      overflow = true;
      return false;
    }
    ++seen;
    if (is_involution_table(t.map_table(images))) involutions.push_back(images);
    return true;
  });
  if (overflow) return std::nullopt;
  std::vector<Homomorphism> out;
  for (const auto& images : involutions) out.push_back(t.homomorphism(images));
  return out;
}

std::vector<Homomorphism> sample_involutions(const FinAbGroup& g, std::size_t count, std::uint64_t seed,
                                             const EnumerationBudget& budget) {
  const ElementTable t(g, budget);
  std::mt19937_64 rng(seed);
  const std::size_t k = t.rank();

  std::set<std::vector<Index>> seen;
  std::vector<Homomorphism> out;
  const std::size_t max_attempts = count * 50 + 50;
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < count; ++attempt) {
    // Base involution: signs on the cyclic factors, plus swaps of
    // equal-order factors carrying equal signs.
    std::vector<std::size_t> partner(k);
    std::iota(partner.begin(), partner.end(), std::size_t{0});
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t a = 0; a < k; ++a) {
      const std::size_t i = perm[a];
      if (partner[i] != i || (rng() & 1U) == 0) continue;
      for (std::size_t b = a + 1; b < k; ++b) {
        const std::size_t j = perm[b];
        if (partner[j] == j && t.factor_order(i) == t.factor_order(j)) {
          partner[i] = j;
          partner[j] = i;
          break;
        }
      }
    }
    std::vector<std::int64_t> sign(k);
    for (std::size_t i = 0; i < k; ++i) sign[i] = (rng() & 1U) ? 1 : -1;
    for (std::size_t i = 0; i < k; ++i) sign[partner[i]] = sign[std::min(i, partner[i])];
    std::vector<Index> base_images(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::int64_t> c(k, 0);
      c[partner[i]] = sign[i];
      base_images[i] = t.index_of(c);
    }
    const std::vector<Index> base = t.map_table(base_images);

    // Random automorphism from a shuffled search.
    std::vector<Index> auto_images;
    AutomorphismSearch search(t, &rng);
    search.run([&](const std::vector<Index>& images) {
      auto_images = images;
      return false;
    });
    const std::vector<Index> fwd = t.map_table(auto_images);
    std::vector<Index> inv(t.size());
    for (std::size_t x = 0; x < t.size(); ++x) inv[fwd[x]] = static_cast<Index>(x);

    std::vector<Index> conj_images(k);
    for (std::size_t i = 0; i < k; ++i) conj_images[i] = fwd[base[inv[t.generator(i)]]];
    const std::vector<Index> table = t.map_table(conj_images);
    if (!is_involution_table(table)) {
      std::cerr << "oracle: conjugated involution failed to square to the identity\n";
      std::abort();
    }
    if (!seen.insert(conj_images).second) continue;
    out.push_back(t.homomorphism(conj_images));
  }
  return out;
}

}  // namespace oracle
}  // namespace realform
