#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "realform/abelian.hpp"

namespace realform::testing {

inline IntVector ints(std::initializer_list<long> v) {
  IntVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline FinAbGroup group(std::initializer_list<long> orders) { return FinAbGroup::canonicalize(ints(orders)); }

inline GroupElement elem(const FinAbGroup& g, std::initializer_list<long> c) { return g.element(ints(c)); }

inline Homomorphism hom(const FinAbGroup& dom, const FinAbGroup& cod, std::vector<std::vector<long>> rows) {
  std::size_t cols = cod.rank();
  for (const auto& r : rows) cols = std::max(cols, r.size());
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return Homomorphism(dom, cod, std::move(m));
}

/// Every element of g, in lexicographic coordinate order.
inline std::vector<GroupElement> all_elements(const FinAbGroup& g) {
  std::vector<GroupElement> out;
  IntVector c(g.rank(), Integer(0));
  while (true) {
    out.push_back(g.element(c));
    std::size_t i = g.rank();
    while (i > 0) {
      --i;
      c[i] += 1;
      if (c[i] < g.orders()[i]) break;
      c[i] = 0;
      if (i == 0) return out;
    }
    if (g.rank() == 0) return out;
  }
}

/// Number of elements of each order, from plain machine arithmetic.
inline std::map<std::int64_t, std::int64_t> order_census(const std::vector<std::int64_t>& orders) {
  std::int64_t total = 1;
  for (auto d : orders) total *= d;
  std::map<std::int64_t, std::int64_t> census;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t rest = idx, ord = 1;
    for (auto d : orders) {
      const std::int64_t c = rest % d;
      rest /= d;
      ord = std::lcm(ord, d / std::gcd(c, d));
    }
    ++census[ord];
  }
  return census;
}

inline std::vector<std::int64_t> to_machine(const IntVector& v) {
  std::vector<std::int64_t> out;
  for (const Integer& x : v) out.push_back(x.get_si());
  return out;
}

/// Random presentation with product at most max_order.
inline IntVector random_presentation(std::mt19937& rng, long max_order) {
  IntVector orders;
  long product = 1;
  std::uniform_int_distribution<int> factors(1, 3);
  const int k = factors(rng);
  for (int i = 0; i < k; ++i) {
    const long cap = max_order / product;
    if (cap < 1) break;
    std::uniform_int_distribution<long> d(1, std::min<long>(cap, 12));
    const long o = d(rng);
    orders.emplace_back(o);
    product *= o;
  }
  if (orders.empty()) orders.emplace_back(1);
  return orders;
}

inline GroupElement random_element(std::mt19937& rng, const FinAbGroup& g) {
  IntVector c;
  for (const Integer& d : g.orders()) {
    std::uniform_int_distribution<long> u(0, d.get_si() - 1);
    c.emplace_back(u(rng));
  }
  return g.element(c);
}

/// Partitions of e into nonincreasing parts.
inline void partitions(int e, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(e, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(e - p, p, cur, out);
    cur.pop_back();
  }
}

/// One elementary-divisor presentation per isomorphism type of order n.
inline std::vector<IntVector> primary_presentations(long n) {
  std::vector<std::pair<long, int>> pf;
  long rest = n;
  for (long p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) pf.push_back({p, e});
  }
  if (rest > 1) pf.push_back({rest, 1});
  std::vector<IntVector> out{IntVector{}};
  for (auto [p, e] : pf) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(e, e, cur, parts);
    std::vector<IntVector> next;
    for (const IntVector& base : out) {
      for (const auto& part : parts) {
        IntVector v = base;
        for (int a : part) {
          long q = 1;
          for (int i = 0; i < a; ++i) q *= p;
          v.emplace_back(q);
        }
        next.push_back(v);
      }
    }
    out = std::move(next);
  }
  for (IntVector& v : out) {
    if (v.empty()) v.emplace_back(1);
  }
  return out;
}

}  // namespace realform::testing
