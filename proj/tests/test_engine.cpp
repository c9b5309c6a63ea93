#include <gtest/gtest.h>

#include <numeric>

#include "realform/errors.hpp"
#include "realform/families.hpp"
#include "realform/oracle.hpp"
#include "test_support.hpp"

using namespace realform;
using namespace realform::testing;

namespace {

bool is_power_of_two(const Integer& v) { return v > 0 && (v & (v - 1)) == 0; }

EngineInput with_h_bar(EngineInput e, const Subgroup& h) {
  e.h_bar = h;
  return e;
}

/// Random trivial-delta generic inputs over small modules, with Q = Z.
std::vector<EngineInput> random_inputs(std::mt19937& rng, int count) {
  std::vector<EngineInput> out;
  while (static_cast<int>(out.size()) < count) {
    const FinAbGroup g = FinAbGroup::canonicalize(random_presentation(rng, 48));
    auto invs = oracle::involutive_automorphisms(g, 500, EnumerationBudget{});
    if (!invs) continue;
    const GammaModule m = GammaModule::create(g, (*invs)[rng() % invs->size()]);
    std::vector<GroupElement> gens;
    for (int i = 0; i < static_cast<int>(rng() % 3); ++i) gens.push_back(random_element(rng, g));
    const Subgroup fixed = fixed_subgroup(m);
    const auto fixed_gens = fixed.generators();
    GroupElement delta = g.zero();
    for (const GroupElement& f : fixed_gens) delta = delta + f.scaled(static_cast<long>(rng() % 3));
    out.push_back(build_generic({m, gens, m, Homomorphism::identity(g), delta, rng() % 5 != 0}));
  }
  return out;
}

}  // namespace

TEST(Stability, PairFamily) {
  const EngineInput diag = build_sl_pair({3, {{1, 1}}});
  EXPECT_TRUE(check_stability(diag));
  EXPECT_FALSE(check_stability(build_sl_pair({3, {{1, 0}}})));
  EXPECT_TRUE(check_stability(build_sl_pair({3, {{1, 2}}})));
}

TEST(Stability, CyclicAlwaysStable) {
  for (long n = 1; n <= 40; ++n) {
    const FinAbGroup g = group({n});
    const auto actions = oracle::involutive_automorphisms(g, 1000, EnumerationBudget{});
    for (const Homomorphism& a : *actions) {
      const GammaModule m = GammaModule::create(g, a);
      for (const Subgroup& h : oracle::enumerate_subgroups(g, EnumerationBudget{})) {
        EngineInput e = build_generic({m, h.generators(), m, Homomorphism::identity(g), g.zero(), true});
        ASSERT_TRUE(check_stability(e));
      }
    }
  }
}

TEST(QuotientModule, Examples) {
  const QuotientModule a = quotient_module(build_sl_symplectic({2, 2, 0}));
  EXPECT_EQ(a.module.group().canonical(), ints({2}));
  EXPECT_EQ(a.module, GammaModule::trivial(a.module.group()));

  // diagonal: (a,0) - gamma(a,0) = (a,a) lies in H, so gamma acts trivially on A
  const QuotientModule d = quotient_module(build_sl_pair({3, {{1, 1}}}));
  EXPECT_EQ(d.module.group().canonical(), ints({3}));
  EXPECT_EQ(d.module, GammaModule::trivial(d.module.group()));
  // antidiagonal: (a,0) + gamma(a,0) = (a,-a) lies in H, so gamma inverts A
  const QuotientModule ad = quotient_module(build_sl_pair({3, {{1, 2}}}));
  EXPECT_EQ(ad.module, GammaModule::inversion(ad.module.group()));

  EXPECT_TRUE(quotient_module(build_sl_symplectic({3, 1, 0})).module.group().is_trivial());
  EXPECT_THROW(quotient_module(build_sl_pair({3, {{1, 0}}})), PreconditionViolation);
  EXPECT_THROW(compute_delta_H(build_sl_pair({3, {{1, 0}}})), PreconditionViolation);
}

TEST(QuotientModule, ProjectionEquivariantAndInvolutive) {
  std::mt19937 rng(62);
  for (const EngineInput& e : random_inputs(rng, 150)) {
    if (!check_stability(e)) continue;
    const QuotientModule a = quotient_module(e);
    ASSERT_TRUE(is_equivariant(a.projection, e.q, a.module));
    ASSERT_EQ(a.projection.kernel(), e.h_bar);
  }
}

TEST(DeltaH, Examples) {
  EXPECT_FALSE(class_is_zero(compute_delta_H(build_sl_symplectic({2, 2, 1}))));
  EXPECT_TRUE(class_is_zero(compute_delta_H(build_sl_symplectic({2, 2, 2}))));
  EXPECT_TRUE(class_is_zero(compute_delta_H(build_sl_symplectic({2, 1, 1}))));
}

TEST(Decide, Examples) {
  const Decision a = decide_existence(build_sl_symplectic({2, 2, 1}));
  EXPECT_FALSE(a.exists);
  EXPECT_EQ(a.failed_condition, FailedCondition::DeltaNonzero);
  EXPECT_FALSE(a.num_classes.has_value());
  const Decision b = decide_existence(build_sl_symplectic({2, 2, 0}));
  EXPECT_TRUE(b.exists);
  EXPECT_EQ(b.failed_condition, FailedCondition::None);
  EXPECT_EQ(*b.num_classes, 2);
  const Decision c = decide_existence(build_sl_pair({3, {{1, 0}}}));
  EXPECT_FALSE(c.exists);
  EXPECT_EQ(c.failed_condition, FailedCondition::NotStable);
  EXPECT_FALSE(c.delta_zero.has_value());
  EXPECT_FALSE(c.quotient_module.has_value());
}

TEST(Decide, ConditionOrder) {
  EngineInput e = build_sl_pair({3, {{1, 0}}});
  e.compat = false;
  EXPECT_EQ(decide_existence(e).failed_condition, FailedCondition::NotCompatible);
  EngineInput f = build_sl_symplectic({2, 2, 1});
  f.compat = false;
  const Decision d = decide_existence(f);
  EXPECT_EQ(d.failed_condition, FailedCondition::NotCompatible);
  EXPECT_TRUE(d.stable);
  EXPECT_FALSE(*d.delta_zero);
}

TEST(Decide, FailedConditionNames) {
  for (auto c : {FailedCondition::None, FailedCondition::NotCompatible, FailedCondition::NotStable,
                 FailedCondition::DeltaNonzero}) {
    EXPECT_EQ(parse_failed_condition(to_string(c)), c);
  }
  EXPECT_EQ(to_string(FailedCondition::DeltaNonzero), "delta_nonzero");
  EXPECT_THROW(parse_failed_condition("bogus"), InvalidInput);
}

TEST(Count, Examples) {
  EXPECT_EQ(count_classes(build_sl_symplectic({2, 2, 0})), 2);
  EXPECT_EQ(count_classes(build_sl_symplectic({2, 1, 0})), 1);
  for (const Subgroup& h : oracle::enumerate_subgroups(group({3, 3}), EnumerationBudget{})) {
    const EngineInput e = with_h_bar(build_sl_pair({3, {}}), h);
    if (check_stability(e)) ASSERT_EQ(count_classes(e), 1);
  }
  EXPECT_THROW(count_classes(build_sl_symplectic({2, 2, 1})), PreconditionViolation);
  EXPECT_THROW(count_classes(build_sl_pair({3, {{1, 0}}})), PreconditionViolation);
}

TEST(Decide, Properties) {
  std::mt19937 rng(63);
  for (const EngineInput& e : random_inputs(rng, 300)) {
    const Decision d = decide_existence(e);
    ASSERT_EQ(d.exists, d.failed_condition == FailedCondition::None);
    ASSERT_EQ(d.exists, d.num_classes.has_value());
    ASSERT_EQ(d.stable, d.quotient_module.has_value());
    if (d.exists) {
      ASSERT_TRUE(is_power_of_two(*d.num_classes));
      ASSERT_EQ(*d.num_classes, h1(*d.quotient_module).order());
      const Integer& order = d.quotient_module->group().order();
      if (order % 2 == 1) ASSERT_EQ(*d.num_classes, 1);
      if (d.quotient_module->group().is_cyclic()) ASSERT_LE(*d.num_classes, 2);
    }
    if (class_is_zero(e.delta) && e.compat && d.stable) ASSERT_TRUE(d.exists);
    if (e.q.group().is_cyclic()) ASSERT_TRUE(d.stable);
    // H-bar trivial or everything: stability never fails
    for (const Subgroup& h : {Subgroup::trivial(e.q.group()), Subgroup::whole(e.q.group())}) {
      const Decision x = decide_existence(with_h_bar(e, h));
      ASSERT_TRUE(x.stable);
      ASSERT_EQ(x.exists, e.compat && *x.delta_zero);
    }
  }
}

TEST(Sweep, SmallRange) {
  const auto rec = sweep_sl(2, 2);
  ASSERT_EQ(rec.size(), 9u);
  for (std::size_t i = 0; i < rec.size(); ++i) {
    const SweepRecord& r = rec[i];
    EXPECT_EQ(r.t, std::gcd(r.r, r.n));
    EXPECT_EQ(r.exists, r.s % 2 == 0 || r.t % 2 == 1);
    if (r.exists) EXPECT_EQ(*r.num_classes, r.t % 2 ? 1 : 2);
    if (i) EXPECT_TRUE(std::tie(rec[i - 1].n, rec[i - 1].r, rec[i - 1].s) < std::tie(r.n, r.r, r.s));
  }
  EXPECT_EQ(sweep_sl(2, 3).size(), 9u + 4u * 4u);
  EXPECT_THROW(sweep_sl(1, 3), InvalidInput);
  EXPECT_THROW(sweep_sl(4, 3), InvalidInput);
}
