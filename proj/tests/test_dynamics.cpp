#include <gtest/gtest.h>

#include <deque>

#include "oracle.hpp"
#include "schneider/dynamics.hpp"
#include "schneider/error.hpp"
#include "schneider/sampling.hpp"

using namespace schneider;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

TauStep step_of(const PrimeContext& ctx, const Rational& x) {
  return std::get<TauStep>(tau_step(ctx, x));
}

// A source that replays a list, then ends the way the caller asks.
PairSource replay(std::vector<CFPair> pairs, SourceEnd end) {
  auto queue = std::make_shared<std::deque<CFPair>>(pairs.begin(), pairs.end());
  return [queue, end]() -> std::variant<CFPair, SourceEnd> {
    if (queue->empty()) return end;
    CFPair pair = queue->front();
    queue->pop_front();
    return pair;
  };
}

// A source that emits `prefix`, then repeats `cycle` forever.
PairSource eventually_constant(std::vector<CFPair> prefix, CFPair cycle) {
  auto index = std::make_shared<std::size_t>(0);
  return [prefix, cycle, index]() -> std::variant<CFPair, SourceEnd> {
    const std::size_t i = (*index)++;
    return i < prefix.size() ? prefix[i] : cycle;
  };
}

}  // namespace

TEST(TauStep, Examples) {
  const TauStep a = step_of(PrimeContext(2), q(4, 3));
  EXPECT_EQ(a.pair, (CFPair{2, 1}));
  EXPECT_EQ(a.next, q(2));

  const TauStep b = step_of(PrimeContext(2), q(-2));
  EXPECT_EQ(b.pair, (CFPair{1, 1}));
  EXPECT_EQ(b.next, q(-2));

  const TauStep c = step_of(PrimeContext(3), q(1, 2));
  EXPECT_EQ(c.pair, (CFPair{0, 2}));
  EXPECT_EQ(c.next, q(0));

  EXPECT_TRUE(std::holds_alternative<std::monostate>(tau_step(PrimeContext(5), q(0))));
}

TEST(TauStep, MinusPIsFixedForEveryPrime) {
  for (std::uint64_t p : kSamplePrimes) {
    const PrimeContext ctx(p);
    const TauStep s = step_of(ctx, ctx.minus_p());
    EXPECT_EQ(s.next, ctx.minus_p());
    EXPECT_EQ(s.pair, (CFPair{1, p - 1}));
  }
}

TEST(SigmaStep, Examples) {
  EXPECT_EQ(sigma_step(PrimeContext(2), q(12)), q(2));
  EXPECT_EQ(sigma_step(PrimeContext(2), q(2)), q(0));
  EXPECT_EQ(sigma_step(PrimeContext(5), q(0)), q(0));
}

TEST(CfExpand, Examples) {
  const CFExpansion a = cf_expand(PrimeContext(2), q(4, 3), 100);
  EXPECT_EQ(a.pairs, (std::vector<CFPair>{{2, 1}, {1, 1}}));
  EXPECT_EQ(a.terminal, TerminalKind::Zero);

  const CFExpansion b = cf_expand(PrimeContext(2), q(-1), 100);
  EXPECT_EQ(b.pairs, (std::vector<CFPair>{{0, 1}}));
  EXPECT_EQ(b.terminal, TerminalKind::MinusP);
  EXPECT_EQ(b.remainder, q(-2));

  const CFExpansion c = cf_expand(PrimeContext(3), q(0), 5);
  EXPECT_TRUE(c.pairs.empty());
  EXPECT_EQ(c.terminal, TerminalKind::Zero);
}

TEST(CfExpand, CapTruncatesWithExactResidual) {
  const PrimeContext ctx(2);
  const CFExpansion full = cf_expand(ctx, q(4, 3), 100);
  const CFExpansion cut = cf_expand(ctx, q(4, 3), 1);
  EXPECT_EQ(cut.terminal, TerminalKind::Truncated);
  EXPECT_EQ(cut.pairs, (std::vector<CFPair>{{2, 1}}));
  EXPECT_EQ(cut.remainder, q(2));
  EXPECT_EQ(cf_eval_exact(ctx, cut.pairs, cut.remainder), q(4, 3));
  EXPECT_TRUE(full.terminated());
  EXPECT_THROW(cf_expand(ctx, q(1), 0), Error);
}

TEST(CfEvalExact, Examples) {
  EXPECT_EQ(cf_eval_exact(PrimeContext(2), {{2, 1}, {1, 1}}, q(0)), q(4, 3));
  EXPECT_EQ(cf_eval_exact(PrimeContext(2), {{0, 1}}, q(-2)), q(-1));
  EXPECT_EQ(cf_eval_exact(PrimeContext(2), {}, q(0)), q(0));
}

TEST(CfEvalExact, RejectsBrokenInvariants) {
  const PrimeContext ctx(3);
  EXPECT_THROW(cf_eval_exact(ctx, {{0, 0}}, q(0)), Error);     // a = 0
  EXPECT_THROW(cf_eval_exact(ctx, {{0, 3}}, q(0)), Error);     // a >= p
  EXPECT_THROW(cf_eval_exact(ctx, {{0, 1}, {0, 1}}, q(0)), Error);  // later e < 1
  EXPECT_THROW(cf_eval_exact(ctx, {{0, 1}}, q(1)), Error);     // tail not in pZ_p
  EXPECT_NO_THROW(cf_eval_exact(ctx, {{-4, 1}, {2, 2}}, q(3)));
}

TEST(Convergent, Examples) {
  const PrimeContext ctx(2);
  EXPECT_EQ(convergent(ctx, {{2, 1}}), q(4));
  EXPECT_EQ(convergent(ctx, {{2, 1}, {1, 1}}), q(4, 3));
  EXPECT_EQ(convergent(ctx, {{0, 1}}), q(1));
  try {
    convergent(ctx, {});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::EmptyInput);
  }
}

TEST(CfEvalLimit, Examples) {
  const PrimeContext two(2);
  // [(0,1)] then the expansion of -2 repeated: the value is -1.
  const PAdicApprox minus_one = cf_eval_limit(two, eventually_constant({{0, 1}}, {1, 1}), 4);
  EXPECT_EQ(minus_one, PAdicApprox::from_digits(two, 0, {1, 1, 1, 1}));

  // L = 2/(1+L) has roots 1 and -2; the limit is the root in 2Z_2.
  const PAdicApprox root = cf_eval_limit(two, eventually_constant({}, {1, 1}), 3);
  EXPECT_EQ(root, PAdicApprox::from_digits(two, 1, {1, 1}));
  // Convergents P_n stabilise to the same residue: checked independently.
  Rational p_n = q(2);
  for (int i = 0; i < 10; ++i) p_n = q(2) / (q(1) + p_n);
  EXPECT_TRUE(oracle::valuation_at_least(2, (p_n - q(-2)).gmp(), 3));

  const PrimeContext three(3);
  EXPECT_EQ(cf_eval_limit(three, replay({{0, 2}}, SourceEnd::Terminated), 6),
            approx_from_rational(three, q(1, 2), 6));
  EXPECT_TRUE(cf_eval_limit(three, replay({}, SourceEnd::Terminated), 6).is_exact_zero());
}

TEST(CfEvalLimit, SourceExhausted) {
  const PrimeContext ctx(2);
  try {
    cf_eval_limit(ctx, replay({{0, 1}, {1, 1}}, SourceEnd::Exhausted), 10);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::SourceExhausted);
  }
  EXPECT_THROW(cf_eval_limit(ctx, replay({{0, 1}, {0, 1}}, SourceEnd::Exhausted), 10), Error);
}

TEST(CfEvalLimit, MatchesExpansionOfRationals) {
  for (std::uint64_t p : kSamplePrimes) {
    const PrimeContext ctx(p);
    RationalSampler sampler(p * 3 + 1);
    for (int i = 0; i < 100; ++i) {
      const Rational x = sampler.nonzero_rational();
      const CFExpansion expansion = cf_expand(ctx, x);
      ASSERT_TRUE(expansion.terminated());
      // Extend the finite data by the infinite expansion of the terminal.
      const PairSource source = expansion.terminal == TerminalKind::MinusP
                                    ? eventually_constant(expansion.pairs, CFPair{1, p - 1})
                                    : replay(expansion.pairs, SourceEnd::Terminated);
      const std::int64_t precision = valuation(ctx, x).value() + 16;
      ASSERT_EQ(cf_eval_limit(ctx, source, precision), approx_from_rational(ctx, x, precision))
          << x.to_string();
    }
  }
}

TEST(Orbits, Examples) {
  const OrbitRecord a = tau_orbit(PrimeContext(2), q(4, 3), 5);
  EXPECT_EQ(a.iterates, (std::vector<Rational>{q(4, 3), q(2), q(0)}));
  EXPECT_TRUE(a.terminated);
  EXPECT_EQ(a.pairs, (std::vector<CFPair>{{2, 1}, {1, 1}}));

  const OrbitRecord b = sigma_orbit(PrimeContext(2), q(12), 3);
  EXPECT_EQ(b.iterates, (std::vector<Rational>{q(12), q(2), q(0)}));
  EXPECT_TRUE(b.terminated);

  const OrbitRecord c = tau_orbit(PrimeContext(3), q(0), 2);
  EXPECT_EQ(c.iterates, (std::vector<Rational>{q(0)}));
  EXPECT_TRUE(c.terminated);

  const OrbitRecord d = tau_orbit(PrimeContext(2), q(4, 3), 1);
  EXPECT_EQ(d.iterates.size(), 2U);
  EXPECT_FALSE(d.terminated);
}

class DynamicsProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(DynamicsProperties, OrbitLawsAgainstOracle) {
  const PrimeContext ctx(GetParam());
  RationalSampler sampler(GetParam() * 101 + 3);
  for (int i = 0; i < 300; ++i) {
    const Rational x = sampler.nonzero_rational();
    ASSERT_EQ(tau(ctx, x).gmp(), oracle::tau(ctx.p(), x.gmp()));
    ASSERT_EQ(sigma_step(ctx, x).gmp(), oracle::sigma(ctx.p(), x.gmp()));

    const OrbitRecord orbit = tau_orbit(ctx, x, kDefaultIterationCap);
    ASSERT_TRUE(orbit.terminated);
    const std::int64_t vx = valuation(ctx, x).value();
    std::vector<CFPair> prefix;
    std::int64_t exponent_sum = 0;
    for (std::size_t n = 0; n < orbit.pairs.size(); ++n) {
      prefix.push_back(orbit.pairs[n]);
      exponent_sum += orbit.pairs[n].e;
      const Rational& residual = orbit.iterates[n + 1];
      ASSERT_TRUE(residual.is_zero() || valuation(ctx, residual).value() >= 1);
      ASSERT_EQ(cf_eval_exact(ctx, prefix, residual), x);
      const Rational p_n = convergent(ctx, prefix);
      if (residual.is_zero()) {
        ASSERT_EQ(p_n, x);
      } else {
        const auto err = oracle::valuation(ctx.p(), (x - p_n).gmp());
        ASSERT_EQ(*err, exponent_sum + *oracle::valuation(ctx.p(), residual.gmp()));
        ASSERT_GT(*err, static_cast<std::int64_t>(n) + vx);
      }
    }
  }
}

TEST_P(DynamicsProperties, ShiftDigitsReconstructTheNumber) {
  const PrimeContext ctx(GetParam());
  RationalSampler sampler(GetParam() * 13 + 11);
  for (int i = 0; i < 200; ++i) {
    const Rational x = sampler.nonzero_rational();
    const OrbitRecord orbit = sigma_orbit(ctx, x, 25);
    Rational partial = 0;
    std::int64_t exponent_sum = 0;
    for (std::size_t n = 0; n < orbit.pairs.size(); ++n) {
      exponent_sum += orbit.pairs[n].e;
      partial += digit_value(orbit.pairs[n].a) * p_power(ctx, exponent_sum);
      ASSERT_TRUE(valuation(ctx, x - partial).at_least(exponent_sum + 1)) << x.to_string();
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SamplePrimes, DynamicsProperties,
                         ::testing::ValuesIn(kSamplePrimes.begin(), kSamplePrimes.end()));
