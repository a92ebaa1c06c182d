#include <gtest/gtest.h>

#include <functional>

#include "schneider/error.hpp"
#include "schneider/sampling.hpp"
#include "schneider/text_format.hpp"

using namespace schneider;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

void expect_parse_error(const std::function<void()>& body) {
  try {
    body();
    ADD_FAILURE() << "accepted malformed input";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::ParseError) << err.what();
  }
}

}  // namespace

TEST(TextFormat, Rationals) {
  EXPECT_EQ(parse_rational("-4/3"), q(-4, 3));
  EXPECT_EQ(parse_rational("12/-9"), q(-4, 3));
  EXPECT_EQ(parse_rational(" 7 "), q(7));
  EXPECT_EQ(parse_rational("123456789012345678901234567890").to_string(),
            "123456789012345678901234567890");
  expect_parse_error([] { parse_rational("1/0"); });
  expect_parse_error([] { parse_rational("1/"); });
  expect_parse_error([] { parse_rational("x"); });
  expect_parse_error([] { parse_rational(""); });
  expect_parse_error([] { parse_rational("1.5"); });
}

TEST(TextFormat, Approximations) {
  const PrimeContext ctx(2);
  EXPECT_EQ(parse_approx(ctx, "0:1,1,0,1"), approx_from_rational(ctx, q(1, 3), 4));
  EXPECT_TRUE(parse_approx(ctx, "zero").is_exact_zero());
  EXPECT_EQ(parse_approx(ctx, "5:"), PAdicApprox::zero_mod(5));
  EXPECT_EQ(format_approx(parse_approx(ctx, "-1:0,1,1")), "0:1,1");
  EXPECT_EQ(format_approx(PAdicApprox::zero_mod(3)), "3:");
  expect_parse_error([&] { parse_approx(ctx, "0:1,2"); });
  expect_parse_error([&] { parse_approx(ctx, "1,0"); });
  expect_parse_error([&] { parse_approx(ctx, "0:1,,1"); });
}

TEST(TextFormat, DigitStreams) {
  const PrimeContext ctx(2);
  EXPECT_EQ(format_digit_stream(rational_to_digit_stream(ctx, q(1, 3))), "0:1|1,0");
  EXPECT_EQ(parse_digit_stream(ctx, "0:1|1,0"), rational_to_digit_stream(ctx, q(1, 3)));
  EXPECT_EQ(parse_digit_stream(ctx, "0:|1,1"), rational_to_digit_stream(ctx, q(-1)));
  EXPECT_TRUE(parse_digit_stream(ctx, "zero").is_zero);
  EXPECT_EQ(format_digit_stream(DigitStream::zero()), "zero");
  expect_parse_error([&] { parse_digit_stream(ctx, "0:1|"); });
  expect_parse_error([&] { parse_digit_stream(ctx, "0:1"); });
}

TEST(TextFormat, DyadicImages) {
  const PrimeContext ctx(2);
  EXPECT_EQ(format_fimage(ctx, FImage::from_rational(ctx, q(12))), "3*2^2");
  EXPECT_EQ(format_fimage(ctx, FImage()), "0");
  EXPECT_EQ(format_fimage(ctx, FImage::from_rational(ctx, q(-1))), "-1*2^0");
  EXPECT_EQ(parse_fimage(ctx, "3*2^2").value(ctx), q(12));
  EXPECT_EQ(parse_fimage(ctx, "12*2^-3").value(ctx), q(3, 2));
  EXPECT_EQ(parse_fimage(ctx, "-5"), FImage::from_rational(ctx, q(-5)));
  expect_parse_error([&] { parse_fimage(ctx, "3*3^2"); });
  expect_parse_error([&] { parse_fimage(ctx, "3*2"); });
}

TEST(TextFormat, Pairs) {
  EXPECT_EQ(parse_pairs("(2,1)(1,1)"), (std::vector<CFPair>{{2, 1}, {1, 1}}));
  EXPECT_EQ(parse_pairs(" ( -3 , 4 ) (1,2) "), (std::vector<CFPair>{{-3, 4}, {1, 2}}));
  EXPECT_TRUE(parse_pairs("").empty());
  EXPECT_EQ(format_pairs({{2, 1}, {1, 1}}), "(2,1)(1,1)");
  expect_parse_error([] { parse_pairs("(1,2"); });
  expect_parse_error([] { parse_pairs("(1)"); });
  expect_parse_error([] { parse_pairs("1,2"); });
}

TEST(TextFormat, ExpansionDocument) {
  const PrimeContext ctx(2);
  const CFExpansion expansion = cf_expand(ctx, q(4, 3));
  const nlohmann::json doc = expansion_to_json(expansion);
  EXPECT_EQ(doc.dump(), R"({"pairs":[[2,1],[1,1]],"terminal":"zero"})");
  EXPECT_EQ(expansion_to_json(cf_expand(ctx, q(-1)))["terminal"], "minus_p");
  const CFExpansion cut = cf_expand(ctx, q(4, 3), 1);
  EXPECT_EQ(expansion_to_json(cut)["terminal"]["truncated"], "2");
  expect_parse_error([&] { expansion_from_json(ctx, nlohmann::json::parse(R"({"pairs":[[1]]})")); });
}

TEST(TextFormat, ClassificationDocument) {
  EXPECT_EQ(classification_to_json(RationalPreimage{q(4, 3)}).dump(), R"({"rational":"4/3"})");
  EXPECT_EQ(classification_to_json(IrrationalPreimage{}).dump(), R"({"irrational":true})");
  const auto back = classification_from_json(nlohmann::json::parse(R"({"rational":"-1/7"})"));
  EXPECT_EQ(std::get<RationalPreimage>(back).witness, q(-1, 7));
  expect_parse_error([] { classification_from_json(nlohmann::json::parse(R"({"other":1})")); });
}

// Serialized forms read back to the same values for every sampled input.
TEST(TextFormat, SerializationRoundTrips) {
  for (std::uint64_t p : kSamplePrimes) {
    const PrimeContext ctx(p);
    RationalSampler sampler(p + 400);
    for (int i = 0; i < 100; ++i) {
      const Rational x = sampler.rational();
      ASSERT_EQ(parse_rational(x.to_string()), x);
      const CFExpansion expansion = cf_expand(ctx, x, sampler.uniform(1, 40));
      ASSERT_EQ(expansion_from_json(ctx, nlohmann::json::parse(expansion_to_json(expansion).dump())),
                expansion);
      const DigitStream s = rational_to_digit_stream(ctx, x);
      ASSERT_EQ(parse_digit_stream(ctx, format_digit_stream(s)), s);
      const FImage y = sampler.dyadic(ctx);
      ASSERT_EQ(parse_fimage(ctx, format_fimage(ctx, y)), y);
      if (!x.is_zero()) {
        const auto a = approx_from_rational(ctx, x, valuation(ctx, x).value() + 10);
        ASSERT_EQ(parse_approx(ctx, format_approx(a)), a);
      }
    }
  }
}
