#include "schneider/selftest.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <future>

#include "schneider/approx.hpp"
#include "schneider/conjugacy.hpp"
#include "schneider/digit_stream.hpp"
#include "schneider/error.hpp"
#include "schneider/sampling.hpp"

namespace schneider {
namespace {

constexpr std::size_t kMaxRecordedFailures = 5;

class Recorder {
 public:
  explicit Recorder(std::string name) { report_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    if (ok) {
      ++report_.passed;
      return;
    }
    ++report_.failed;
    if (report_.failures.size() < kMaxRecordedFailures) report_.failures.push_back(describe());
  }

  // Runs one sample; library errors count as failures rather than aborting.
  template <typename Body>
  void sample(const std::string& label, Body&& body) {
    try {
      body();
    } catch (const Error& err) {
      check(false, [&] { return label + ": " + std::string(to_string(err.kind())) + ": " + err.what(); });
    }
  }

  PropertyReport take() { return std::move(report_); }

 private:
  PropertyReport report_;
};

Rational f_value(const PrimeContext& ctx, const Rational& x, std::int64_t cap) {
  return f_rational(ctx, x, cap).image.value(ctx);
}

PropertyReport fixed_points(const PrimeContext& ctx, const SelftestOptions& opt) {
  Recorder r("fixed_points");
  for (const Rational& x : {Rational(0), ctx.minus_p()}) {
    r.sample(x.to_string(), [&] {
      r.check(f_value(ctx, x, opt.cap) == x, [&] { return "f(" + x.to_string() + ") != itself"; });
      r.check(tau(ctx, x) == x, [&] { return "tau(" + x.to_string() + ") != itself"; });
    });
  }
  return r.take();
}

PropertyReport conjugacy(const PrimeContext& ctx, const SelftestOptions& opt, std::uint64_t seed) {
  Recorder r("conjugacy");
  RationalSampler sampler(seed);
  for (std::int64_t i = 0; i < opt.samples; ++i) {
    const Rational x = sampler.rational();
    r.sample(x.to_string(), [&] {
      const Rational lhs = f_value(ctx, tau(ctx, x), opt.cap);
      const Rational rhs = sigma_step(ctx, f_value(ctx, x, opt.cap));
      r.check(lhs == rhs, [&] { return "f(tau(" + x.to_string() + ")) != sigma(f(x))"; });
    });
  }
  return r.take();
}

PropertyReport isometry(const PrimeContext& ctx, const SelftestOptions& opt, std::uint64_t seed) {
  Recorder r("isometry");
  RationalSampler sampler(seed);
  for (std::int64_t i = 0; i < opt.samples; ++i) {
    const Rational x = sampler.rational();
    const Rational y = sampler.rational();
    if (x == y) continue;
    r.sample(x.to_string() + ", " + y.to_string(), [&] {
      const Valuation image = valuation(ctx, f_value(ctx, x, opt.cap) - f_value(ctx, y, opt.cap));
      r.check(image == valuation(ctx, x - y),
              [&] { return "v(f(x)-f(y)) != v(x-y) for " + x.to_string() + ", " + y.to_string(); });
    });
  }
  return r.take();
}

PropertyReport round_trip(const PrimeContext& ctx, const SelftestOptions& opt, std::uint64_t seed) {
  Recorder r("round_trip");
  RationalSampler sampler(seed);
  for (std::int64_t i = 0; i < opt.samples; ++i) {
    const Rational x = sampler.rational();
    r.sample(x.to_string(), [&] {
      const FImage image = f_rational(ctx, x, opt.cap).image;
      r.check(f_inverse_dyadic(ctx, image) == x,
              [&] { return "f^-1(f(" + x.to_string() + ")) != x"; });
      r.check(digit_stream_to_rational(ctx, rational_to_digit_stream(ctx, x)) == x,
              [&] { return "digit stream of " + x.to_string() + " does not round-trip"; });
    });
    const FImage y = sampler.dyadic(ctx);
    r.sample(y.value(ctx).to_string(), [&] {
      r.check(f_rational(ctx, f_inverse_dyadic(ctx, y), opt.cap).image == y,
              [&] { return "f(f^-1(" + y.value(ctx).to_string() + ")) != y"; });
    });
  }
  return r.take();
}

PropertyReport one_step_identity(const PrimeContext& ctx, const SelftestOptions& opt,
                                 std::uint64_t seed) {
  Recorder r("one_step_identity");
  RationalSampler sampler(seed);
  const auto top_digit = static_cast<std::int64_t>(std::min<std::uint64_t>(ctx.p() - 1, INT64_MAX));
  for (std::int64_t i = 0; i < opt.samples; ++i) {
    const std::int64_t e = sampler.uniform(-5, 5);
    const auto a = static_cast<Digit>(sampler.uniform(1, top_digit));
    const Rational x = sampler.in_p_zp(ctx);
    const std::string label = "e=" + std::to_string(e) + " a=" + std::to_string(a) + " x=" + x.to_string();
    r.sample(label, [&] {
      r.check(check_one_step_identity(ctx, e, a, x, opt.cap), [&] { return label; });
    });
  }
  return r.take();
}

PropertyReport convergent_bound(const PrimeContext& ctx, const SelftestOptions& opt,
                                std::uint64_t seed) {
  Recorder r("convergent_bound");
  RationalSampler sampler(seed);
  for (std::int64_t i = 0; i < opt.samples; ++i) {
    const Rational x = sampler.nonzero_rational();
    r.sample(x.to_string(), [&] {
      const OrbitRecord orbit = tau_orbit(ctx, x, opt.cap);
      const std::int64_t vx = valuation(ctx, x).value();
      std::vector<CFPair> prefix;
      std::int64_t exponent_sum = 0;
      bool ok = true;
      for (std::size_t n = 0; n < orbit.pairs.size() && ok; ++n) {
        prefix.push_back(orbit.pairs[n]);
        exponent_sum += orbit.pairs[n].e;
        const Rational& residual = orbit.iterates[n + 1];
        const Rational p_n = convergent(ctx, prefix);
        ok = cf_eval_exact(ctx, prefix, residual) == x;
        if (residual.is_zero()) {
          ok = ok && p_n == x;
        } else {
          const Valuation err = valuation(ctx, x - p_n);
          ok = ok && err == Valuation::finite(exponent_sum + valuation(ctx, residual).value()) &&
               err.value() > static_cast<std::int64_t>(n) + vx;
        }
      }
      r.check(ok, [&] { return "convergent error law fails for " + x.to_string(); });
    });
  }
  return r.take();
}

PropertyReport shift_commutation(const PrimeContext& ctx, const SelftestOptions& opt,
                                 std::uint64_t seed) {
  Recorder r("shift_commutation");
  RationalSampler sampler(seed);
  for (std::int64_t i = 0; i < opt.samples; ++i) {
    const Rational x = sampler.rational();
    r.sample(x.to_string(), [&] {
      const DigitStream shifted = sigma_shift_stream(ctx, rational_to_digit_stream(ctx, x));
      r.check(digit_stream_to_rational(ctx, shifted) == sigma_step(ctx, x),
              [&] { return "stream shift disagrees with sigma at " + x.to_string(); });
    });
  }
  return r.take();
}

PropertyReport oracle_equivalence(const PrimeContext& ctx, const SelftestOptions& opt,
                                  std::uint64_t seed) {
  Recorder r("oracle_equivalence");
  RationalSampler sampler(seed);
  for (std::int64_t i = 0; i < opt.samples; ++i) {
    const Rational x = sampler.rational();
    r.sample(x.to_string(), [&] {
      const std::int64_t precision =
          x.is_zero() ? opt.precision : valuation(ctx, x).value() + opt.precision;
      const PAdicApprox route_a = f_approx(ctx, approx_from_rational(ctx, x, precision), opt.cap);
      const PAdicApprox route_b = approx_from_rational(ctx, f_value(ctx, x, opt.cap), precision);
      r.check(route_a == route_b, [&] { return "f_approx disagrees with exact f at " + x.to_string(); });
      r.check(f_inverse_approx(ctx, route_a) == approx_from_rational(ctx, x, precision),
              [&] { return "f_inverse_approx(f_approx(x)) != x mod p^N at " + x.to_string(); });
    });
  }
  return r.take();
}

}  // namespace

std::vector<PropertyReport> run_selftest(const PrimeContext& ctx, const SelftestOptions& options) {
  using Suite = std::function<PropertyReport()>;
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                   static_cast<std::uint32_t>(options.seed >> 32)};
  std::vector<std::uint64_t> seeds(8);
  seq.generate(seeds.begin(), seeds.end());
  const std::vector<Suite> suites{
      [&] { return fixed_points(ctx, options); },
      [&] { return conjugacy(ctx, options, seeds[0]); },
      [&] { return isometry(ctx, options, seeds[1]); },
      [&] { return round_trip(ctx, options, seeds[2]); },
      [&] { return one_step_identity(ctx, options, seeds[3]); },
      [&] { return convergent_bound(ctx, options, seeds[4]); },
      [&] { return shift_commutation(ctx, options, seeds[5]); },
      [&] { return oracle_equivalence(ctx, options, seeds[6]); },
  };
  std::vector<std::future<PropertyReport>> running;
  running.reserve(suites.size());
  for (const auto& suite : suites) running.push_back(std::async(std::launch::async, suite));
  std::vector<PropertyReport> reports;
  reports.reserve(running.size());
  for (auto& f : running) reports.push_back(f.get());
  return reports;
}

}  // namespace schneider
