// Command-line front end: Schneider continued fractions, the shift map and
// the conjugacy f between them.
//
// Negative literals must follow `--` (or be quoted with a leading space),
// e.g. `schneider expand -p 2 -- -1`.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schneider/approx.hpp"
#include "schneider/conjugacy.hpp"
#include "schneider/digit_stream.hpp"
#include "schneider/dynamics.hpp"
#include "schneider/error.hpp"
#include "schneider/selftest.hpp"
#include "schneider/text_format.hpp"

namespace {

using nlohmann::json;
using namespace schneider;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotTerminated = 3;
constexpr int kExitSelftestFailed = 4;

struct CliConfig {
  std::uint64_t prime = 2;
  std::int64_t precision = 32;
  std::int64_t cap = kDefaultIterationCap;
  bool structured = false;
  std::uint64_t seed = 1;
  std::int64_t samples = 200;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::optional<ErrorKind> error;
  std::string message;
  json payload = json::object();
  std::vector<std::string> text;
};

bool is_approx_literal(const std::string& s) {
  return s.find(':') != std::string::npos || s == "zero";
}

CommandResult not_terminated(const OrbitNotTerminated& err) {
  CommandResult r;
  r.exit_code = kExitNotTerminated;
  r.error = ErrorKind::OrbitNotTerminated;
  r.message = err.what();
  r.payload["expansion"] = expansion_to_json(err.expansion());
  return r;
}

CommandResult cmd_expand(const CliConfig& cfg, const PrimeContext& ctx, const std::string& literal) {
  const CFExpansion expansion = cf_expand(ctx, parse_rational(literal), cfg.cap);
  CommandResult r;
  r.payload = expansion_to_json(expansion);
  r.payload["orbit_length"] = expansion.pairs.size();
  r.text.push_back("pairs: " + format_pairs(expansion.pairs));
  if (expansion.terminated()) {
    r.text.push_back("terminal: " + to_string(expansion.terminal));
  } else {
    r.text.push_back("terminal: truncated (residual " + expansion.remainder.to_string() + ")");
    r.exit_code = kExitNotTerminated;
    r.error = ErrorKind::OrbitNotTerminated;
    r.message = "orbit did not terminate within the cap; raise --cap";
  }
  r.text.push_back("orbit length: " + std::to_string(expansion.pairs.size()));
  return r;
}

CommandResult cmd_eval(const PrimeContext& ctx, const std::string& pairs, const std::string& tail) {
  const Rational value = cf_eval_exact(ctx, parse_pairs(pairs), parse_rational(tail));
  CommandResult r;
  r.payload["value"] = value.to_string();
  r.text.push_back(value.to_string());
  return r;
}

CommandResult cmd_conjugate(const CliConfig& cfg, const PrimeContext& ctx, const std::string& literal) {
  CommandResult r;
  if (is_approx_literal(literal)) {
    const PAdicApprox image = f_approx(ctx, parse_approx(ctx, literal), cfg.cap);
    r.payload["image"] = format_approx(image);
    r.text.push_back(format_approx(image));
    return r;
  }
  const FRationalResult result = f_rational(ctx, parse_rational(literal), cfg.cap);
  r.payload["image"] = format_fimage(ctx, result.image);
  r.payload["value"] = result.image.value(ctx).to_string();
  r.payload["expansion"] = expansion_to_json(result.expansion);
  r.text.push_back(format_fimage(ctx, result.image));
  return r;
}

CommandResult cmd_invert(const PrimeContext& ctx, const std::string& literal) {
  CommandResult r;
  if (is_approx_literal(literal)) {
    const PAdicApprox preimage = f_inverse_approx(ctx, parse_approx(ctx, literal));
    r.payload["preimage"] = format_approx(preimage);
    r.text.push_back(format_approx(preimage));
    return r;
  }
  FImage y;
  if (literal.find('*') != std::string::npos) {
    y = parse_fimage(ctx, literal);
  } else {
    const Rational value = parse_rational(literal);
    if (!has_p_power_denominator(ctx, value)) {
      throw Error(ErrorKind::NotDyadic, value.to_string() + " is not in Z[1/" +
                                            std::to_string(ctx.p()) +
                                            "], so its preimage is irrational; see `classify`");
    }
    y = FImage::from_rational(ctx, value);
  }
  const Rational x = f_inverse_dyadic(ctx, y);
  r.payload["preimage"] = x.to_string();
  r.text.push_back(x.to_string());
  return r;
}

CommandResult cmd_classify(const PrimeContext& ctx, const std::string& literal) {
  const PreimageClassification c = classify_preimage(ctx, parse_rational(literal));
  CommandResult r;
  r.payload["classification"] = classification_to_json(c);
  if (const auto* rational = std::get_if<RationalPreimage>(&c)) {
    r.text.push_back("rational preimage: " + rational->witness.to_string());
  } else {
    r.text.push_back("irrational preimage");
  }
  return r;
}

CommandResult cmd_orbit(const PrimeContext& ctx, const std::string& literal, std::int64_t steps,
                        const std::string& map) {
  const Rational x = parse_rational(literal);
  const OrbitRecord orbit = map == "sigma" ? sigma_orbit(ctx, x, steps) : tau_orbit(ctx, x, steps);
  CommandResult r;
  json iterates = json::array();
  for (std::size_t i = 0; i < orbit.iterates.size(); ++i) {
    const std::string value = orbit.iterates[i].to_string();
    iterates.push_back(value);
    const bool last = i + 1 == orbit.iterates.size();
    r.text.push_back(last && orbit.terminated ? value + " (fixed)" : value);
  }
  r.payload["map"] = map;
  r.payload["iterates"] = iterates;
  r.payload["fixed"] = orbit.terminated;
  return r;
}

CommandResult cmd_digits(const CliConfig& cfg, const PrimeContext& ctx, const std::string& literal) {
  const Rational x = parse_rational(literal);
  const DigitStream stream = rational_to_digit_stream(ctx, x);
  const std::int64_t precision = x.is_zero() ? cfg.precision : valuation(ctx, x).value() + cfg.precision;
  const PAdicApprox truncation = approx_from_rational(ctx, x, precision);
  CommandResult r;
  r.payload["stream"] = format_digit_stream(stream);
  r.payload["truncation"] = format_approx(truncation);
  r.text.push_back(format_digit_stream(stream));
  if (!x.is_zero()) {
    r.text.push_back(format_approx(truncation) + "  (mod p^" + std::to_string(precision) + ")");
  }
  return r;
}

CommandResult cmd_selftest(const CliConfig& cfg, const PrimeContext& ctx) {
  SelftestOptions options;
  options.seed = cfg.seed;
  options.samples = cfg.samples;
  options.precision = cfg.precision;
  options.cap = cfg.cap;
  CommandResult r;
  json suites = json::array();
  bool all_passed = true;
  for (const auto& report : run_selftest(ctx, options)) {
    all_passed = all_passed && report.ok();
    suites.push_back({{"name", report.name},
                      {"passed", report.passed},
                      {"failed", report.failed},
                      {"failures", report.failures}});
    r.text.push_back(report.name + ": " + std::to_string(report.passed) + " passed, " +
                     std::to_string(report.failed) + " failed");
    for (const auto& failure : report.failures) r.text.push_back("  " + failure);
  }
  r.payload["suites"] = suites;
  r.payload["all_passed"] = all_passed;
  if (!all_passed) {
    r.exit_code = kExitSelftestFailed;
    r.message = "property failures";
  }
  return r;
}

int emit(const CliConfig& cfg, const std::string& command, const CommandResult& r) {
  if (cfg.structured) {
    json doc = r.payload;
    doc["command"] = command;
    doc["prime"] = cfg.prime;
    if (r.exit_code == kExitOk) {
      doc["status"] = "ok";
    } else {
      doc["status"] = "error";
      doc["error"] = {{"kind", r.error ? std::string(to_string(*r.error)) : std::string("PropertyFailure")},
                      {"message", r.message}};
    }
    std::cout << doc.dump() << '\n';
  } else {
    for (const auto& line : r.text) std::cout << line << '\n';
  }
  if (r.exit_code != kExitOk) {
    std::cerr << "error: " << (r.error ? std::string(to_string(*r.error)) + ": " : "") << r.message
              << '\n';
  }
  return r.exit_code;
}

CommandResult error_result(ErrorKind kind, const std::string& message) {
  CommandResult r;
  r.exit_code = kExitError;
  r.error = kind;
  r.message = message;
  r.text.clear();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schneider p-adic continued fractions and their conjugacy to the shift map"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  std::string format = "text";
  app.add_option("-p,--prime", cfg.prime, "the prime p")->capture_default_str();
  app.add_option("-N,--precision", cfg.precision, "absolute p-adic precision (digits)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cap", cfg.cap, "iteration cap for orbits")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized self-tests")->capture_default_str();

  std::string x_literal, pairs_literal, tail_literal, map = "tau";
  std::int64_t steps = 10;

  auto* expand = app.add_subcommand("expand", "Schneider continued fraction of a rational");
  expand->add_option("x", x_literal, "rational num/den")->required();

  auto* eval = app.add_subcommand("eval", "evaluate a finite continued fraction exactly");
  eval->add_option("pairs", pairs_literal, "\"(e0,a0)(e1,a1)...\"")->required();
  eval->add_option("tail", tail_literal, "rational tail in pZ_p or 0")->required();

  auto* conjugate = app.add_subcommand("conjugate", "apply f to a rational or a p-adic approximation");
  conjugate->add_option("x", x_literal, "num/den or e:d0,d1,...")->required();

  auto* invert = app.add_subcommand("invert", "preimage under f of an element of Z[1/p] or an approximation");
  invert->add_option("y", x_literal, "m*p^k, num/den in Z[1/p], or e:d0,d1,...")->required();

  auto* classify = app.add_subcommand("classify", "decide whether f^-1(y) is rational");
  classify->add_option("y", x_literal, "rational num/den")->required();

  auto* orbit = app.add_subcommand("orbit", "trace an orbit under tau or sigma");
  orbit->add_option("x", x_literal, "rational num/den")->required();
  orbit->add_option("n", steps, "number of steps")->check(CLI::NonNegativeNumber);
  orbit->add_option("--map", map, "tau or sigma")->check(CLI::IsMember({"tau", "sigma"}))->capture_default_str();

  auto* digits = app.add_subcommand("digits", "exact eventually periodic p-adic expansion");
  digits->add_option("x", x_literal, "rational num/den")->required();

  auto* selftest = app.add_subcommand("selftest", "run the randomized property suites");
  selftest->add_option("--samples", cfg.samples, "samples per property")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  app.footer("Negative literals must come after `--`, e.g. `schneider expand -p 2 -- -1`.");

  CLI11_PARSE(app, argc, argv);
  cfg.structured = format == "structured";

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const PrimeContext ctx(cfg.prime);
    CommandResult r;
    if (*expand) r = cmd_expand(cfg, ctx, x_literal);
    else if (*eval) r = cmd_eval(ctx, pairs_literal, tail_literal);
    else if (*conjugate) r = cmd_conjugate(cfg, ctx, x_literal);
    else if (*invert) r = cmd_invert(ctx, x_literal);
    else if (*classify) r = cmd_classify(ctx, x_literal);
    else if (*orbit) r = cmd_orbit(ctx, x_literal, steps, map);
    else if (*digits) r = cmd_digits(cfg, ctx, x_literal);
    else r = cmd_selftest(cfg, ctx);
    return emit(cfg, command, r);
  } catch (const OrbitNotTerminated& err) {
    return emit(cfg, command, not_terminated(err));
  } catch (const Error& err) {
    return emit(cfg, command, error_result(err.kind(), err.what()));
  }
}
