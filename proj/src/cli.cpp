#include "dftnum/cli.hpp"

#include <cstdint>
#include <exception>
#include <ostream>

#include <CLI11.hpp>

#include "dftnum/claims.hpp"
#include "dftnum/document.hpp"

namespace dftnum {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Five-point DFT number operator: matrices, eigensystems, identity checks", "dftnum"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string precision = "64";
  double tolerance = 1e-12;
  std::uint64_t seed = kDefaultSeed;
  app.add_option("--precision", precision, "64 or extended:<digits> (digits >= 30)")
      ->capture_default_str();
  app.add_option("--tolerance", tolerance, "base tolerance for composite identities")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized checks")->capture_default_str();

  std::string format = "json";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };

  auto* emit = app.add_subcommand("emit", "write one operator matrix or splitting");
  std::string object;
  std::size_t n = 5;
  emit->add_option("--object", object, "matrix name")->required();
  emit->add_option("--n", n, "dimension")->capture_default_str();
  add_format(emit);

  auto* eigen = app.add_subcommand("eigensystem", "eigenvalues and eigenvectors of N5");
  std::string method = "ladder";
  eigen->add_option("--method", method, "ladder, power, newton or oracle")
      ->check(CLI::IsMember({"ladder", "power", "newton", "oracle"}))
      ->capture_default_str();
  add_format(eigen);

  auto* verify = app.add_subcommand("verify", "evaluate every registered identity");
  int trials = kDefaultTrials;
  verify->add_option("--trials", trials, "random parity vectors per annihilation check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(verify);

  auto* constants = app.add_subcommand("constants", "table of scalar constants");
  add_format(constants);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  PrecisionConfig config;
  try {
    config = PrecisionConfig::parse(precision);
  } catch (const std::exception& e) {
    err << "dftnum: " << e.what() << "\n";
    return kExitUsage;
  }
  config.epsilon = tolerance;
  const OutputFormat fmt = *output_format_from_name(format);

  try {
    if (*emit) {
      out << render(matrix_document(object, n, config), fmt);
    } else if (*eigen) {
      out << render(eigensystem_document(*eigen_method_from_name(method), config), fmt);
    } else if (*constants) {
      out << render(constants_document(config), fmt);
    } else if (*verify) {
      const ClaimsReport report = run_claims(config, trials, seed);
      out << render(report_document(report), fmt);
      if (!verification_passed(report)) {
        err << "dftnum: verification failed (" << report.count(ClaimStatus::fail)
            << " FAIL entries)\n";
        return kExitVerificationFailed;
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "dftnum: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "dftnum: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace dftnum
