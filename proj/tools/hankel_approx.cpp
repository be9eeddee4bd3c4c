// hankel-approx: rational approximants P_n/Q_n from moment sequences.
//
// Exit codes: 0 success, 1 usage error, 2 validation failure or engine
// mismatch, 3 positivity violation, 4 I/O or parse error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hankel/driver.hpp"
#include "hankel/moments.hpp"
#include "hankel/orthopoly.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitPositivity = 3;
constexpr int kExitIo = 4;
constexpr unsigned long kMaxZetaOrder = 64;

struct FamilyArgs {
  std::string family;
  unsigned long k = 2;
  std::string moments_file;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--family", family, "gamma|gompertz|zeta|factorial|custom")
        ->required()
        ->check(CLI::IsMember({"gamma", "gompertz", "zeta", "factorial", "custom"}));
    cmd->add_option("--k", k, "zeta order")->check(CLI::Range(2ul, kMaxZetaOrder));
    cmd->add_option("--moments-file", moments_file, "moment file for --family custom");
  }

  hankel::RunConfig base_config() const {
    hankel::RunConfig cfg;
    cfg.family = hankel::parse_family(family);
    cfg.k = k;
    if (!moments_file.empty()) cfg.moments_file = moments_file;
    return cfg;
  }
};

void print_or_write(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    hankel::write_text(out, text);
  }
}

int run_approx(const FamilyArgs& fam, std::size_t n_max, const std::string& method,
               std::size_t digits, const std::string& format, bool exact, const std::string& out) {
  hankel::RunConfig cfg = fam.base_config();
  cfg.n_max = n_max;
  if (!method.empty()) cfg.method = hankel::parse_method(method);
  cfg.digits = digits;
  cfg.format = hankel::parse_format(format);
  cfg.exact = exact;
  if (!out.empty()) cfg.out = out;

  const auto result = hankel::run_convergence(cfg);
  print_or_write(hankel::emit(result.records, cfg.format, cfg.digits, cfg.exact), out);
  if (!result.failure) return 0;

  std::cerr << "hankel-approx: " << result.failure->message << " (n = " << result.failure->index
            << ")\n";
  return result.failure->kind == hankel::RunFailure::Kind::positivity ? kExitPositivity
                                                                       : kExitValidation;
}

int run_moments(const FamilyArgs& fam, std::size_t count, const std::string& format) {
  const auto seq = hankel::sequence_for(fam.base_config());
  if (format == "json") {
    std::cout << hankel::moments_to_json(seq, count);
  } else {
    std::cout << "n,a\n";
    for (std::size_t n = 1; n <= count; ++n) std::cout << n << ',' << seq.moment(n) << "\n";
  }
  return 0;
}

int run_validate(const FamilyArgs& fam, std::size_t n_max) {
  const auto seq = hankel::sequence_for(fam.base_config());
  const auto report = hankel::cross_validate(seq, n_max);
  std::cout << report.render();
  if (report.positivity_failed) return kExitPositivity;
  return report.all_passed() ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational approximants to L(e_0) from Hankel determinants of moments"};
  app.require_subcommand(1);

  FamilyArgs approx_fam;
  std::size_t n_max = 10;
  std::string method;
  std::size_t digits = 10;
  std::string format = "table";
  bool exact = false;
  std::string out;
  auto* approx = app.add_subcommand("approx", "approximants for n = 0 .. n-max");
  approx_fam.add_to(approx);
  approx->add_option("--n-max", n_max, "largest index n")->required();
  approx->add_option("--method", method, "det|ortho|both")
      ->check(CLI::IsMember({"det", "ortho", "both"}));
  approx->add_option("--digits", digits, "fractional digits of decimals")
      ->check(CLI::PositiveNumber);
  approx->add_option("--format", format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  approx->add_flag("--exact", exact, "print full rationals in table format");
  approx->add_option("--out", out, "write output to this file");

  FamilyArgs moments_fam;
  std::size_t count = 10;
  std::string moments_format = "json";
  auto* moments = app.add_subcommand("moments", "list a_1 .. a_count");
  moments_fam.add_to(moments);
  moments->add_option("--count", count, "number of moments")->required();
  moments->add_option("--format", moments_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  FamilyArgs validate_fam;
  std::size_t validate_n = 10;
  auto* validate = app.add_subcommand("validate", "cross-check both engines");
  validate_fam.add_to(validate);
  validate->add_option("--n-max", validate_n, "largest index n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*approx) return run_approx(approx_fam, n_max, method, digits, format, exact, out);
    if (*moments) return run_moments(moments_fam, count, moments_format);
    if (*validate) return run_validate(validate_fam, validate_n);
  } catch (const hankel::PositivityViolation& e) {
    std::cerr << "hankel-approx: " << e.what() << "\n";
    return kExitPositivity;
  } catch (const hankel::NonPositiveQ& e) {
    std::cerr << "hankel-approx: " << e.what() << "\n";
    return kExitPositivity;
  } catch (const hankel::EngineMismatch& e) {
    std::cerr << "hankel-approx: " << e.what() << "\n";
    return kExitValidation;
  } catch (const hankel::IoError& e) {
    std::cerr << "hankel-approx: " << e.what() << "\n";
    return kExitIo;
  } catch (const hankel::ParseError& e) {
    std::cerr << "hankel-approx: " << e.what();
    if (e.line() != 0) std::cerr << " (line " << e.line() << ", column " << e.column() << ")";
    std::cerr << "\n";
    return kExitIo;
  } catch (const hankel::ZeroDenominator& e) {
    std::cerr << "hankel-approx: " << e.what() << "\n";
    return kExitIo;
  } catch (const hankel::Error& e) {
    std::cerr << "hankel-approx: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
