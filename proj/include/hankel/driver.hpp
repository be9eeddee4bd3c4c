#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hankel/moments.hpp"
#include "hankel/numerics.hpp"
#include "hankel/rational.hpp"

namespace hankel {

enum class Method { det, ortho, both };
enum class Format { table, csv, json };

std::string to_string(Method m);
Method parse_method(const std::string& s);
std::string to_string(Format f);
Format parse_format(const std::string& s);

struct RunConfig {
  Family family = Family::gompertz;
  unsigned long k = 2;
  std::size_t n_max = 10;
  std::optional<Method> method;  // unset: both for built-ins, ortho for custom
  std::size_t digits = 10;
  Format format = Format::table;
  bool exact = false;
  std::optional<std::filesystem::path> moments_file;
  std::optional<std::filesystem::path> out;
  /// Upper bound on concurrent determinant evaluations; 0 picks the hardware count.
  unsigned workers = 0;

  /// Throws InvalidArgument on inconsistent settings.
  void check() const;
  Method effective_method() const;
};

/// One convergence row.
struct ApproximantRecord {
  std::size_t n = 0;
  Rational p;
  Rational q;
  Rational value;  // p / q
  DecimalString decimal;
  std::optional<Rational> reference_gap;  // reference - value
  Method method = Method::both;
};

struct RunFailure {
  enum class Kind { positivity, mismatch };
  Kind kind;
  std::size_t index;  // first n that failed
  std::string message;
};

/// Records for n = 0 .. n_max, ascending. On failure the records before the
/// failing index are kept.
struct RunResult {
  std::vector<ApproximantRecord> records;
  std::optional<RunFailure> failure;
};

/// Sequence selected by the config (built-in family or the moments file).
MomentSequence sequence_for(const RunConfig& config);

RunResult run_convergence(const RunConfig& config);
RunResult run_convergence(const RunConfig& config, const MomentSequence& seq);

/// reference - value, reading the reference decimal as an exact rational.
Rational compare_reference(const ApproximantRecord& record, const ReferenceConstant& ref);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::string sequence;
  std::size_t n_max = 0;
  std::vector<CheckResult> checks;
  bool positivity_failed = false;

  bool all_passed() const;
  std::string render() const;
};

/// Runs both engines for n = 0 .. n_max and checks: det == ortho,
/// Q_n == prod t_i, Q_n > 0, nondecreasing values, P_0/Q_0 == a_1^2/a_2,
/// pairwise orthogonality of q_0 .. q_min(n_max,12), and the strict bound
/// below the reference constant when one is attached.
ValidationReport cross_validate(const MomentSequence& seq, std::size_t n_max);

/// Rationals longer than this are shown as "-" in table output unless exact.
inline constexpr std::size_t kTableRationalWidth = 40;

std::string emit(const std::vector<ApproximantRecord>& records, Format format, std::size_t digits,
                 bool exact);

/// Writes text to path, throwing IoError on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

/// Inverse of the json emitter.
std::vector<ApproximantRecord> records_from_json(const std::string& text);

}  // namespace hankel
