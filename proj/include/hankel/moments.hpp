#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hankel/rational.hpp"

namespace hankel {

// Closed-form moment generators a_n = L(e_n), n >= 1. Each throws
// InvalidArgument for n == 0; a_0 is not a moment of the sequence and is
// supplied as 0 by the Hankel builders.

/// (n-1)! * sum_{i=0}^{n} C(n,i) (-1)^i (n-2i-1)/(i+1)^{n+1}.
Rational gamma_moment(unsigned long n);

/// sum_{i=0}^{n-1} (n-1)!/i!, always an integer.
Rational gompertz_moment(unsigned long n);

/// sum_{i=0}^{n-1} C(n-1,i) (-1)^i/(i+1)^k. Throws InvalidArgument when k < 2.
Rational zeta_moment(unsigned long k, unsigned long n);

/// (n-1)!.
Rational factorial_moment(unsigned long n);

enum class Family { gamma, gompertz, zeta, factorial, custom };

std::string to_string(Family f);
/// Throws InvalidArgument for unknown names.
Family parse_family(const std::string& name);

/// Target constant L(e_0) as a printed decimal.
struct ReferenceConstant {
  std::string name;
  std::string decimal;

  Rational value() const { return parse_decimal(decimal); }
};

/// Named provider of exact moments a_1, a_2, ... for one linear functional.
///
/// Built-in families evaluate their closed form on demand and memoize; the
/// cache is shared between copies and guarded, so concurrent readers see the
/// same values. Custom sequences hold a fixed list and throw IndexOutOfRange
/// past its end.
class MomentSequence {
 public:
  static MomentSequence gamma();
  static MomentSequence gompertz();
  static MomentSequence zeta(unsigned long k);
  static MomentSequence factorial();
  static MomentSequence custom(std::string name, std::vector<Rational> moments,
                               std::optional<std::string> reference = std::nullopt);
  /// Built-in family by tag; `k` is only read for zeta.
  static MomentSequence builtin(Family family, unsigned long k = 2);

  const std::string& name() const noexcept { return name_; }
  Family family() const noexcept { return family_; }
  unsigned long zeta_order() const noexcept { return k_; }
  const std::optional<ReferenceConstant>& reference() const noexcept { return reference_; }

  /// a_n for n >= 1. Throws InvalidArgument for n == 0.
  Rational moment(std::size_t n) const;

  /// Number of moments available, or nullopt when unbounded.
  std::optional<std::size_t> available() const;

  /// Fills the cache through a_n so later reads are lock-free in practice.
  void prefetch(std::size_t n) const;

 private:
  struct Cache;

  MomentSequence(std::string name, Family family, unsigned long k);

  std::string name_;
  Family family_;
  unsigned long k_ = 0;
  std::optional<ReferenceConstant> reference_;
  std::shared_ptr<Cache> cache_;
};

/// Reads the moment-file format:
///   {"name": "...", "a": ["a_1", "a_2", ...], "reference": "0.59..."}
/// Throws IoError when the file cannot be read and ParseError on malformed content.
MomentSequence load_moments(const std::filesystem::path& path);

/// Same format from an in-memory document.
MomentSequence parse_moments(const std::string& document);

/// Serializes the first `count` moments in the moment-file format.
std::string moments_to_json(const MomentSequence& seq, std::size_t count);

}  // namespace hankel
