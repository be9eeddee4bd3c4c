#pragma once

#include <cstddef>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/moments.hpp"
#include "hankel/rational.hpp"

namespace hankel {

/// Coefficients by ascending degree; the last entry is the leading one.
using Polynomial = std::vector<Rational>;

/// The form (f, g) -> L(e_2 f g) = sum_i sum_j f_i g_j a_{i+j+2}.
Rational inner_product(const Polynomial& f, const Polynomial& g, const MomentSequence& seq);

/// Incremental state of the monic orthogonal polynomials q_0, q_1, ... for
/// the form above, together with the partial sums of the approximant.
///
/// Index bookkeeping: with p_{i+1} = x q_i,
///   t[i] = L(e_2 q_i^2)  = L(p_{i+1}^2)   uses moments a_{j+j'+2}
///   s[i] = L(e_1 q_i)    = L(p_{i+1})     uses moments a_{j+1}
/// The one-step shift between the two is the x-factor in p, not a typo.
struct OrthoState {
  std::size_t m = 0;
  Polynomial q_prev;  // q_{m-1}; empty when m == 0
  Polynomial q_curr;  // q_m, monic
  std::vector<Rational> t;
  std::vector<Rational> s;
  Rational partial_sum;  // A_m = sum_{i<=m} s_i^2 / t_i = P_m / Q_m

  /// prod_{i<=m} t_i, which equals Q_m.
  Rational norm_product() const;

  /// In validation mode every q_j is kept so each step can be checked
  /// against all earlier polynomials.
  bool validate = false;
  std::vector<Polynomial> basis;
};

/// The form stopped being positive: t at `index` is <= 0. `partial` holds the
/// last good state (through index - 1), if any.
class PositivityViolation : public Error {
 public:
  PositivityViolation(std::size_t index, const std::string& what, OrthoState partial = {},
                      bool has_partial = false)
      : Error(what), index_(index), partial_(std::move(partial)), has_partial_(has_partial) {}

  std::size_t index() const noexcept { return index_; }
  bool has_partial() const noexcept { return has_partial_; }
  const OrthoState& partial() const noexcept { return partial_; }

 private:
  std::size_t index_;
  OrthoState partial_;
  bool has_partial_;
};

/// q_0 = 1, t_0 = a_2, s_0 = a_1, A_0 = a_1^2 / a_2.
OrthoState ortho_init(const MomentSequence& seq, bool validate = false);

/// Advances by the three-term recurrence
///   q_{m+1} = (x - alpha_m) q_m - beta_m q_{m-1},
///   alpha_m = (x q_m, q_m) / t_m,  beta_m = t_m / t_{m-1}.
/// In validation mode, throws EngineMismatch if q_{m+1} is not orthogonal to
/// every earlier q_j.
OrthoState ortho_step(OrthoState state, const MomentSequence& seq);

/// A_n after n steps, equal to P_n / Q_n.
Rational approximant_ortho(const MomentSequence& seq, std::size_t n);

/// q_0 .. q_{count-1}.
std::vector<Polynomial> orthogonal_polynomials(const MomentSequence& seq, std::size_t count);

}  // namespace hankel
