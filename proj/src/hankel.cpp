#include "hankel/hankel.hpp"

#include <string>
#include <vector>

namespace hankel {

namespace {

// Fills entry(i,j) = a_{i+j+shift} from a precomputed list a[0..].
RationalMatrix hankel_from(const std::vector<Rational>& a, std::size_t order, std::size_t shift) {
  RationalMatrix m(order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) m(i, j) = a[i + j + shift];
  return m;
}

std::vector<Rational> moments_through(const MomentSequence& seq, std::size_t last) {
  std::vector<Rational> a(last + 1);
  a[0] = 0;
  for (std::size_t i = 1; i <= last; ++i) a[i] = seq.moment(i);
  return a;
}

}  // namespace

RationalMatrix build_p_matrix(const MomentSequence& seq, std::size_t n) {
  return hankel_from(moments_through(seq, 2 * n + 2), n + 2, 0);
}

RationalMatrix build_q_matrix(const MomentSequence& seq, std::size_t n) {
  return hankel_from(moments_through(seq, 2 * n + 2), n + 1, 2);
}

Rational hankel_p(const MomentSequence& seq, std::size_t n) {
  return -det_rational(build_p_matrix(seq, n));
}

Rational hankel_q(const MomentSequence& seq, std::size_t n) {
  Rational q = det_rational(build_q_matrix(seq, n));
  if (q.sign() <= 0) {
    throw NonPositiveQ(n, seq.name() + ": Q_" + std::to_string(n) + " = " + q.str() +
                              " is not positive");
  }
  return q;
}

}  // namespace hankel
