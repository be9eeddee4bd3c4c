#include "hankel/matrix.hpp"

#include <string>

namespace hankel {

DetResult det_fraction_free(IntegerMatrix m) {
  const std::size_t n = m.order();
  DetResult out{1, 0};
  if (n == 0) return out;

  Integer prev_pivot = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) {
        out.value = 0;
        return out;
      }
      for (std::size_t j = k; j < n; ++j) swap(m(k, j), m(r, j));
      ++out.pivot_swaps;
      negate = !negate;
    }
    const Integer& pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // m_ij <- (m_kk m_ij - m_ik m_kj) / m_{k-1,k-1}, exact by Sylvester's identity.
        Integer& e = m(i, j);
        e *= pivot;
        mpz_submul(e.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
        mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev_pivot = pivot;
  }
  out.value = m(n - 1, n - 1);
  if (negate) out.value = -out.value;
  return out;
}

Rational det_rational(const RationalMatrix& m) {
  const std::size_t n = m.order();
  IntegerMatrix scaled(n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).mpq().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& e = m(i, j).mpq();
      Integer v = row_lcm;
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), e.get_den_mpz_t());
      v *= e.get_num();
      scaled(i, j) = std::move(v);
    }
    scale *= row_lcm;
  }
  return Rational(det_fraction_free(std::move(scaled)).value, scale);
}

Rational arrow_det(const RationalMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return Rational(1);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      if (i != j && !m(i, j).is_zero()) {
        throw ArrowShapeViolation("arrow_det: nonzero entry at (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ")");
      }
    }
    if (m(i, i).is_zero()) {
      throw ZeroDiagonal("arrow_det: zero diagonal entry at index " + std::to_string(i));
    }
  }
  Rational diag_product = 1;
  Rational bracket = m(0, 0);
  for (std::size_t i = 1; i < n; ++i) {
    diag_product *= m(i, i);
    bracket -= m(i, 0) * m(0, i) / m(i, i);
  }
  return diag_product * bracket;
}

}  // namespace hankel
