#pragma once

#include <cstddef>

#include "hankel/matrix.hpp"
#include "hankel/moments.hpp"

namespace hankel {

/// (n+2)x(n+2) matrix (a_{i+j}) with a_0 := 0.
RationalMatrix build_p_matrix(const MomentSequence& seq, std::size_t n);

/// (n+1)x(n+1) matrix (a_{i+j+2}).
RationalMatrix build_q_matrix(const MomentSequence& seq, std::size_t n);

/// P_n = -det(a_{i+j})_{i,j=0}^{n+1}.
Rational hankel_p(const MomentSequence& seq, std::size_t n);

/// Q_n = det(a_{i+j+2})_{i,j=0}^{n}. Throws NonPositiveQ when Q_n <= 0.
Rational hankel_q(const MomentSequence& seq, std::size_t n);

}  // namespace hankel
