#include "hankel/orthopoly.hpp"

#include <string>

namespace hankel {

namespace {

// Values scaled to a common denominator: v[i] = nums[i] / den.
struct Scaled {
  std::vector<Integer> nums;
  Integer den = 1;
};

template <class Get>
Scaled scale_common(std::size_t count, Get get) {
  Scaled out;
  for (std::size_t i = 0; i < count; ++i) {
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), get(i).mpq().get_den_mpz_t());
  }
  out.nums.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const mpq_class& v = get(i).mpq();
    Integer& e = out.nums[i];
    mpz_divexact(e.get_mpz_t(), out.den.get_mpz_t(), v.get_den_mpz_t());
    e *= v.get_num();
  }
  return out;
}

Scaled scaled_poly(const Polynomial& f) {
  return scale_common(f.size(), [&](std::size_t i) -> const Rational& { return f[i]; });
}

// a_lo .. a_hi over one denominator.
Scaled scaled_moments(const MomentSequence& seq, std::size_t lo, std::size_t hi) {
  std::vector<Rational> a;
  a.reserve(hi - lo + 1);
  for (std::size_t i = lo; i <= hi; ++i) a.push_back(seq.moment(i));
  return scale_common(a.size(), [&](std::size_t i) -> const Rational& { return a[i]; });
}

// sum_i sum_j f_i g_j a_{i+j+shift}; shift >= 1 so a_0 is never touched.
// Accumulated in integers and reduced once at the end.
Rational shifted_form(const Polynomial& f, const Polynomial& g, const MomentSequence& seq,
                      std::size_t shift) {
  if (f.empty() || g.empty()) return Rational(0);
  const Scaled a = scaled_moments(seq, shift, f.size() + g.size() - 2 + shift);
  const Scaled sf = scaled_poly(f);
  const Scaled sg = &f == &g ? sf : scaled_poly(g);

  Integer total = 0;
  Integer row;
  for (std::size_t i = 0; i < sf.nums.size(); ++i) {
    if (sf.nums[i] == 0) continue;
    row = 0;
    for (std::size_t j = 0; j < sg.nums.size(); ++j) {
      mpz_addmul(row.get_mpz_t(), sg.nums[j].get_mpz_t(), a.nums[i + j].get_mpz_t());
    }
    mpz_addmul(total.get_mpz_t(), sf.nums[i].get_mpz_t(), row.get_mpz_t());
  }
  return Rational(total, sf.den * sg.den * a.den);
}

Rational first_moment_of(const Polynomial& q, const MomentSequence& seq) {
  if (q.empty()) return Rational(0);
  const Scaled a = scaled_moments(seq, 1, q.size());
  const Scaled sq = scaled_poly(q);
  Integer total = 0;
  for (std::size_t j = 0; j < sq.nums.size(); ++j) {
    mpz_addmul(total.get_mpz_t(), sq.nums[j].get_mpz_t(), a.nums[j].get_mpz_t());
  }
  return Rational(total, sq.den * a.den);
}

}  // namespace

Rational inner_product(const Polynomial& f, const Polynomial& g, const MomentSequence& seq) {
  return shifted_form(f, g, seq, 2);
}

Rational OrthoState::norm_product() const {
  Rational out = 1;
  for (const auto& v : t) out *= v;
  return out;
}

OrthoState ortho_init(const MomentSequence& seq, bool validate) {
  const Rational a1 = seq.moment(1);
  const Rational a2 = seq.moment(2);
  if (a2.sign() <= 0) {
    throw PositivityViolation(0, seq.name() + ": t_0 = a_2 = " + a2.str() + " is not positive");
  }
  OrthoState st;
  st.q_curr = {Rational(1)};
  st.t = {a2};
  st.s = {a1};
  st.partial_sum = a1 * a1 / a2;
  st.validate = validate;
  if (validate) st.basis.push_back(st.q_curr);
  return st;
}

OrthoState ortho_step(OrthoState state, const MomentSequence& seq) {
  const std::size_t m = state.m;
  const Polynomial& q = state.q_curr;

  const Rational alpha = shifted_form(q, q, seq, 3) / state.t[m];

  // (x - alpha) q_m - beta q_{m-1}
  Polynomial next(q.size() + 1);
  for (std::size_t j = 0; j < q.size(); ++j) {
    next[j + 1] += q[j];
    next[j] -= alpha * q[j];
  }
  if (m > 0) {
    const Rational beta = state.t[m] / state.t[m - 1];
    for (std::size_t j = 0; j < state.q_prev.size(); ++j) next[j] -= beta * state.q_prev[j];
  }

  if (state.validate) {
    for (std::size_t j = 0; j < state.basis.size(); ++j) {
      const Rational ip = inner_product(next, state.basis[j], seq);
      if (!ip.is_zero()) {
        throw EngineMismatch(m + 1, seq.name() + ": q_" + std::to_string(m + 1) +
                                        " not orthogonal to q_" + std::to_string(j) + " (" +
                                        ip.str() + ")");
      }
    }
  }

  Rational t_next = inner_product(next, next, seq);
  if (t_next.sign() <= 0) {
    const std::string what = seq.name() + ": t_" + std::to_string(m + 1) + " = " + t_next.str() +
                             " is not positive";
    throw PositivityViolation(m + 1, what, std::move(state), true);
  }
  Rational s_next = first_moment_of(next, seq);

  state.partial_sum += s_next * s_next / t_next;
  state.t.push_back(std::move(t_next));
  state.s.push_back(std::move(s_next));
  if (state.validate) state.basis.push_back(next);
  state.q_prev = std::move(state.q_curr);
  state.q_curr = std::move(next);
  state.m = m + 1;
  return state;
}

Rational approximant_ortho(const MomentSequence& seq, std::size_t n) {
  seq.prefetch(2 * n + 2);
  OrthoState st = ortho_init(seq);
  while (st.m < n) st = ortho_step(std::move(st), seq);
  return st.partial_sum;
}

std::vector<Polynomial> orthogonal_polynomials(const MomentSequence& seq, std::size_t count) {
  std::vector<Polynomial> out;
  if (count == 0) return out;
  seq.prefetch(2 * count);
  OrthoState st = ortho_init(seq);
  out.push_back(st.q_curr);
  while (out.size() < count) {
    st = ortho_step(std::move(st), seq);
    out.push_back(st.q_curr);
  }
  return out;
}

}  // namespace hankel
