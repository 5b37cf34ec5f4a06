#pragma once

// Coefficient-field contexts. Algebra code is generic over a context that
// supplies powers of q, the constant q - q^-1, and the Markov weight:
// SymbolicCtx works in the rational-function field, EvaluatedCtx with q
// specialized to a concrete rational (the large-rank escape hatch, where
// symbolic coefficients would be too slow).

#include "hecke/ratfunc.hpp"

namespace hecke {

struct SymbolicCtx {
  using Field = RatFunc;
  Field q_power(int e) const { return q_power_rf(e); }
  Field delta() const { return delta_rf(); }
  Field from_rational(const Rational& r) const { return RatFunc(r); }
  Field markov(int d) const { return markov_weight(d); }
};

struct EvaluatedCtx {
  using Field = Rational;
  Rational q0;

  explicit EvaluatedCtx(const Rational& q) : q0(q) {
    if (q0 == 0 || q0 == 1 || q0 == -1)
      throw std::invalid_argument("EvaluatedCtx: q must avoid 0 and +-1");
  }
  Field q_power(int e) const { return pow_rational(q0, e); }
  Field delta() const { return q0 - pow_rational(q0, -1); }
  Field from_rational(const Rational& r) const { return r; }
  Field markov(int d) const {
    return (Rational(1) - pow_rational(q0, -2 * d)) / delta();
  }
};

inline std::string field_str(const RatFunc& f) { return f.str(); }
inline std::string field_str(const Rational& r) { return to_string(r); }

/// Quantum integer [k] = q^{k-1} + q^{k-3} + ... + q^{1-k} in the context's
/// field; [0] = 0 and [-k] = -[k].
template <class Ctx>
typename Ctx::Field quantum_integer(const Ctx& ctx, int k) {
  using F = typename Ctx::Field;
  F r(0);
  int a = k < 0 ? -k : k;
  for (int i = 0; i < a; ++i) r = r + ctx.q_power(a - 1 - 2 * i);
  return k < 0 ? -r : r;
}

}  // namespace hecke
