#pragma once

// Field of rational functions in q over the rationals. Canonical form:
// gcd(num, den) = 1, den has lowest exponent 0 and leading coefficient 1,
// zero is 0/1. Structural equality is field equality.

#include "hecke/laurent.hpp"

namespace hecke {

class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(int k) : num_(k), den_(1) {}
  RatFunc(const Rational& r) : num_(r), den_(1) {}
  RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}

  /// num/den brought to canonical form. Throws on zero denominator.
  static RatFunc fraction(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("RatFunc: division by zero");
    RatFunc r;
    if (num.is_zero()) return r;
    int shift = den.lo();
    LaurentPoly n1 = num.shifted(-shift), d1 = den.shifted(-shift);
    PrimitiveParts pn = primitive_parts(n1), pd = primitive_parts(d1);
    IntVec g = ivec_gcd(pn.prim, pd.prim);
    IntVec np = ivec_divexact_poly(pn.prim, g);
    IntVec dp = ivec_divexact_poly(pd.prim, g);
    // monic denominator; all remaining scale goes to the numerator
    Rational lead = Rational(dp.back()) * pd.content;
    r.num_ = laurent_from_ivec(np, pn.lo, pn.content / lead);
    r.den_ = laurent_from_ivec(dp, 0, Rational(1, dp.back()));
    return r;
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == LaurentPoly(1); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return fraction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return fraction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& b) { *this = *this + b; return *this; }
  RatFunc& operator-=(const RatFunc& b) { *this = *this - b; return *this; }
  RatFunc& operator*=(const RatFunc& b) { *this = *this * b; return *this; }
  RatFunc& operator/=(const RatFunc& b) { *this = *this / b; return *this; }

  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return fraction(den_, num_);
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// Exact evaluation at q = q0 (nonzero, not a pole).
  Rational eval(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d == 0) throw std::domain_error("RatFunc::eval: pole at the given q");
    return num_.eval(q0) / d;
  }

  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  LaurentPoly num_, den_;
};

inline RatFunc q_power_rf(int e) { return RatFunc(LaurentPoly::q_power(e)); }
inline RatFunc delta_rf() { return RatFunc(delta_poly()); }

/// Quantum integer [k] = (q^k - q^-k)/(q - q^-1); [0] = 0, [-k] = -[k].
inline LaurentPoly quantum_int(int k) {
  if (k == 0) return {};
  int a = std::abs(k);
  std::vector<Rational> c(size_t(2 * a - 1), Rational(0));
  for (int i = 0; i < a; ++i) c[size_t(2 * i)] = Rational(k > 0 ? 1 : -1);
  return LaurentPoly::from_dense(1 - a, std::move(c));
}

/// Markov weight z_d = (1 - q^-2d)/(q - q^-1) for an integer parameter d.
inline RatFunc markov_weight(int d) {
  LaurentPoly num = LaurentPoly(1) - LaurentPoly::q_power(-2 * d);
  return RatFunc::fraction(num, delta_poly());
}

/// Exact evaluation, the q |-> q0 specialization homomorphism.
inline Rational eval_at(const RatFunc& f, const Rational& q0) { return f.eval(q0); }

}  // namespace hecke
