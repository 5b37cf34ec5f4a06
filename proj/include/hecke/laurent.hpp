#pragma once

// Laurent polynomials in one variable q with exact rational coefficients,
// stored densely as (lowest exponent, coefficient vector). The integer-
// coefficient helpers at the bottom back the gcd routine and the product
// kernels; public arithmetic stays on the rational form.

#include "hecke/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero
  LaurentPoly(int k) { if (k != 0) { lo_ = 0; c_ = {Rational(k)}; } }
  LaurentPoly(const Rational& r) { if (r != 0) { lo_ = 0; c_ = {r}; } }

  static LaurentPoly monomial(const Rational& coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) { p.lo_ = exp; p.c_ = {coeff}; }
    return p;
  }
  static LaurentPoly q_power(int exp) { return monomial(1, exp); }

  static LaurentPoly from_dense(int lo, std::vector<Rational> coeffs) {
    LaurentPoly p;
    p.lo_ = lo;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int lo() const { return lo_; }               // meaningless when zero
  int hi() const { return lo_ + int(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational coeff(int exp) const {
    if (c_.empty() || exp < lo_ || exp > hi()) return Rational(0);
    return c_[size_t(exp - lo_)];
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.lo_, b.lo_), hi = std::max(a.hi(), b.hi());
    LaurentPoly r;
    r.lo_ = lo;
    r.c_.assign(size_t(hi - lo + 1), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[size_t(a.lo_ - lo) + i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[size_t(b.lo_ - lo) + i] += b.c_[i];
    r.trim();
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly r;
    r.lo_ = a.lo_ + b.lo_;
    // integer fast path: cpp_int convolution is ~50x cheaper than cpp_rational
    if (a.integral() && b.integral()) {
      std::vector<BigInt> acc(a.c_.size() + b.c_.size() - 1, BigInt(0));
      for (size_t i = 0; i < a.c_.size(); ++i) {
        const BigInt ai = numerator(a.c_[i]);
        if (ai == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += ai * numerator(b.c_[j]);
      }
      r.c_.assign(acc.size(), Rational(0));
      for (size_t i = 0; i < acc.size(); ++i) r.c_[i] = Rational(acc[i]);
    } else {
      r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
      for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    r.trim();
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& b) { *this = *this + b; return *this; }
  LaurentPoly& operator-=(const LaurentPoly& b) { *this = *this - b; return *this; }
  LaurentPoly& operator*=(const LaurentPoly& b) { *this = *this * b; return *this; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;  // zero is always (0, empty)
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Shift exponents by k (multiply by q^k).
  LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.lo_ += k;
    return r;
  }

  /// Evaluate at a nonzero rational.
  Rational eval(const Rational& q0) const {
    if (q0 == 0) throw std::domain_error("LaurentPoly::eval: q = 0");
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * q0 + c_[i];
    return acc * pow_rational(q0, lo_);
  }

  bool integral() const {
    for (const auto& x : c_)
      if (denominator(x) != 1) return false;
    return true;
  }

  /// Canonical text form, terms by ascending exponent: "-q^-1 + 2 + q^3".
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      Rational v = c_[i];
      bool neg = v < 0;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (neg) v = -v;
      int e = lo_ + int(i);
      std::string body;
      if (e == 0) {
        body = to_string(v);
      } else {
        std::string qpart = (e == 1) ? "q" : "q^" + std::to_string(e);
        body = (v == 1) ? qpart : to_string(v) + "*" + qpart;
      }
      out += body;
    }
    return out;
  }

 private:
  void trim() {
    size_t b = 0, e = c_.size();
    while (e > b && c_[e - 1] == 0) --e;
    while (b < e && c_[b] == 0) ++b;
    if (b == e) { c_.clear(); lo_ = 0; return; }
    if (b > 0 || e < c_.size()) {
      c_ = std::vector<Rational>(c_.begin() + long(b), c_.begin() + long(e));
      lo_ += int(b);
    }
  }

  int lo_ = 0;
  std::vector<Rational> c_;
};

/// q - q^-1, the quadratic-relation constant.
inline const LaurentPoly& delta_poly() {
  static const LaurentPoly d = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
  return d;
}

// ---------------------------------------------------------------------------
// Integer-coefficient helpers (ordinary polynomials, index = exponent).
// Used for gcd under the hood and by the element product kernel.

using IntVec = std::vector<BigInt>;

inline void ivec_trim(IntVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

inline BigInt ivec_content(const IntVec& v) {
  BigInt g = 0;
  for (const auto& x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;  // 0 only for the zero polynomial
}

inline void ivec_divexact(IntVec& v, const BigInt& d) {
  for (auto& x : v) x /= d;
}

/// Primitive part with positive leading coefficient; v must be nonzero.
inline void ivec_make_primitive(IntVec& v) {
  BigInt g = ivec_content(v);
  if (v.back() < 0) g = -g;
  if (g != 1) ivec_divexact(v, g);
}

/// Pseudo-remainder of a by b (deg a >= deg b >= 0), in place semantics.
inline IntVec ivec_prem(IntVec a, const IntVec& b) {
  const BigInt& lb = b.back();
  const size_t db = b.size() - 1;
  while (a.size() >= b.size() && !a.empty()) {
    BigInt la = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i + 1 < a.size(); ++i) a[i] *= lb;
    for (size_t i = 0; i < db; ++i) a[shift + i] -= la * b[i];
    a.pop_back();
    ivec_trim(a);
  }
  return a;
}

/// Gcd of two integer polynomials (primitive PRS); result primitive with
/// positive leading coefficient. Zero inputs behave as for integers.
inline IntVec ivec_gcd(IntVec a, IntVec b) {
  ivec_trim(a);
  ivec_trim(b);
  if (a.empty()) { if (!b.empty()) ivec_make_primitive(b); return b; }
  if (b.empty()) { ivec_make_primitive(a); return a; }
  ivec_make_primitive(a);
  ivec_make_primitive(b);
  if (a.size() < b.size()) a.swap(b);
  while (!b.empty()) {
    IntVec r = ivec_prem(a, b);
    a.swap(b);
    b.swap(r);
    if (!b.empty()) ivec_make_primitive(b);
  }
  return a;  // already primitive, positive leading
}

/// Exact quotient a / b (remainder known to vanish).
inline IntVec ivec_divexact_poly(const IntVec& a, const IntVec& b) {
  if (b.empty()) throw std::domain_error("ivec_divexact_poly: zero divisor");
  if (a.empty()) return {};
  IntVec rem = a, q(a.size() - b.size() + 1, BigInt(0));
  for (size_t i = q.size(); i-- > 0;) {
    if (rem.size() < b.size() + i) continue;
    BigInt qi = rem[b.size() - 1 + i] / b.back();
    q[i] = qi;
    if (qi != 0)
      for (size_t j = 0; j < b.size(); ++j) rem[i + j] -= qi * b[j];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return q;
}

/// Split a nonzero Laurent poly into content * q^lo * primitive integer part.
struct PrimitiveParts {
  Rational content;  // rational scale, sign carried here
  int lo = 0;        // power of q factored out
  IntVec prim;       // primitive, positive leading coefficient
};

inline PrimitiveParts primitive_parts(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("primitive_parts: zero polynomial");
  BigInt den_lcm = 1;
  for (const auto& x : p.coeffs())
    den_lcm = lcm(den_lcm, denominator(x));
  IntVec v(p.coeffs().size());
  for (size_t i = 0; i < v.size(); ++i) {
    const Rational& x = p.coeffs()[i];
    v[i] = numerator(x) * (den_lcm / denominator(x));
  }
  BigInt g = ivec_content(v);
  if (v.back() < 0) g = -g;
  ivec_divexact(v, g);
  return {Rational(g, den_lcm), p.lo(), v};
}

inline LaurentPoly laurent_from_ivec(const IntVec& v, int lo, const Rational& scale) {
  if (scale == 0) return {};
  std::vector<Rational> c(v.size());
  for (size_t i = 0; i < v.size(); ++i) c[i] = Rational(v[i]) * scale;
  return LaurentPoly::from_dense(lo, std::move(c));
}

}  // namespace hecke
