#pragma once

// Elements of the A-type Hecke algebra H_n(q) in the word basis {T_w},
// w running over S_n. Multiplication pushes the left factor through the
// staircase word of each right basis word with the two-case rule
//   T_w T_{s_i} = T_{w s_i}                        if the length goes up,
//   T_w T_{s_i} = T_{w s_i} + (q - q^-1) T_w       otherwise.
// Coefficients are cleared to integer polynomials (symbolic field) or
// fixed-denominator integers (evaluated field) before the push; rational
// canonicalization happens once per output coefficient. That keeps the
// rank-5 idempotent workloads inside their time budgets on one core.

#include "hecke/permutation.hpp"
#include "hecke/scalars.hpp"

#include <map>

namespace hecke {

template <class F>
class HeckeElement {
 public:
  explicit HeckeElement(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("HeckeElement: rank must be >= 1");
  }

  static HeckeElement unit(int n) { return basis(Permutation(n)); }

  static HeckeElement basis(const Permutation& w, const F& coeff = F(1)) {
    HeckeElement e(w.n());
    if (!(coeff == F(0))) e.terms_[w] = coeff;
    return e;
  }

  int n() const { return n_; }
  const std::map<Permutation, F>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  F coeff(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? F(0) : it->second;
  }

  void add_term(const Permutation& w, const F& c) {
    if (w.n() != n_) throw std::invalid_argument("HeckeElement: rank mismatch");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      if (!(c == F(0))) terms_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second == F(0)) terms_.erase(it);
    }
  }

  friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("HeckeElement: rank mismatch");
    HeckeElement r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
  }
  friend HeckeElement operator-(const HeckeElement& a) {
    HeckeElement r = a;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }
  friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
    return a + (-b);
  }
  friend HeckeElement operator*(const F& s, const HeckeElement& a) {
    HeckeElement r(a.n_);
    if (s == F(0)) return r;
    r.terms_ = a.terms_;
    for (auto& [w, c] : r.terms_) c = s * c;
    return r;
  }
  HeckeElement& operator+=(const HeckeElement& b) { *this = *this + b; return *this; }
  HeckeElement& operator-=(const HeckeElement& b) { *this = *this - b; return *this; }

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      std::string coeff = coeff_prefix(c);
      std::string term;
      bool neg = false;
      if (coeff == "-") {
        neg = true;
        coeff.clear();
      } else if (!coeff.empty() && coeff[0] == '-' && coeff[1] != '(') {
        neg = true;
        coeff = coeff.substr(1);
      }
      term = coeff + "T[" + word_str(canonical_reduced_word(w)) + "]";
      if (out.empty())
        out = (neg ? "-" : "") + term;
      else
        out += (neg ? " - " : " + ") + term;
    }
    return out;
  }

 private:
  static std::string coeff_prefix(const RatFunc& f) {
    if (f == RatFunc(1)) return "";
    if (f == RatFunc(-1)) return "-";
    bool monomial = f.is_polynomial() && f.num().coeffs().size() == 1;
    std::string s = f.str();
    return monomial ? s + "*" : "(" + s + ")*";
  }
  static std::string coeff_prefix(const Rational& r) {
    if (r == 1) return "";
    if (r == -1) return "-";
    return to_string(r) + "*";
  }

  int n_;
  std::map<Permutation, F> terms_;
};

using SymElement = HeckeElement<RatFunc>;
using NumElement = HeckeElement<Rational>;

template <class F>
HeckeElement<F> promote(const HeckeElement<F>& a, int n) {
  HeckeElement<F> r(n);
  for (const auto& [w, c] : a.terms()) r.add_term(promote(w, n), c);
  return r;
}

// ---------------------------------------------------------------------------
// Product kernels.

namespace detail {

// Integer Laurent polynomial; empty coefficient vector means zero.
struct ZP {
  int lo = 0;
  IntVec c;
  bool zero() const { return c.empty(); }
  void trim() {
    size_t b = 0, e = c.size();
    while (e > b && c[e - 1] == 0) --e;
    while (b < e && c[b] == 0) ++b;
    if (b == e) { c.clear(); lo = 0; return; }
    if (b > 0 || e < c.size()) {
      c = IntVec(c.begin() + long(b), c.begin() + long(e));
      lo += int(b);
    }
  }
};

inline void zp_add_inplace(ZP& a, const ZP& b) {
  if (b.zero()) return;
  if (a.zero()) { a = b; return; }
  int lo = std::min(a.lo, b.lo);
  int hi = std::max(a.lo + int(a.c.size()), b.lo + int(b.c.size()));
  if (lo < a.lo || hi > a.lo + int(a.c.size())) {
    IntVec nc(size_t(hi - lo), BigInt(0));
    for (size_t i = 0; i < a.c.size(); ++i) nc[size_t(a.lo - lo) + i] = std::move(a.c[i]);
    a.c = std::move(nc);
    a.lo = lo;
  }
  for (size_t i = 0; i < b.c.size(); ++i) a.c[size_t(b.lo - a.lo) + i] += b.c[i];
  a.trim();
}

inline ZP zp_mul(const ZP& a, const ZP& b) {
  if (a.zero() || b.zero()) return {};
  ZP r;
  r.lo = a.lo + b.lo;
  r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

// a * (q - q^-1)
inline ZP zp_delta(const ZP& a) {
  if (a.zero()) return {};
  ZP r;
  r.lo = a.lo - 1;
  r.c.assign(a.c.size() + 2, BigInt(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    r.c[i + 2] += a.c[i];
    r.c[i] -= a.c[i];
  }
  r.trim();
  return r;
}

// Symbolic field, cleared: element = scale * (1/den) * sum_w terms[w] T_w.
struct ClearedSym {
  Rational scale;
  IntVec den;  // ordinary primitive polynomial, positive leading coefficient
  std::map<Permutation, ZP> terms;
};

inline ClearedSym clear_element(const HeckeElement<RatFunc>& a) {
  ClearedSym out;
  out.scale = 1;
  out.den = {BigInt(1)};
  struct Part {
    const Permutation* w;
    PrimitiveParts num, den;
  };
  std::vector<Part> parts;
  parts.reserve(a.terms().size());
  for (const auto& [w, f] : a.terms()) {
    parts.push_back({&w, primitive_parts(f.num()), primitive_parts(f.den())});
    IntVec g = ivec_gcd(out.den, parts.back().den.prim);
    out.den = zp_mul(ZP{0, out.den}, ZP{0, ivec_divexact_poly(parts.back().den.prim, g)}).c;
  }
  BigInt mu = 1;
  for (const Part& p : parts)
    mu = lcm(mu, denominator(Rational(p.num.content / p.den.content)));
  for (const Part& p : parts) {
    Rational s = Rational(p.num.content / p.den.content) * mu;
    ZP z{p.num.lo, ivec_divexact_poly(out.den, p.den.prim)};
    z = zp_mul(z, ZP{0, p.num.prim});
    BigInt si = numerator(s);
    for (auto& x : z.c) x *= si;
    out.terms.emplace(*p.w, std::move(z));
  }
  out.scale = Rational(1, mu);
  return out;
}

template <class TermMap>
void push_generator(TermMap& cur, int i) {
  TermMap next;
  for (auto& [w, p] : cur) {
    Permutation ws = w.right_mul_s(i);
    if (w.ascent_at(i)) {
      zp_add_inplace(next[ws], p);
    } else {
      zp_add_inplace(next[ws], p);
      zp_add_inplace(next[w], zp_delta(p));
    }
  }
  cur = std::move(next);
}

inline HeckeElement<RatFunc> multiply_sym(const HeckeElement<RatFunc>& a,
                                          const HeckeElement<RatFunc>& b) {
  const int n = a.n();
  HeckeElement<RatFunc> out(n);
  if (a.is_zero() || b.is_zero()) return out;
  ClearedSym ca = clear_element(a), cb = clear_element(b);
  std::map<Permutation, ZP> acc;
  for (const auto& [v, mv] : cb.terms) {
    std::vector<int> word = canonical_reduced_word(v);
    std::map<Permutation, ZP> cur = ca.terms;
    for (int i : word) push_generator(cur, i);
    for (auto& [w, p] : cur) {
      if (p.zero()) continue;
      zp_add_inplace(acc[w], zp_mul(p, mv));
    }
  }
  Rational scale = ca.scale * cb.scale;
  LaurentPoly den = laurent_from_ivec(zp_mul(ZP{0, ca.den}, ZP{0, cb.den}).c, 0, 1);
  for (const auto& [w, p] : acc) {
    if (p.zero()) continue;
    RatFunc f = RatFunc::fraction(laurent_from_ivec(p.c, p.lo, scale), den);
    if (!f.is_zero()) out.add_term(w, f);
  }
  return out;
}

// Evaluated field, cleared to integers over the base B = num(q0)*den(q0):
// after k push steps every coefficient carries implicit denominator B^k.
inline HeckeElement<Rational> multiply_num(const Rational& q0,
                                           const HeckeElement<Rational>& a,
                                           const HeckeElement<Rational>& b) {
  const int n = a.n();
  HeckeElement<Rational> out(n);
  if (a.is_zero() || b.is_zero()) return out;
  const BigInt p = numerator(q0), r = denominator(q0);
  const BigInt B = p * r, D = p * p - r * r;  // delta = D / B

  auto clear_num = [](const HeckeElement<Rational>& x, std::map<Permutation, BigInt>& terms) {
    BigInt mu = 1;
    for (const auto& [w, c] : x.terms()) mu = lcm(mu, denominator(c));
    for (const auto& [w, c] : x.terms()) terms[w] = numerator(c) * (mu / denominator(c));
    return mu;
  };
  std::map<Permutation, BigInt> ta, tb;
  BigInt mu_a = clear_num(a, ta), mu_b = clear_num(b, tb);

  std::map<Permutation, BigInt> acc;
  int kmax = 0;
  for (const auto& [v, mv] : tb) {
    std::vector<int> word = canonical_reduced_word(v);
    std::map<Permutation, BigInt> cur = ta;
    for (int i : word) {
      std::map<Permutation, BigInt> next;
      for (auto& [w, c] : cur) {
        Permutation ws = w.right_mul_s(i);
        if (w.ascent_at(i)) {
          next[ws] += c * B;
        } else {
          next[ws] += c * B;
          next[w] += c * D;
        }
      }
      cur = std::move(next);
    }
    int k = int(word.size());
    if (k > kmax) {
      // re-align earlier contributions to the new maximal power
      BigInt f = 1;
      for (int t = kmax; t < k; ++t) f *= B;
      for (auto& [w, c] : acc) c *= f;
      kmax = k;
    }
    BigInt align = 1;
    for (int t = k; t < kmax; ++t) align *= B;
    for (auto& [w, c] : cur)
      if (c != 0) acc[w] += c * mv * align;
  }
  BigInt denom = mu_a * mu_b;
  for (int t = 0; t < kmax; ++t) denom *= B;
  for (const auto& [w, c] : acc)
    if (c != 0) out.add_term(w, make_rational(c, denom));
  return out;
}

}  // namespace detail

template <class Ctx>
HeckeElement<typename Ctx::Field> multiply(const Ctx& ctx,
                                           const HeckeElement<typename Ctx::Field>& a,
                                           const HeckeElement<typename Ctx::Field>& b) {
  if (a.n() != b.n()) throw std::invalid_argument("multiply: rank mismatch");
  if constexpr (std::is_same_v<typename Ctx::Field, RatFunc>) {
    (void)ctx;
    return detail::multiply_sym(a, b);
  } else {
    return detail::multiply_num(ctx.q0, a, b);
  }
}

// ---------------------------------------------------------------------------
// Distinguished elements.

template <class Ctx>
HeckeElement<typename Ctx::Field> generator(const Ctx&, int i, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator: index out of range");
  return HeckeElement<typename Ctx::Field>::basis(Permutation(n).right_mul_s(i));
}

/// sigma_i^-1 = sigma_i - (q - q^-1).
template <class Ctx>
HeckeElement<typename Ctx::Field> inverse_generator(const Ctx& ctx, int i, int n) {
  auto r = generator(ctx, i, n);
  r.add_term(Permutation(n), -ctx.delta());
  return r;
}

enum class JmForm { Sum, Recursive };

/// Jucys-Murphy element y_i in H_n; y_1 = 1.
/// Sum form: 1 + (q - q^-1) * sum_{k<i} T_{(k i)}. Recursive: sigma_{i-1} y_{i-1} sigma_{i-1}.
template <class Ctx>
HeckeElement<typename Ctx::Field> jucys_murphy(const Ctx& ctx, int i, int n,
                                               JmForm form = JmForm::Sum) {
  using E = HeckeElement<typename Ctx::Field>;
  if (i < 1 || i > n) throw std::invalid_argument("jucys_murphy: index out of range");
  if (form == JmForm::Sum) {
    E r = E::unit(n);
    for (int k = 1; k < i; ++k)
      r.add_term(Permutation::transposition(n, k, i), ctx.delta());
    return r;
  }
  E y = E::unit(n);
  for (int k = 2; k <= i; ++k) {
    auto s = generator(ctx, k - 1, n);
    y = multiply(ctx, multiply(ctx, s, y), s);
  }
  return y;
}

/// Shuffle factor f_{1->m}: f_{1->1} = 1, f_{1->k+1} = 1 + f_{1->k} sigma_k.
template <class Ctx>
HeckeElement<typename Ctx::Field> shuffle_factor(const Ctx& ctx, int m, int n) {
  using E = HeckeElement<typename Ctx::Field>;
  if (m < 1 || m > n) throw std::invalid_argument("shuffle_factor: index out of range");
  E f = E::unit(n);
  for (int k = 1; k < m; ++k)
    f = E::unit(n) + multiply(ctx, f, generator(ctx, k, n));
  return f;
}

/// Total shuffle Sigma_{1->m} = f_{1->m} f_{1->m-1} ... f_{1->1}; for m = n it
/// is the sum of all basis words with unit coefficients.
template <class Ctx>
HeckeElement<typename Ctx::Field> shuffle_sum(const Ctx& ctx, int m, int n) {
  auto s = shuffle_factor(ctx, m, n);
  for (int k = m - 1; k >= 1; --k) s = multiply(ctx, s, shuffle_factor(ctx, k, n));
  return s;
}

/// Intertwiner U_{m+1} = sigma_m y_m - y_m sigma_m (no rescaling).
template <class Ctx>
HeckeElement<typename Ctx::Field> intertwiner(const Ctx& ctx, int m, int n) {
  if (m < 1 || m >= n) throw std::invalid_argument("intertwiner: index out of range");
  auto s = generator(ctx, m, n);
  auto y = jucys_murphy(ctx, m, n);
  return multiply(ctx, s, y) - multiply(ctx, y, s);
}

template <class Ctx>
HeckeElement<typename Ctx::Field> commutator(const Ctx& ctx,
                                             const HeckeElement<typename Ctx::Field>& a,
                                             const HeckeElement<typename Ctx::Field>& b) {
  return multiply(ctx, a, b) - multiply(ctx, b, a);
}

}  // namespace hecke
