#pragma once

// The Markov trace machinery: conditional expectations H_{m+1} -> H_m, their
// composition down to scalars (the Ocneanu trace), q-dimensions in closed and
// recursive form, and the resolvent identities behind the generating-function
// checks. The dimension parameter d is a fixed integer, so every scalar stays
// a single-variable rational function; the second variables tau and t are
// handled by truncated series and by exact sampling.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hecke/idempotents.hpp"
#include "hecke/series.hpp"

namespace hecke {

template <class Ctx>
struct TraceContext {
  using F = typename Ctx::Field;
  Ctx ctx;
  int d = 1;
  F z;  // Markov weight z_d = (1 - q^{-2d})/(q - q^{-1})

  TraceContext(const Ctx& c, int dim) : ctx(c), d(dim), z(c.markov(dim)) {}
};

/// One step of the trace tower. Basis words that fix the top point are scaled
/// by z_d and restricted; a word moving the top point factors as
/// T_u T_{s_m} T_v with u, v of lower rank, and the middle generator traces
/// to 1, leaving the product T_u T_v.
template <class Ctx>
HeckeElement<typename Ctx::Field> conditional_expectation(
    const TraceContext<Ctx>& tr, const HeckeElement<typename Ctx::Field>& x) {
  using F = typename Ctx::Field;
  const int n = x.n();
  if (n < 2)
    throw std::invalid_argument("conditional_expectation: rank must be at least 2");
  const int m = n - 1;
  HeckeElement<F> out(m);
  for (const auto& [w, c] : x.terms()) {
    CosetDecomposition dec = coset_decompose(w, m);
    if (!dec.k) {
      out.add_term(restrict_rank(w, m), c * tr.z);
      continue;
    }
    Permutation v(m);
    for (int i = m - 1; i >= *dec.k; --i) v = v.right_mul_s(i);
    out += multiply(tr.ctx, HeckeElement<F>::basis(restrict_rank(dec.u, m), c),
                    HeckeElement<F>::basis(v));
  }
  return out;
}

/// Full composition of the tower down to rank 1, ending with the scalar step
/// that sends the identity to z_d.
template <class Ctx>
typename Ctx::Field ocneanu_trace(const TraceContext<Ctx>& tr,
                                  const HeckeElement<typename Ctx::Field>& x) {
  auto cur = x;
  while (cur.n() > 1) cur = conditional_expectation(tr, cur);
  return cur.coeff(Permutation(1)) * tr.z;
}

namespace detail {

template <class Ctx>
typename Ctx::Field hook_product(const Ctx& ctx, const YoungDiagram& shape) {
  typename Ctx::Field r(1);
  for (const auto& row : hook_lengths(shape))
    for (int h : row) r = r * quantum_integer(ctx, h);
  return r;
}

}  // namespace detail

/// Closed product formula: qdim(shape) = q^{-d|shape|} * prod over cells of
/// [d + content] / [hook length].
inline RatFunc qdim_closed(int d, const YoungDiagram& shape) {
  SymbolicCtx ctx;
  RatFunc r = q_power_rf(-d * shape.size());
  for (int row = 1; row <= shape.row_count(); ++row)
    for (int col = 1; col <= shape.row(row); ++col)
      r = r * RatFunc(quantum_int(d + col - row));
  return r / detail::hook_product(ctx, shape);
}

/// Ocneanu trace of the primitive idempotent of every tableau of the given
/// shape. All of them agree, which is what makes the q-dimension a function
/// of the shape alone; disagreement would mean a broken invariant.
template <class Ctx>
typename Ctx::Field qdim_via_trace(const TraceContext<Ctx>& tr, const YoungDiagram& shape,
                                   int symbolic_limit = 5) {
  using F = typename Ctx::Field;
  if (shape.empty()) return F(1);
  if (std::is_same_v<F, RatFunc> && shape.size() > symbolic_limit)
    throw std::invalid_argument(
        "qdim_via_trace: shape size above the symbolic limit; evaluate q at "
        "sample rationals for larger ranks");
  std::vector<F> values;
  for (const StandardTableau& tab : enumerate_standard(shape))
    values.push_back(ocneanu_trace(tr, record_for_tableau(tr.ctx, tab).element));
  if (values.empty()) throw std::invalid_argument("qdim_via_trace: invalid shape");
  for (const F& v : values)
    if (!(v == values.front()))
      throw std::logic_error("qdim_via_trace: trace depends on the tableau");
  return values.front();
}

/// The branching factor that carries qdim(shape) to qdim(shape + corner j):
/// q^{-d} [corner content + d] * prod of old hooks / prod of new hooks.
template <class Ctx>
typename Ctx::Field qdim_branching_factor(const Ctx& ctx, const YoungDiagram& shape,
                                          const Corner& corner, int d) {
  using F = typename Ctx::Field;
  F f = ctx.q_power(-d) * quantum_integer(ctx, corner.exponent + d);
  return f * detail::hook_product(ctx, shape) /
         detail::hook_product(ctx, shape.with_cell(corner.row, corner.col));
}

/// Closed-form q-dimensions of shape and shape + corner j satisfy the
/// one-box recurrence exactly (j is a 1-based index into addable_corners).
inline bool qdim_recurrence_check(int d, const YoungDiagram& shape, int j) {
  SymbolicCtx ctx;
  CornerData cd = addable_corners(shape);
  if (j < 1 || j > int(cd.corners.size()))
    throw std::invalid_argument("qdim_recurrence_check: no such corner");
  const Corner& corner = cd.corners[size_t(j - 1)];
  RatFunc lhs = qdim_closed(d, shape.with_cell(corner.row, corner.col));
  RatFunc rhs = qdim_closed(d, shape) * qdim_branching_factor(ctx, shape, corner, d);
  return lhs == rhs;
}

/// Trace of one spectral projector: conditional_expectation(P_j) equals the
/// parent idempotent times the branching factor of corner j.
template <class Ctx>
bool projector_trace_check(const TraceContext<Ctx>& tr, const IdempotentRecord<Ctx>& rec,
                           int j) {
  CornerData cd = addable_corners(rec.tableau.shape());
  if (j < 1 || j > int(cd.corners.size()))
    throw std::invalid_argument("projector_trace_check: no such corner");
  const Corner& corner = cd.corners[size_t(j - 1)];
  auto traced = conditional_expectation(tr, extend_idempotent(tr.ctx, rec, j).element);
  auto expected =
      qdim_branching_factor(tr.ctx, rec.tableau.shape(), corner, tr.d) * rec.element;
  return traced == expected;
}

/// Order-by-order check of the generating identity on one idempotent:
/// 1 + (q - q^-1) Tr( y tau / (1 - y tau) ), expanded through the spectral
/// projectors of the record, against the product side
/// (1 - tau q^{-2d})/(1 - tau) * prod_k (1 - tau a_k)^2 /
/// ((1 - q^2 tau a_k)(1 - q^-2 tau a_k)) with a_k the record's eigenvalues.
template <class Ctx>
bool generating_identity_check(const TraceContext<Ctx>& tr, const IdempotentRecord<Ctx>& rec,
                               int order) {
  using F = typename Ctx::Field;
  if (order < 1) throw std::invalid_argument("generating_identity_check: order must be >= 1");
  const Ctx& ctx = tr.ctx;

  std::vector<int> mu_exp;  // eigenvalue of y_{n+1} on P_j is q^{mu_exp[j]}
  std::vector<HeckeElement<F>> traced;
  for (const auto& [corner, proj] : spectral_projectors(ctx, rec)) {
    mu_exp.push_back(2 * corner.exponent);
    traced.push_back(conditional_expectation(tr, proj));
  }

  TruncSeries<F> rhs = TruncSeries<F>::affine(order, F(1), -ctx.q_power(-2 * tr.d)) *
                       TruncSeries<F>::geometric(order, F(1));
  for (int m : rec.eigenvalues) {
    TruncSeries<F> box = TruncSeries<F>::affine(order, F(1), -ctx.q_power(2 * m));
    rhs = rhs * box * box * TruncSeries<F>::geometric(order, ctx.q_power(2 * m + 2)) *
          TruncSeries<F>::geometric(order, ctx.q_power(2 * m - 2));
  }

  for (int s = 0; s <= order; ++s) {
    HeckeElement<F> lhs(rec.element.n());
    if (s == 0) {
      lhs = rec.element;
    } else {
      for (size_t j = 0; j < traced.size(); ++j)
        lhs += (ctx.delta() * ctx.q_power(mu_exp[j] * s)) * traced[j];
    }
    if (!(lhs == rhs[s] * rec.element)) return false;
  }
  return true;
}

/// The rank-zero instance of the generating identity, where the trace side
/// collapses to 1 + (q - q^-1) z_d (tau + tau^2 + ...) and the product side
/// to (1 - tau q^{-2d})/(1 - tau).
template <class Ctx>
bool generating_identity_empty_check(const TraceContext<Ctx>& tr, int order) {
  using F = typename Ctx::Field;
  TruncSeries<F> lhs = TruncSeries<F>::constant(order, F(1));
  for (int s = 1; s <= order; ++s) lhs[s] = tr.ctx.delta() * tr.z;
  TruncSeries<F> rhs = TruncSeries<F>::affine(order, F(1), -tr.ctx.q_power(-2 * tr.d)) *
                       TruncSeries<F>::geometric(order, F(1));
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Resolvents of the commuting generators.

/// Distinct contents that the top entry of a rank-r standard tableau can
/// carry, in decreasing order. These exponents list the exact spectrum of
/// y_r: the eigenvalues are q^{2c}.
inline std::vector<int> jm_content_spectrum(int r) {
  if (r < 1) throw std::invalid_argument("jm_content_spectrum: rank must be positive");
  std::vector<int> out;
  for (const YoungDiagram& shape : partitions(r))
    for (const StandardTableau& tab : enumerate_standard(shape)) {
      int c = tab.content_exponent(r);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

/// Spectral projectors of y_r in H_r, keyed by content exponent. Lagrange
/// interpolation on the exact spectrum: pi_c = prod_{c' != c}
/// (y_r - q^{2c'})/(q^{2c} - q^{2c'}). They resolve the identity and satisfy
/// y_r pi_c = q^{2c} pi_c.
template <class Ctx>
std::vector<std::pair<int, HeckeElement<typename Ctx::Field>>> jm_spectral_projectors(
    const Ctx& ctx, int r) {
  using F = typename Ctx::Field;
  std::vector<std::pair<int, HeckeElement<F>>> out;
  auto y = jucys_murphy(ctx, r, r);
  const std::vector<int> spectrum = jm_content_spectrum(r);
  for (int c : spectrum) {
    HeckeElement<F> p = HeckeElement<F>::unit(r);
    for (int c2 : spectrum) {
      if (c2 == c) continue;
      auto factor = y;
      factor.add_term(Permutation(r), -ctx.q_power(2 * c2));
      p = (F(1) / (ctx.q_power(2 * c) - ctx.q_power(2 * c2))) * multiply(ctx, p, factor);
    }
    out.push_back({c, std::move(p)});
  }
  return out;
}

/// Exact inverse of (t - y_r) in H_r for a rational sample t, assembled from
/// the spectral projectors. Throws if t collides with an eigenvalue.
template <class Ctx>
HeckeElement<typename Ctx::Field> resolvent_element(const Ctx& ctx, int r,
                                                    const Rational& t) {
  using F = typename Ctx::Field;
  HeckeElement<F> out(r);
  for (const auto& [c, proj] : jm_spectral_projectors(ctx, r)) {
    F denom = ctx.from_rational(t) - ctx.q_power(2 * c);
    if (denom == F(0))
      throw std::domain_error("resolvent_element: t hits the spectrum, resample");
    out += (F(1) / denom) * proj;
  }
  return out;
}

/// Z_r = Tr_{d(r)}((t - y_r)^{-1}). For r = 1 the resolvent is the scalar
/// 1/(t - 1) and the trace step contributes z_d; the result is kept at rank 1.
template <class Ctx>
HeckeElement<typename Ctx::Field> resolvent_trace(const TraceContext<Ctx>& tr, int r,
                                                  const Rational& t) {
  using F = typename Ctx::Field;
  if (r == 1) {
    F denom = tr.ctx.from_rational(t) - F(1);
    if (denom == F(0))
      throw std::domain_error("resolvent_trace: t hits the spectrum, resample");
    return (tr.z / denom) * HeckeElement<F>::unit(1);
  }
  return conditional_expectation(tr, resolvent_element(tr.ctx, r, t));
}

/// Resolvent sandwich identities in H_{m+1} at a rational sample t:
///   (t - y_{m+1})^{-1} s_m^{-1} = s_m^{-1} (t - y_m)^{-1}
///                                 + (q - q^-1) y_m (t - y_{m+1})^{-1} (t - y_m)^{-1}
///   (t - y_{m+1})^{-1} s_m      = s_m^{-1} (t - y_m)^{-1}
///                                 + (q - q^-1) t (t - y_m)^{-1} (t - y_{m+1})^{-1}
template <class Ctx>
bool resolvent_sandwich_check(const Ctx& ctx, int m, const Rational& t) {
  using F = typename Ctx::Field;
  const int n = m + 1;
  auto s = generator(ctx, m, n);
  auto sinv = inverse_generator(ctx, m, n);
  auto y = promote(jucys_murphy(ctx, m, m), n);
  auto rm = promote(resolvent_element(ctx, m, t), n);
  auto rm1 = resolvent_element(ctx, n, t);

  auto common = multiply(ctx, sinv, rm);
  bool first = multiply(ctx, rm1, sinv) ==
               common + ctx.delta() * multiply(ctx, multiply(ctx, y, rm1), rm);
  bool second = multiply(ctx, rm1, s) ==
                common + (ctx.delta() * ctx.from_rational(t)) * multiply(ctx, rm, rm1);
  return first && second;
}

/// Trace recurrence for the resolvent, as an identity in H_m at a rational
/// sample t:
///   (t - q^2 y_m)(t - q^-2 y_m)(t - y_m)^{-2} Z_{m+1}
///     = Z_m + (q - q^-1)(1 - (q - q^-1) z_d) y_m (t - y_m)^{-2}.
template <class Ctx>
bool resolvent_recurrence_check(const TraceContext<Ctx>& tr, int m, const Rational& t) {
  using F = typename Ctx::Field;
  const Ctx& ctx = tr.ctx;
  auto y = jucys_murphy(ctx, m, m);
  auto rm = resolvent_element(ctx, m, t);
  auto zm1 = resolvent_trace(tr, m + 1, t);
  auto zm = promote(resolvent_trace(tr, m, t), m);

  auto up = y, down = y;
  up = -ctx.q_power(2) * up;
  up.add_term(Permutation(m), ctx.from_rational(t));
  down = -ctx.q_power(-2) * down;
  down.add_term(Permutation(m), ctx.from_rational(t));

  auto rm2 = multiply(ctx, rm, rm);
  auto lhs = multiply(ctx, multiply(ctx, multiply(ctx, up, down), rm2), zm1);
  auto rhs = zm + (ctx.delta() * (F(1) - ctx.delta() * tr.z)) * multiply(ctx, y, rm2);
  return lhs == rhs;
}

}  // namespace hecke
