#pragma once

// Irreducible matrix representations on the basis of standard tableaux. Each
// generator acts through rigid diagonal entries (neighbouring entries in the
// same row or column) and two-by-two blocks on tableau pairs swapped by the
// generator; the commuting generators y_i come out diagonal with the content
// eigenvalues, which is what makes resolvents trivial here.

#include <map>
#include <stdexcept>
#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/trace.hpp"

namespace hecke {

template <class Ctx>
class SeminormalRep {
 public:
  using F = typename Ctx::Field;

  SeminormalRep(const Ctx& ctx, const YoungDiagram& shape)
      : shape_(shape), basis_(enumerate_standard(shape)) {
    const int n = shape_.size();
    if (n < 1) throw std::invalid_argument("SeminormalRep: shape must be non-empty");
    std::vector<ContentString> strings;
    std::map<ContentString, int> index;
    for (int b = 0; b < dim(); ++b) {
      strings.push_back(content_string(basis_[size_t(b)]));
      index[strings.back()] = b;
    }
    for (int i = 1; i <= n - 1; ++i) {
      Matrix<F> m(dim(), dim());
      for (int b = 0; b < dim(); ++b) {
        const ContentString& s = strings[size_t(b)];
        const int mi = s[size_t(i - 1)], mi1 = s[size_t(i)];
        if (mi1 == mi + 1) {  // same row
          m(b, b) = ctx.q_power(1);
        } else if (mi1 == mi - 1) {  // same column
          m(b, b) = -ctx.q_power(-1);
        } else {
          ContentString swapped = s;
          std::swap(swapped[size_t(i - 1)], swapped[size_t(i)]);
          const int b2 = index.at(swapped);
          if (b2 < b) continue;  // the block is written from its first member
          // basis order is ascending in the content string, so b carries the
          // lexicographically smaller string of the pair
          F ai = ctx.q_power(2 * mi), ai1 = ctx.q_power(2 * mi1);
          F c = ctx.delta() * ai1 / (ai - ai1);
          F c2 = ctx.delta() * ai / (ai - ai1);
          m(b, b) = -c;
          m(b2, b) = F(1);
          m(b, b2) = F(1) - c * c2;
          m(b2, b2) = c2;
        }
      }
      gens_.push_back(std::move(m));
    }
  }

  const YoungDiagram& shape() const { return shape_; }
  const std::vector<StandardTableau>& basis() const { return basis_; }
  int dim() const { return int(basis_.size()); }
  int n() const { return shape_.size(); }

  /// Matrix of the generator with 1-based index i.
  const Matrix<F>& gen_matrix(int i) const {
    if (i < 1 || i > n() - 1)
      throw std::invalid_argument("SeminormalRep: generator index out of range");
    return gens_[size_t(i - 1)];
  }

 private:
  YoungDiagram shape_;
  std::vector<StandardTableau> basis_;
  std::vector<Matrix<F>> gens_;
};

template <class Ctx>
SeminormalRep<Ctx> build_rep(const Ctx& ctx, const YoungDiagram& shape) {
  return SeminormalRep<Ctx>(ctx, shape);
}

/// Diagonal matrix of y_i: the content eigenvalue q^{2 m_i} at each tableau.
template <class Ctx>
Matrix<typename Ctx::Field> jm_matrix(const Ctx& ctx, const SeminormalRep<Ctx>& rep,
                                      int i) {
  using F = typename Ctx::Field;
  if (i < 1 || i > rep.n()) throw std::invalid_argument("jm_matrix: index out of range");
  std::vector<F> diag;
  for (const StandardTableau& t : rep.basis())
    diag.push_back(ctx.q_power(2 * t.content_exponent(i)));
  return Matrix<F>::diagonal(diag);
}

/// The same element through the word product s_{i-1}..s_1 s_1..s_{i-1}.
template <class Ctx>
Matrix<typename Ctx::Field> jm_matrix_word(const Ctx&, const SeminormalRep<Ctx>& rep,
                                           int i) {
  using F = typename Ctx::Field;
  if (i < 1 || i > rep.n()) throw std::invalid_argument("jm_matrix_word: index out of range");
  auto m = Matrix<F>::identity(rep.dim());
  for (int k = i - 1; k >= 1; --k) m = m * rep.gen_matrix(k);
  for (int k = 1; k <= i - 1; ++k) m = m * rep.gen_matrix(k);
  return m;
}

/// Image of an algebra element: sum of coefficients times products of
/// generator matrices along canonical reduced words.
template <class Ctx>
Matrix<typename Ctx::Field> represent(const Ctx&, const SeminormalRep<Ctx>& rep,
                                      const HeckeElement<typename Ctx::Field>& x) {
  using F = typename Ctx::Field;
  if (x.n() != rep.n()) throw std::invalid_argument("represent: rank mismatch");
  Matrix<F> out(rep.dim(), rep.dim());
  for (const auto& [w, c] : x.terms()) {
    auto m = Matrix<F>::identity(rep.dim());
    for (int i : canonical_reduced_word(w)) m = m * rep.gen_matrix(i);
    out = out + c * m;
  }
  return out;
}

/// Defining relations hold in the representation: quadratic, braid, and far
/// commutation.
template <class Ctx>
bool relations_check(const Ctx& ctx, const SeminormalRep<Ctx>& rep) {
  using F = typename Ctx::Field;
  const int n = rep.n();
  auto I = Matrix<F>::identity(rep.dim());
  for (int i = 1; i <= n - 1; ++i) {
    const auto& s = rep.gen_matrix(i);
    if (!(s * s == I + ctx.delta() * s)) return false;
    for (int j = i + 1; j <= n - 1; ++j) {
      const auto& u = rep.gen_matrix(j);
      if (j == i + 1) {
        if (!(s * u * s == u * s * u)) return false;
      } else {
        if (!(s * u == u * s)) return false;
      }
    }
  }
  return true;
}

/// Both constructions of every y_i agree.
template <class Ctx>
bool jm_agreement_check(const Ctx& ctx, const SeminormalRep<Ctx>& rep) {
  for (int i = 1; i <= rep.n(); ++i)
    if (!(jm_matrix(ctx, rep, i) == jm_matrix_word(ctx, rep, i))) return false;
  return true;
}

/// Counting audit: every irreducible block is as large as the tableau count
/// of its shape, and the squares sum to n factorial.
inline bool rep_dimension_audit(int n) {
  if (n < 1) throw std::invalid_argument("rep_dimension_audit: rank must be positive");
  BigInt total = 0, fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  for (const YoungDiagram& shape : partitions(n)) {
    BigInt d = BigInt(unsigned(enumerate_standard(shape).size()));
    if (d != frobenius_dim(shape)) return false;
    total += d * d;
  }
  return total == fact;
}

/// The triangular two-by-two forms of a swapped tableau pair, conjugated by
/// the explicit unitriangular V, reproduce the representation's block and
/// diagonalize both commuting generators.
template <class Ctx>
bool similarity_check(const Ctx& ctx, const YoungDiagram& shape, int i,
                      const StandardTableau& tab) {
  using F = typename Ctx::Field;
  if (i < 1 || i >= shape.size())
    throw std::invalid_argument("similarity_check: generator index out of range");
  ContentString s = content_string(tab);
  int mi = s[size_t(i - 1)], mi1 = s[size_t(i)];
  if (mi1 == mi + 1 || mi1 == mi - 1)
    throw std::invalid_argument("similarity_check: rigid pair, no block to compare");
  if (mi1 < mi) std::swap(mi, mi1);  // normalize to the block's first member

  F ai = ctx.q_power(2 * mi), ai1 = ctx.q_power(2 * mi1);
  F delta = ctx.delta();
  F c = delta * ai1 / (ai - ai1);

  Matrix<F> sig0(2, 2), yi0(2, 2), yi10(2, 2), v(2, 2), vinv(2, 2);
  sig0(0, 1) = F(1);
  sig0(1, 0) = F(1);
  sig0(1, 1) = delta;
  yi0(0, 0) = ai;
  yi0(0, 1) = -delta * ai1;
  yi0(1, 1) = ai1;
  yi10(0, 0) = ai1;
  yi10(0, 1) = delta * ai1;
  yi10(1, 1) = ai;
  v(0, 0) = v(1, 1) = vinv(0, 0) = vinv(1, 1) = F(1);
  v(0, 1) = c;
  vinv(0, 1) = -c;

  auto I = Matrix<F>::identity(2);
  if (!(v * vinv == I && vinv * v == I)) return false;
  if (!(vinv * yi0 * v == Matrix<F>::diagonal({ai, ai1}))) return false;
  if (!(vinv * yi10 * v == Matrix<F>::diagonal({ai1, ai}))) return false;

  // the conjugated generator must equal the block inside the actual rep
  SeminormalRep<Ctx> rep(ctx, shape);
  ContentString lo = s;
  if (lo[size_t(i - 1)] > lo[size_t(i)]) std::swap(lo[size_t(i - 1)], lo[size_t(i)]);
  ContentString hi = lo;
  std::swap(hi[size_t(i - 1)], hi[size_t(i)]);
  int b = -1, b2 = -1;
  for (int k = 0; k < rep.dim(); ++k) {
    if (content_string(rep.basis()[size_t(k)]) == lo) b = k;
    if (content_string(rep.basis()[size_t(k)]) == hi) b2 = k;
  }
  if (b < 0 || b2 < 0) return false;
  auto conj = vinv * sig0 * v;
  const auto& g = rep.gen_matrix(i);
  return conj(0, 0) == g(b, b) && conj(0, 1) == g(b, b2) && conj(1, 0) == g(b2, b) &&
         conj(1, 1) == g(b2, b2);
}

/// The image of every primitive idempotent of the same rank: the diagonal
/// matrix unit of its own tableau in its own shape's block, zero in every
/// other block.
template <class Ctx>
bool idempotent_matrix_units_check(const Ctx& ctx, int n, int symbolic_limit = 5) {
  using F = typename Ctx::Field;
  auto records = resolution(ctx, n, symbolic_limit);
  for (const YoungDiagram& shape : partitions(n)) {
    SeminormalRep<Ctx> rep(ctx, shape);
    std::map<ContentString, int> index;
    for (int b = 0; b < rep.dim(); ++b)
      index[content_string(rep.basis()[size_t(b)])] = b;
    for (const auto& rec : records) {
      auto img = represent(ctx, rep, rec.element);
      if (rec.tableau.shape() == shape) {
        Matrix<F> unit(rep.dim(), rep.dim());
        unit(index.at(rec.eigenvalues), index.at(rec.eigenvalues)) = F(1);
        if (!(img == unit)) return false;
      } else {
        if (!img.is_zero()) return false;
      }
    }
  }
  return true;
}

/// Spectral decomposition of the full trace: summed over shapes, the matrix
/// trace of the image weighted by the shape's q-dimension reproduces the
/// Ocneanu trace.
template <class Ctx>
bool trace_decomposition_check(const TraceContext<Ctx>& tr,
                               const HeckeElement<typename Ctx::Field>& x) {
  using F = typename Ctx::Field;
  F total(0);
  for (const YoungDiagram& shape : partitions(x.n())) {
    SeminormalRep<Ctx> rep(tr.ctx, shape);
    F qdim;
    if constexpr (std::is_same_v<F, RatFunc>)
      qdim = qdim_closed(tr.d, shape);
    else
      qdim = eval_at(qdim_closed(tr.d, shape), tr.ctx.q0);
    total = total + qdim * represent(tr.ctx, rep, x).trace();
  }
  return total == ocneanu_trace(tr, x);
}

namespace detail {

template <class F>
Matrix<F> diagonal_resolvent(const Matrix<F>& y, const F& t) {
  Matrix<F> r(y.rows(), y.cols());
  for (int i = 0; i < y.rows(); ++i) {
    F d = t - y(i, i);
    if (d == F(0))
      throw std::domain_error("diagonal_resolvent: t hits the spectrum, resample");
    r(i, i) = F(1) / d;
  }
  return r;
}

}  // namespace detail

/// Resolvent identities in the representation of the given shape, at each
/// rational sample t: the two sandwich identities for (t - y)^{-1} around
/// the generator, and the trace recurrence with Z built from the
/// conditional expectation and mapped through the representation.
template <class Ctx>
bool resolvent_identities_check(const TraceContext<Ctx>& tr, const YoungDiagram& shape,
                                int m, const std::vector<Rational>& t_samples) {
  using F = typename Ctx::Field;
  const Ctx& ctx = tr.ctx;
  const int n = shape.size();
  if (m < 1 || m + 1 > n)
    throw std::invalid_argument("resolvent_identities_check: generator index out of range");
  SeminormalRep<Ctx> rep(ctx, shape);
  auto I = Matrix<F>::identity(rep.dim());
  const auto& s = rep.gen_matrix(m);
  auto sinv = s - ctx.delta() * I;
  auto ym = jm_matrix(ctx, rep, m);
  auto ym1 = jm_matrix(ctx, rep, m + 1);

  for (const Rational& t : t_samples) {
    F tf = ctx.from_rational(t);
    auto rm = detail::diagonal_resolvent(ym, tf);
    auto rm1 = detail::diagonal_resolvent(ym1, tf);

    if (!(rm1 * sinv == sinv * rm + ctx.delta() * (ym * rm1 * rm))) return false;
    if (!(rm1 * s == sinv * rm + (ctx.delta() * tf) * (rm * rm1))) return false;

    auto zm1 = represent(ctx, rep, promote(resolvent_trace(tr, m + 1, t), n));
    auto zm = represent(ctx, rep, promote(resolvent_trace(tr, m, t), n));
    auto lhs = (tf * I - ctx.q_power(2) * ym) * (tf * I - ctx.q_power(-2) * ym) * rm * rm * zm1;
    auto rhs = zm + (ctx.delta() * (F(1) - ctx.delta() * tr.z)) * (ym * rm * rm);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace hecke
