#pragma once

// Primitive orthogonal idempotents of H_n built inductively from the
// Jucys-Murphy elements. A tableau's idempotent is the ordered product of
// linear factors (y_t - q^{2e}) / (q^{2e_j} - q^{2e}), one per competing
// addable corner along the tableau's growth path. Each record keeps that
// factor list, so any product x * e can be replayed factor by factor
// instead of multiplying two full elements; products of two idempotents
// also skip the factors of their common ancestor.

#include "hecke/element.hpp"
#include "hecke/tableaux.hpp"

namespace hecke {

struct Corner {
  int row = 0;
  int col = 0;
  int exponent = 0;  // y-eigenvalue q^(2*exponent) at this corner

  friend bool operator==(const Corner& a, const Corner& b) {
    return a.row == b.row && a.col == b.col && a.exponent == b.exponent;
  }
};

struct CornerData {
  std::vector<Corner> corners;  // top to bottom, exponents strictly decreasing
};

inline CornerData addable_corners(const YoungDiagram& shape) {
  CornerData cd;
  for (auto [r, c] : shape.addable_cells()) cd.corners.push_back({r, c, c - r});
  return cd;
}

template <class F>
struct ReplayFactor {
  int y_index = 0;  // multiply by (y_{y_index} - shift), then by scale
  F shift;
  F scale;
};

template <class Ctx>
struct IdempotentRecord {
  using F = typename Ctx::Field;
  StandardTableau tableau;
  ContentString eigenvalues;
  HeckeElement<F> element;  // rank == tableau.size()
  std::vector<ReplayFactor<F>> factors;  // from e = 1 in H_1; y indices ascending
};

namespace detail {

template <class Ctx>
HeckeElement<typename Ctx::Field> apply_factor(const Ctx& ctx,
                                               const HeckeElement<typename Ctx::Field>& x,
                                               const ReplayFactor<typename Ctx::Field>& f) {
  auto g = jucys_murphy(ctx, f.y_index, x.n());
  g.add_term(Permutation(x.n()), -f.shift);
  return f.scale * multiply(ctx, x, g);
}

}  // namespace detail

template <class Ctx>
IdempotentRecord<Ctx> initial_record(const Ctx&) {
  return {StandardTableau(YoungDiagram({1}), {{1}}),
          {0},
          HeckeElement<typename Ctx::Field>::unit(1),
          {}};
}

/// One branching step: multiply by the projector onto corner j (1-based
/// index into addable_corners of the record's shape).
template <class Ctx>
IdempotentRecord<Ctx> extend_idempotent(const Ctx& ctx, const IdempotentRecord<Ctx>& rec,
                                        int j) {
  using F = typename Ctx::Field;
  CornerData cd = addable_corners(rec.tableau.shape());
  if (j < 1 || j > int(cd.corners.size()))
    throw std::invalid_argument("extend_idempotent: no such corner");
  const Corner& target = cd.corners[size_t(j - 1)];
  const int m = rec.tableau.size();

  std::vector<std::vector<int>> rows = rec.tableau.rows();
  if (target.row > int(rows.size())) rows.emplace_back();
  rows[size_t(target.row - 1)].push_back(m + 1);

  IdempotentRecord<Ctx> out{
      StandardTableau(rec.tableau.shape().with_cell(target.row, target.col), rows),
      rec.eigenvalues,
      promote(rec.element, m + 1),
      rec.factors};
  out.eigenvalues.push_back(target.exponent);

  F mu = ctx.q_power(2 * target.exponent);
  for (const Corner& other : cd.corners) {
    if (other == target) continue;
    F shift = ctx.q_power(2 * other.exponent);
    F den = mu - shift;
    if (den == F(0))
      throw std::domain_error("extend_idempotent: coinciding eigenvalues, q not generic");
    ReplayFactor<F> f{m + 1, shift, F(1) / den};
    out.element = detail::apply_factor(ctx, out.element, f);
    out.factors.push_back(f);
  }
  return out;
}

/// Complete system of primitive orthogonal idempotents of H_n, one per
/// standard tableau, in ascending eigenvalue-string order. Symbolic
/// coefficients refuse ranks above symbolic_limit; evaluate q at sample
/// rationals to go higher.
template <class Ctx>
std::vector<IdempotentRecord<Ctx>> resolution(const Ctx& ctx, int n,
                                              int symbolic_limit = 5) {
  if (n < 1) throw std::invalid_argument("resolution: rank must be >= 1");
  if constexpr (std::is_same_v<typename Ctx::Field, RatFunc>) {
    if (n > symbolic_limit)
      throw std::invalid_argument(
          "resolution: rank " + std::to_string(n) + " above the symbolic limit " +
          std::to_string(symbolic_limit) +
          "; evaluate q at sample rationals for larger ranks");
  }
  std::vector<IdempotentRecord<Ctx>> level{initial_record(ctx)};
  for (int m = 1; m < n; ++m) {
    std::vector<IdempotentRecord<Ctx>> next;
    for (const auto& rec : level) {
      int corners = int(addable_corners(rec.tableau.shape()).corners.size());
      // ascending corner exponent keeps the output in string order
      for (int j = corners; j >= 1; --j)
        next.push_back(extend_idempotent(ctx, rec, j));
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) {
      return a.eigenvalues < b.eigenvalues;
    });
    level = std::move(next);
  }
  return level;
}

/// The single record of one tableau, rebuilt along its growth path. Cheaper
/// than a full resolution when only a few shapes are needed.
template <class Ctx>
IdempotentRecord<Ctx> record_for_tableau(const Ctx& ctx, const StandardTableau& tab) {
  IdempotentRecord<Ctx> rec = initial_record(ctx);
  for (int k = 2; k <= tab.size(); ++k) {
    auto [r, c] = tab.position(k);
    CornerData cd = addable_corners(rec.tableau.shape());
    int j = 0;
    for (size_t i = 0; i < cd.corners.size(); ++i)
      if (cd.corners[i].row == r && cd.corners[i].col == c) j = int(i) + 1;
    if (j == 0) throw std::logic_error("record_for_tableau: growth step is not a corner");
    rec = extend_idempotent(ctx, rec, j);
  }
  return rec;
}

/// x * e_rec, replayed factor by factor. Factors with y index at or below
/// from_rank are skipped; callers use that when x already absorbs the
/// common ancestor of the two idempotents.
template <class Ctx>
HeckeElement<typename Ctx::Field> replay_product(const Ctx& ctx,
                                                 HeckeElement<typename Ctx::Field> x,
                                                 const IdempotentRecord<Ctx>& rec,
                                                 int from_rank = 1) {
  if (x.n() < rec.tableau.size())
    throw std::invalid_argument("replay_product: rank too small");
  for (const auto& f : rec.factors)
    if (f.y_index > from_rank) x = detail::apply_factor(ctx, x, f);
  return x;
}

/// e_a * e_b. For distinct records the factors of the common ancestor
/// tableau collapse (e_a absorbs its own ancestors); for a == b every
/// factor is replayed, giving an honest idempotency computation.
template <class Ctx>
HeckeElement<typename Ctx::Field> idempotent_product(const Ctx& ctx,
                                                     const IdempotentRecord<Ctx>& a,
                                                     const IdempotentRecord<Ctx>& b) {
  size_t lcp = 0;
  while (lcp < a.eigenvalues.size() && lcp < b.eigenvalues.size() &&
         a.eigenvalues[lcp] == b.eigenvalues[lcp])
    ++lcp;
  int from_rank = a.eigenvalues == b.eigenvalues ? 1 : int(lcp);
  int n = std::max(a.tableau.size(), b.tableau.size());
  return replay_product(ctx, promote(a.element, n), b, from_rank);
}

/// e * prod over ALL addable corners of (y_{m+1} - q^{2e_r}); exactly zero.
template <class Ctx>
bool branching_annihilator_check(const Ctx& ctx, const IdempotentRecord<Ctx>& rec) {
  using F = typename Ctx::Field;
  const int m = rec.tableau.size();
  auto x = promote(rec.element, m + 1);
  for (const Corner& corner : addable_corners(rec.tableau.shape()).corners)
    x = detail::apply_factor(ctx, x,
                             ReplayFactor<F>{m + 1, ctx.q_power(2 * corner.exponent), F(1)});
  return x.is_zero();
}

/// The spectral projectors P_j = e * Pi_j of y_{m+1} on the left ideal of
/// e: P_j equals the corner-j child idempotent, and sum_j P_j recovers e.
template <class Ctx>
std::vector<std::pair<Corner, HeckeElement<typename Ctx::Field>>> spectral_projectors(
    const Ctx& ctx, const IdempotentRecord<Ctx>& rec) {
  std::vector<std::pair<Corner, HeckeElement<typename Ctx::Field>>> out;
  CornerData cd = addable_corners(rec.tableau.shape());
  for (int j = 1; j <= int(cd.corners.size()); ++j)
    out.push_back({cd.corners[size_t(j - 1)], extend_idempotent(ctx, rec, j).element});
  return out;
}

}  // namespace hecke
