#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "hecke/seminormal.hpp"

using hecke::EvaluatedCtx;
using hecke::HeckeElement;
using hecke::Matrix;
using hecke::Rational;
using hecke::RatFunc;
using hecke::SeminormalRep;
using hecke::StandardTableau;
using hecke::SymbolicCtx;
using hecke::TraceContext;
using hecke::YoungDiagram;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }

struct Rng {
  std::mt19937 gen{20250822};
  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
};

template <class Ctx>
HeckeElement<typename Ctx::Field> random_element(const Ctx& ctx, Rng& rng, int n,
                                                 int terms) {
  using F = typename Ctx::Field;
  HeckeElement<F> x(n);
  auto perms = hecke::all_permutations(n);
  for (int t = 0; t < terms; ++t) {
    const auto& w = perms[size_t(rng.range(0, int(perms.size()) - 1))];
    F c = ctx.from_rational(rat(rng.range(-4, 4), rng.range(1, 3))) *
          ctx.q_power(rng.range(-2, 2));
    x.add_term(w, c);
  }
  return x;
}

}  // namespace

TEST_CASE("one dimensional representations", "[seminormal]") {
  SymbolicCtx S;
  for (int n = 2; n <= 4; ++n) {
    SeminormalRep<SymbolicCtx> row(S, YoungDiagram({n}));
    SeminormalRep<SymbolicCtx> col(S, YoungDiagram(std::vector<int>(size_t(n), 1)));
    REQUIRE(row.dim() == 1);
    REQUIRE(col.dim() == 1);
    for (int i = 1; i <= n - 1; ++i) {
      CHECK(row.gen_matrix(i)(0, 0) == S.q_power(1));
      CHECK(col.gen_matrix(i)(0, 0) == -S.q_power(-1));
    }
  }

  SeminormalRep<SymbolicCtx> box(S, YoungDiagram({1}));
  CHECK(box.dim() == 1);
  CHECK(box.n() == 1);
  CHECK_THROWS_AS(box.gen_matrix(1), std::invalid_argument);
  CHECK(represent(S, box, HeckeElement<RatFunc>::unit(1)) == Matrix<RatFunc>::identity(1));
}

TEST_CASE("hook shape block entries", "[seminormal]") {
  SymbolicCtx S;
  SeminormalRep<SymbolicCtx> rep(S, YoungDiagram({2, 1}));
  REQUIRE(rep.dim() == 2);

  // ascending content-string order puts the column tableau first
  CHECK(rep.basis()[0].rows() == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(rep.basis()[1].rows() == std::vector<std::vector<int>>{{1, 2}, {3}});

  const auto& s1 = rep.gen_matrix(1);
  CHECK(s1(0, 0) == -S.q_power(-1));
  CHECK(s1(1, 1) == S.q_power(1));
  CHECK(s1(0, 1) == RatFunc(0));
  CHECK(s1(1, 0) == RatFunc(0));

  // the swapped pair carries the two-by-two block; first member has contents
  // a_2 = q^-2, a_3 = q^2
  RatFunc qi2(hecke::quantum_int(2));
  const auto& s2 = rep.gen_matrix(2);
  CHECK(s2(0, 0) == hecke::q_power_rf(2) / qi2);
  CHECK(s2(1, 1) == -hecke::q_power_rf(-2) / qi2);
  CHECK(s2(1, 0) == RatFunc(1));
  CHECK(s2(0, 1) == RatFunc(1) - RatFunc(1) / (qi2 * qi2));

  // trace and determinant of any generator block: q - q^-1 and -1
  CHECK(s2(0, 0) + s2(1, 1) == S.delta());
  CHECK(s2(0, 0) * s2(1, 1) - s2(0, 1) * s2(1, 0) == -RatFunc(1));
}

TEST_CASE("defining relations in every representation", "[seminormal]") {
  SymbolicCtx S;
  for (int n = 1; n <= 5; ++n)
    for (const YoungDiagram& shape : hecke::partitions(n)) {
      SeminormalRep<SymbolicCtx> rep(S, shape);
      CHECK(relations_check(S, rep));
      CHECK(jm_agreement_check(S, rep));
    }

  EvaluatedCtx E(rat(7, 5));
  for (const char* name : {"(3,2)", "(2,2,1)"}) {
    SeminormalRep<EvaluatedCtx> rep(E, YoungDiagram::parse(name));
    CHECK(relations_check(E, rep));
    CHECK(jm_agreement_check(E, rep));
  }
}

TEST_CASE("commuting generator matrices", "[seminormal]") {
  SymbolicCtx S;
  SeminormalRep<SymbolicCtx> rep(S, YoungDiagram({2, 1}));
  CHECK(jm_matrix(S, rep, 1) == Matrix<RatFunc>::identity(2));
  CHECK(jm_matrix(S, rep, 2) ==
        Matrix<RatFunc>::diagonal({hecke::q_power_rf(-2), hecke::q_power_rf(2)}));
  CHECK(jm_matrix(S, rep, 3) ==
        Matrix<RatFunc>::diagonal({hecke::q_power_rf(2), hecke::q_power_rf(-2)}));
  CHECK_THROWS_AS(jm_matrix(S, rep, 4), std::invalid_argument);
}

TEST_CASE("dimension audit", "[seminormal]") {
  for (int n = 1; n <= 8; ++n) CHECK(hecke::rep_dimension_audit(n));

  SymbolicCtx S;
  CHECK(SeminormalRep<SymbolicCtx>(S, YoungDiagram({2, 2})).dim() == 2);
  CHECK(SeminormalRep<SymbolicCtx>(S, YoungDiagram({3, 1})).dim() == 3);
  CHECK(SeminormalRep<SymbolicCtx>(S, YoungDiagram({3, 2, 1})).dim() == 16);
}

TEST_CASE("similarity transformation onto the diagonal blocks", "[seminormal]") {
  SymbolicCtx S;

  // both members of the hook pair describe the same block
  for (const StandardTableau& tab : hecke::enumerate_standard(YoungDiagram({2, 1})))
    CHECK(hecke::similarity_check(S, YoungDiagram({2, 1}), 2, tab));

  int pairs = 0;
  for (int n = 3; n <= 4; ++n)
    for (const YoungDiagram& shape : hecke::partitions(n))
      for (const StandardTableau& tab : hecke::enumerate_standard(shape)) {
        auto s = hecke::content_string(tab);
        for (int i = 1; i <= n - 1; ++i) {
          int gap = s[size_t(i)] - s[size_t(i - 1)];
          if (gap == 1 || gap == -1) continue;
          CHECK(hecke::similarity_check(S, shape, i, tab));
          ++pairs;
        }
      }
  CHECK(pairs == 12);

  CHECK_THROWS_AS(
      hecke::similarity_check(S, YoungDiagram({2}), 1,
                              StandardTableau(YoungDiagram({2}), {{1, 2}})),
      std::invalid_argument);
}

TEST_CASE("idempotent images are matrix units", "[seminormal]") {
  SymbolicCtx S;

  SeminormalRep<SymbolicCtx> hook(S, YoungDiagram({2, 1}));
  for (const auto& rec : hecke::resolution(S, 3)) {
    auto img = represent(S, hook, rec.element);
    if (rec.tableau.shape() == YoungDiagram({2, 1})) {
      Matrix<RatFunc> unit(2, 2);
      int b = rec.eigenvalues == hecke::ContentString{0, -1, 1} ? 0 : 1;
      unit(b, b) = RatFunc(1);
      CHECK(img == unit);
    } else {
      CHECK(img.is_zero());
    }
  }

  for (int n = 2; n <= 4; ++n) CHECK(hecke::idempotent_matrix_units_check(S, n));
}

TEST_CASE("trace decomposition over shapes", "[seminormal]") {
  SymbolicCtx S;
  Rng rng;
  for (int d : {1, 2}) {
    TraceContext<SymbolicCtx> tr(S, d);
    CHECK(hecke::trace_decomposition_check(tr, HeckeElement<RatFunc>::unit(3)));
    for (int instance = 0; instance < 4; ++instance)
      CHECK(hecke::trace_decomposition_check(tr, random_element(S, rng, 3, 5)));
  }
  TraceContext<SymbolicCtx> tr4(S, 2);
  CHECK(hecke::trace_decomposition_check(tr4, random_element(S, rng, 4, 6)));

  EvaluatedCtx E(rat(5, 3));
  TraceContext<EvaluatedCtx> te(E, 2);
  for (int instance = 0; instance < 2; ++instance)
    CHECK(hecke::trace_decomposition_check(te, random_element(E, rng, 3, 5)));
}

TEST_CASE("resolvent identities in the representation", "[seminormal]") {
  SymbolicCtx S;
  std::vector<Rational> samples{rat(2), rat(3), rat(5), rat(7), rat(11)};

  TraceContext<SymbolicCtx> tr(S, 2);
  CHECK(hecke::resolvent_identities_check(tr, YoungDiagram({2}), 1, samples));
  for (int m : {1, 2})
    CHECK(hecke::resolvent_identities_check(tr, YoungDiagram({2, 1}), m, samples));
  for (int m : {1, 3})
    CHECK(hecke::resolvent_identities_check(tr, YoungDiagram({2, 2}), m, samples));

  TraceContext<SymbolicCtx> tr1(S, 1);
  CHECK(hecke::resolvent_identities_check(tr1, YoungDiagram({2, 1}), 2, samples));

  // t = 1 collides with the trivial eigenvalue of y_1
  CHECK_THROWS_AS(hecke::resolvent_identities_check(tr, YoungDiagram({2}), 1, {rat(1)}),
                  std::domain_error);
  CHECK_THROWS_AS(hecke::resolvent_identities_check(tr, YoungDiagram({2}), 2, samples),
                  std::invalid_argument);
}
