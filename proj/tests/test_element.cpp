#include <catch2/catch_amalgamated.hpp>

#include "hecke/element.hpp"

#include <random>

using namespace hecke;

namespace {

const SymbolicCtx SYM;

struct Rng {
  std::mt19937 gen{20250818};
  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen);
  }
  Rational rational() {
    int num = uniform(-6, 6);
    int den = uniform(1, 4);
    return Rational(num, den);
  }
  LaurentPoly poly() {
    LaurentPoly p;
    int terms = uniform(1, 3);
    for (int t = 0; t < terms; ++t)
      p += LaurentPoly::monomial(rational(), uniform(-3, 3));
    if (p == LaurentPoly(0)) p = LaurentPoly(1);
    return p;
  }
  Permutation perm(int n) {
    auto img = std::vector<int>(size_t(n));
    for (int i = 0; i < n; ++i) img[size_t(i)] = i + 1;
    std::shuffle(img.begin(), img.end(), gen);
    return Permutation::from_one_line(img);
  }
  SymElement sym_element(int n, int terms) {
    SymElement e(n);
    for (int t = 0; t < terms; ++t) e.add_term(perm(n), RatFunc(poly()));
    return e;
  }
  NumElement num_element(int n, int terms) {
    NumElement e(n);
    for (int t = 0; t < terms; ++t) {
      Rational c = rational();
      if (c == 0) c = 1;
      e.add_term(perm(n), c);
    }
    return e;
  }
};

SymElement sigma(int i, int n) { return generator(SYM, i, n); }

SymElement prod(const SymElement& a, const SymElement& b) {
  return multiply(SYM, a, b);
}

}  // namespace

TEST_CASE("defining relations of the generators") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      SymElement s = sigma(i, n);
      SymElement expect = SymElement::unit(n) + RatFunc(delta_poly()) * s;
      REQUIRE(prod(s, s) == expect);

      SymElement sinv = inverse_generator(SYM, i, n);
      REQUIRE(prod(s, sinv) == SymElement::unit(n));
      REQUIRE(prod(sinv, s) == SymElement::unit(n));
      REQUIRE(sinv == s - RatFunc(delta_poly()) * SymElement::unit(n));
    }
    for (int i = 1; i + 1 < n; ++i) {
      SymElement a = sigma(i, n), b = sigma(i + 1, n);
      REQUIRE(prod(prod(a, b), a) == prod(prod(b, a), b));
    }
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j) {
        SymElement a = sigma(i, n), b = sigma(j, n);
        REQUIRE(prod(a, b) == prod(b, a));
      }
  }
  REQUIRE_THROWS_AS(generator(SYM, 0, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(generator(SYM, 3, 3), std::invalid_argument);
}

TEST_CASE("basis word products") {
  // A product along a reduced word stays a single basis term.
  Rng rng;
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.uniform(2, 5);
    Permutation w = rng.perm(n);
    std::vector<int> word = canonical_reduced_word(w);
    size_t cut = size_t(rng.uniform(0, int(word.size())));
    Permutation u = Permutation::from_word(n, {word.begin(), word.begin() + long(cut)});
    Permutation v = Permutation::from_word(n, {word.begin() + long(cut), word.end()});
    SymElement p = prod(SymElement::basis(u), SymElement::basis(v));
    REQUIRE(p == SymElement::basis(w));
  }

  SymElement s1 = sigma(1, 2);
  SymElement sq = prod(s1, s1);
  REQUIRE(sq.coeff(Permutation(2)) == RatFunc(1));
  REQUIRE(sq.coeff(Permutation(2).right_mul_s(1)) == RatFunc(delta_poly()));
  REQUIRE(sq.term_count() == 2);
}

TEST_CASE("specialization at q = 1 recovers the symmetric group") {
  // Structure constants live in Z[q, q^-1]; at q = 1 the product of two
  // basis words collapses to the single word of the composed permutation.
  auto check_pair = [](const Permutation& u, const Permutation& v) {
    SymElement p = prod(SymElement::basis(u), SymElement::basis(v));
    Permutation uv = u * v;
    for (const auto& [w, f] : p.terms()) {
      REQUIRE(f.is_polynomial());
      REQUIRE(f.num().integral());
      Rational at1 = f.num().eval(1);
      REQUIRE(at1 == (w == uv ? 1 : 0));
    }
    REQUIRE(p.coeff(uv) == RatFunc(1) * p.coeff(uv));  // uv term present
    REQUIRE(!(p.coeff(uv) == RatFunc(0)));
  };
  for (const auto& u : all_permutations(3))
    for (const auto& v : all_permutations(3)) check_pair(u, v);
  Rng rng;
  for (int trial = 0; trial < 40; ++trial) check_pair(rng.perm(4), rng.perm(4));
}

TEST_CASE("evaluated kernel agrees with the symbolic kernel") {
  Rng rng;
  for (Rational q0 : {Rational(3, 2), Rational(7, 5), Rational(-2)}) {
    EvaluatedCtx ctx(q0);
    for (const auto& u : all_permutations(3))
      for (const auto& v : all_permutations(3)) {
        SymElement ps = prod(SymElement::basis(u), SymElement::basis(v));
        NumElement pn = multiply(ctx, NumElement::basis(u), NumElement::basis(v));
        REQUIRE(pn.term_count() == ps.term_count());
        for (const auto& [w, f] : ps.terms()) REQUIRE(pn.coeff(w) == f.eval(q0));
      }
  }
  EvaluatedCtx ctx(Rational(5, 3));
  for (int trial = 0; trial < 25; ++trial) {
    NumElement a = rng.num_element(4, 3), b = rng.num_element(4, 3);
    SymElement as(4), bs(4);
    for (const auto& [w, c] : a.terms()) as.add_term(w, RatFunc(Rational(c)));
    for (const auto& [w, c] : b.terms()) bs.add_term(w, RatFunc(Rational(c)));
    SymElement ps = prod(as, bs);
    NumElement pn = multiply(ctx, a, b);
    REQUIRE(pn.term_count() == ps.term_count());
    for (const auto& [w, f] : ps.terms()) REQUIRE(pn.coeff(w) == f.eval(ctx.q0));
  }
}

TEST_CASE("ring axioms") {
  Rng rng;
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.uniform(2, 4);
    SymElement a = rng.sym_element(n, 3);
    SymElement b = rng.sym_element(n, 3);
    SymElement c = rng.sym_element(n, 2);
    REQUIRE(prod(SymElement::unit(n), a) == a);
    REQUIRE(prod(a, SymElement::unit(n)) == a);
    REQUIRE(prod(prod(a, b), c) == prod(a, prod(b, c)));
    REQUIRE(prod(a, b + c) == prod(a, b) + prod(a, c));
    REQUIRE(prod(a + b, c) == prod(a, c) + prod(b, c));
    RatFunc s(rng.poly());
    REQUIRE(prod(s * a, b) == s * prod(a, b));
    REQUIRE(prod(a, SymElement(n)) == SymElement(n));
  }
  REQUIRE_THROWS_AS(prod(SymElement::unit(2), SymElement::unit(3)),
                    std::invalid_argument);
}

TEST_CASE("Jucys-Murphy elements") {
  REQUIRE(jucys_murphy(SYM, 1, 3) == SymElement::unit(3));

  SymElement y2 = jucys_murphy(SYM, 2, 2);
  SymElement y2_expect = SymElement::unit(2);
  y2_expect.add_term(Permutation::transposition(2, 1, 2), RatFunc(delta_poly()));
  REQUIRE(y2 == y2_expect);

  SymElement y3 = jucys_murphy(SYM, 3, 3);
  SymElement y3_expect = SymElement::unit(3);
  y3_expect.add_term(Permutation::transposition(3, 1, 3), RatFunc(delta_poly()));
  y3_expect.add_term(Permutation::transposition(3, 2, 3), RatFunc(delta_poly()));
  REQUIRE(y3 == y3_expect);

  SECTION("sum and recursive forms coincide") {
    for (int n = 1; n <= 5; ++n)
      for (int i = 1; i <= n; ++i)
        REQUIRE(jucys_murphy(SYM, i, n, JmForm::Sum) ==
                jucys_murphy(SYM, i, n, JmForm::Recursive));
    EvaluatedCtx ctx(Rational(4, 3));
    for (int i = 1; i <= 6; ++i)
      REQUIRE(jucys_murphy(ctx, i, 6, JmForm::Sum) ==
              jucys_murphy(ctx, i, 6, JmForm::Recursive));
  }

  SECTION("pairwise commutation") {
    for (int n = 2; n <= 5; ++n)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          REQUIRE(commutator(SYM, jucys_murphy(SYM, i, n), jucys_murphy(SYM, j, n)) ==
                  SymElement(n));
    EvaluatedCtx ctx(Rational(3, 2));
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        REQUIRE(commutator(ctx, jucys_murphy(ctx, i, 6), jucys_murphy(ctx, j, 6)) ==
                NumElement(6));
  }

  SECTION("y_{m+1} commutes with the rank-m subalgebra") {
    SymElement y4 = jucys_murphy(SYM, 4, 4);
    for (const auto& w : all_permutations(3)) {
      SymElement t = SymElement::basis(promote(w, 4));
      REQUIRE(commutator(SYM, y4, t) == SymElement(4));
    }
  }
}

TEST_CASE("shuffle elements") {
  // f_{1->m} is the sum of T over the words s_k s_{k+1} ... s_{m-1}, one for
  // each insertion point k = 1..m.
  for (int n = 2; n <= 5; ++n)
    for (int m = 1; m <= n; ++m) {
      SymElement f = shuffle_factor(SYM, m, n);
      REQUIRE(f.term_count() == size_t(m));
      for (int k = 1; k <= m; ++k) {
        std::vector<int> word;
        for (int i = k; i <= m - 1; ++i) word.push_back(i);
        REQUIRE(f.coeff(Permutation::from_word(n, word)) == RatFunc(1));
      }
    }

  // The total shuffle is the sum of every basis word with unit coefficient.
  for (int n = 2; n <= 5; ++n) {
    SymElement total = shuffle_sum(SYM, n, n);
    SymElement expect(n);
    for (const auto& w : all_permutations(n)) expect.add_term(w, RatFunc(1));
    REQUIRE(total == expect);
  }
}

TEST_CASE("intertwiners") {
  REQUIRE(intertwiner(SYM, 1, 2) == SymElement(2));
  REQUIRE(intertwiner(SYM, 2, 3).term_count() > 0);

  SECTION("exchange relations") {
    for (int n = 3; n <= 4; ++n)
      for (int m = 2; m < n; ++m) {
        SymElement u = intertwiner(SYM, m, n);
        SymElement ym = jucys_murphy(SYM, m, n);
        SymElement ym1 = jucys_murphy(SYM, m + 1, n);
        REQUIRE(prod(u, ym) == prod(ym1, u));
        REQUIRE(prod(u, ym1) == prod(ym, u));
        for (int k = 1; k <= n; ++k) {
          if (k == m || k == m + 1) continue;
          REQUIRE(commutator(SYM, u, jucys_murphy(SYM, k, n)) == SymElement(n));
        }
      }
  }

  SECTION("square identity") {
    for (int n = 3; n <= 4; ++n) {
      int m = n - 1;
      SymElement u = intertwiner(SYM, m, n);
      SymElement ym = jucys_murphy(SYM, m, n);
      SymElement ym1 = jucys_murphy(SYM, m + 1, n);
      RatFunc q = q_power_rf(1), qi = q_power_rf(-1);
      SymElement lhs = prod(u, u);
      SymElement rhs = prod(q * ym - qi * ym1, q * ym1 - qi * ym);
      REQUIRE(lhs == rhs);
    }
  }

  SECTION("braid relation") {
    for (int n = 3; n <= 4; ++n)
      for (int m = 1; m + 1 < n; ++m) {
        SymElement a = intertwiner(SYM, m, n);
        SymElement b = intertwiner(SYM, m + 1, n);
        REQUIRE(prod(prod(a, b), a) == prod(prod(b, a), b));
      }
  }
}

TEST_CASE("symmetric functions of Jucys-Murphy elements are central") {
  // The generator sigma_m exchanges y_m and y_{m+1}, so it commutes with
  // their sum and product; generators further left commute with each factor.
  for (int n = 3; n <= 4; ++n)
    for (int m = 1; m < n; ++m) {
      SymElement ym = jucys_murphy(SYM, m, n);
      SymElement ym1 = jucys_murphy(SYM, m + 1, n);
      SymElement s = sigma(m, n);
      REQUIRE(commutator(SYM, s, ym + ym1) == SymElement(n));
      REQUIRE(commutator(SYM, s, prod(ym, ym1)) == SymElement(n));
      for (int k = 1; k + 2 <= m; ++k) {
        REQUIRE(commutator(SYM, sigma(k, n), ym) == SymElement(n));
        REQUIRE(commutator(SYM, sigma(k, n), ym1) == SymElement(n));
      }
    }

  for (int n = 2; n <= 5; ++n) {
    SymElement e1(n);
    SymElement prod_all = SymElement::unit(n);
    for (int i = 2; i <= n; ++i) {
      e1 += jucys_murphy(SYM, i, n);
      prod_all = prod(prod_all, jucys_murphy(SYM, i, n));
    }
    for (int k = 1; k < n; ++k) {
      REQUIRE(commutator(SYM, sigma(k, n), e1) == SymElement(n));
      REQUIRE(commutator(SYM, sigma(k, n), prod_all) == SymElement(n));
    }
  }
}

TEST_CASE("element rendering and promotion") {
  REQUIRE(SymElement(3).str() == "0");
  REQUIRE(SymElement::unit(3).str() == "T[]");
  REQUIRE((-SymElement::unit(3)).str() == "-T[]");
  REQUIRE(jucys_murphy(SYM, 2, 2).str() == "T[] + (-q^-1 + q)*T[s1]");
  SymElement m = SymElement::basis(Permutation(3).right_mul_s(2),
                                   RatFunc(LaurentPoly::q_power(2)));
  REQUIRE(m.str() == "q^2*T[s2]");
  // basis words render in one-line lexicographic order: [1,3,2] before [2,1,3]
  m.add_term(Permutation(3).right_mul_s(1), RatFunc(Rational(-1, 2)));
  REQUIRE(m.str() == "q^2*T[s2] - 1/2*T[s1]");

  REQUIRE(promote(jucys_murphy(SYM, 2, 2), 4) == jucys_murphy(SYM, 2, 4));
  NumElement ne = NumElement::basis(Permutation(2).right_mul_s(1), Rational(3, 4));
  REQUIRE(ne.str() == "3/4*T[s1]");
}
