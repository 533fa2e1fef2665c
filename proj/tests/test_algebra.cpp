#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "solvalg/algebra.hpp"
#include "solvalg/errors.hpp"

using namespace solvalg;

namespace {

const Field Q = Field::rationals();
Scalar q(std::int64_t v) { return Scalar(Q, v); }

Polynomial poly(std::initializer_list<std::pair<Monomial, std::int64_t>> terms, std::size_t n = 3) {
  Polynomial f(n, Q);
  for (const auto& [m, c] : terms) f.add_term(m, q(c));
  return f;
}

// Weyl-like algebra on x, d with d x = x d + 1.
AlgebraPresentation weyl() {
  AlgebraPresentation p(Q, {"x", "d"});
  p.set_relation(1, 0, q(1), Polynomial::constant(2, q(1)));
  return p;
}

// Quantum plane y x = 3 x y.
AlgebraPresentation quantum_plane() {
  AlgebraPresentation p(Q, {"x", "y"});
  p.set_relation(1, 0, q(3), Polynomial(2, Q));
  return p;
}

// U(sl2)-type: e f = f e + h ordered as f < h < e: generators f, h, e.
AlgebraPresentation sl2() {
  AlgebraPresentation p(Q, {"f", "h", "e"});
  p.set_relation(2, 0, q(1), poly({{{0, 1, 0}, 1}}));    // e f = f e + h
  p.set_relation(2, 1, q(1), poly({{{0, 0, 1}, -2}}));   // e h = h e - 2e
  p.set_relation(1, 0, q(1), poly({{{1, 0, 0}, -2}}));   // h f = f h - 2f
  return p;
}

}  // namespace

TEST_CASE("presentation basics") {
  AlgebraPresentation p(Q, {"a", "b", "c"});
  CHECK(p.is_commuting(2, 0));
  CHECK(p.index_of("b") == 1u);
  CHECK_FALSE(p.index_of("z"));
  CHECK_THROWS_AS((p.set_relation(1, 0, q(0), Polynomial(3, Q))), InvalidPresentationError);
  CHECK_THROWS_AS((p.set_relation(1, 0, q(1), Polynomial(2, Q))), DimensionError);
  CHECK_THROWS_AS((p.set_relation(1, 0, Scalar(Field::prime(3), 1), Polynomial(3, Q))),
                  FieldMismatchError);
  CHECK_THROWS_AS((AlgebraPresentation(Q, {"a", "a"})), InvalidPresentationError);
  CHECK_THROWS_AS((AlgebraPresentation(Q, {""})), InvalidPresentationError);
}

TEST_CASE("products in the three-generator example") {
  const auto ord = oracle::example_ordering();
  const auto p0 = oracle::example(1, 0, 6);
  CHECK(mul_monomials(p0, ord, {0, 0, 1}, {2, 0, 0}) == poly({{{2, 0, 1}, 1}, {{1, 6, 0}, 2}}));

  const auto p = oracle::example(1, 1, 6);
  const Polynomial lhs = poly({{{0, 0, 1}, 1}, {{0, 1, 0}, 1}});
  const Polynomial a1 = poly({{{1, 0, 0}, 1}});
  CHECK(mul(p, ord, lhs, a1) ==
        poly({{{1, 0, 1}, 1}, {{0, 2, 1}, 1}, {{0, 6, 0}, 1}, {{1, 1, 0}, 1}}));
  CHECK(mul_monomials(p, ord, {1, 0, 0}, {0, 0, 1}) == poly({{{1, 0, 1}, 1}}));
  CHECK_THROWS_AS((mul_monomials(p, ord, {1, 0}, {0, 0, 1})), DimensionError);
}

TEST_CASE("classical algebras") {
  const auto w = weyl();
  const auto ord = MonomialOrdering::grlex(DegreeFunction::standard(2), {1, 0});
  // d x^2 = x^2 d + 2x
  CHECK(mul_monomials(w, ord, {0, 1}, {2, 0}) == poly({{{2, 1}, 1}, {{1, 0}, 2}}, 2));
  // d^2 x^2 = x^2 d^2 + 4 x d + 2
  CHECK(mul_monomials(w, ord, {0, 2}, {2, 0}) ==
        poly({{{2, 2}, 1}, {{1, 1}, 4}, {{0, 0}, 2}}, 2));

  const auto qp = quantum_plane();
  // y^2 x^3 = 3^6 x^3 y^2
  CHECK(mul_monomials(qp, MonomialOrdering::natural_lex(2), {0, 2}, {3, 0}) ==
        poly({{{3, 2}, 729}}, 2));
}

TEST_CASE("products agree with the free-algebra oracle") {
  std::mt19937_64 rng(3);
  const std::vector<std::pair<AlgebraPresentation, MonomialOrdering>> cases{
      {oracle::example(1, 1, 6), oracle::example_ordering()},
      {oracle::example(2, -3, 5), oracle::example_ordering()},
      {oracle::example(1, 1, 6, Field::prime(5)), oracle::example_ordering()},
      {weyl(), MonomialOrdering::grlex(DegreeFunction::standard(2), {0, 1})},
      {quantum_plane(), MonomialOrdering::natural_lex(2)},
      {sl2(), MonomialOrdering::grlex(DegreeFunction::standard(3), {2, 1, 0})},
  };
  for (const auto& [p, ord] : cases) {
    const SolvableAlgebra alg(p, ord);
    for (const auto& a : box_monomials(p.nvars(), 2)) {
      for (const auto& b : box_monomials(p.nvars(), 2)) {
        CHECK(alg.mul_monomials(a, b) == oracle::mul_monomials(p, a, b));
      }
    }
    for (int k = 0; k < 30; ++k) {
      const auto f = oracle::random_poly(rng, p.nvars(), p.field(), 2);
      const auto g = oracle::random_poly(rng, p.nvars(), p.field(), 2);
      CHECK(alg.mul(f, g) == oracle::mul(p, f, g));
    }
  }
}

TEST_CASE("word engine and algebra product agree") {
  const auto p = oracle::example(1, 1, 6);
  const auto ord = oracle::example_ordering();
  const SolvableAlgebra alg(p, ord);
  const WordRewriter rw(p, ord);
  for (const auto& a : box_monomials(3, 2)) {
    for (const auto& b : box_monomials(3, 2)) {
      Word w = monomial_word(a);
      const Word t = monomial_word(b);
      w.insert(w.end(), t.begin(), t.end());
      CHECK(rw.normalize({WordTerm{w, q(1)}}) == alg.mul_monomials(a, b));
    }
  }
}

TEST_CASE("leading monomial of a product is the exponent sum") {
  const auto p = oracle::example(-2, 1, 6);
  const auto ord = oracle::example_ordering();
  const SolvableAlgebra alg(p, ord);
  for (const auto& a : box_monomials(3, 2)) {
    for (const auto& b : box_monomials(3, 2)) {
      const Polynomial prod = alg.mul_monomials(a, b);
      CHECK(leading_monomial(ord, prod) == a + b);
      CHECK_FALSE(prod.coefficient(a + b).is_zero());
    }
  }
}

TEST_CASE("rewrite step") {
  const auto p = oracle::example(1, 1, 6);
  const WordRewriter rw(p, oracle::example_ordering());
  const auto out = rw.rewrite_at({2, 0}, 0, q(5));
  REQUIRE(out.size() == 3);
  CHECK(out[0].word == Word{0, 2});
  CHECK(out[0].coeff == q(5));
  CHECK_THROWS_AS((rw.rewrite_at({0, 2}, 0, q(1))), AlgebraError);
  CHECK_THROWS_AS((rw.rewrite_at({2, 0}, 1, q(1))), AlgebraError);
  std::uint64_t steps = 0;
  rw.normalize({WordTerm{{2, 0}, q(1)}}, &steps);
  CHECK(steps == 1);
}

TEST_CASE("budget guard") {
  // b a = a b + a^2 b^2 keeps producing new inversions.
  AlgebraPresentation p(Q, {"a", "b"});
  p.set_relation(1, 0, q(1), poly({{{2, 2}, 1}}, 2));
  const auto ord = MonomialOrdering::natural_lex(2);
  CHECK_FALSE(check_solvable(p, ord).pass);
  const SolvableAlgebra alg(p, ord, 200);
  CHECK_THROWS_AS((alg.mul_monomials({0, 3}, {3, 0})), BudgetExceededError);
  const WordRewriter rw(p, ord, 200);
  CHECK_THROWS_AS((rw.normalize({WordTerm{{1, 1, 1, 0, 0, 0}, q(1)}})), BudgetExceededError);
}

TEST_CASE("solvability check") {
  const auto ord = oracle::example_ordering();
  CHECK(check_solvable(oracle::example(1, 1, 6), ord).pass);
  CHECK(check_solvable(oracle::example(1, 1, 5), ord).pass);
  CHECK(check_solvable(oracle::example(1, 0, 6), ord).pass);
  // Under plain lex with a2 most significant the tail a2^6 outranks a1 a3.
  const auto bad = check_solvable(oracle::example(1, 1, 6), MonomialOrdering::lex({1, 0, 2}));
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.violation);
  CHECK(bad.violation->j == 2);
  CHECK(bad.violation->i == 0);
  CHECK(bad.violation->leading == Monomial{0, 6, 0});
  CHECK(check_solvable(commutative_presentation(Q, {"x", "y", "z"}), MonomialOrdering::natural_lex(3)).pass);
}

TEST_CASE("confluence check") {
  const auto ord = oracle::example_ordering();
  const auto r = check_pbw_confluence(oracle::example(1, 1, 6), ord);
  CHECK(r.pass());
  CHECK(r.triples_checked == 1);
  CHECK(check_pbw_confluence(sl2(), MonomialOrdering::grlex(DegreeFunction::standard(3), {2, 1, 0})).pass());
  CHECK(check_pbw_confluence(commutative_presentation(Q, {"a", "b", "c", "d"}), MonomialOrdering::natural_lex(4))
            .triples_checked == 4);
}

TEST_CASE("ad hoc presentation: engine and oracle agree on confluence") {
  // c a = a c + b, c b = b c + a, b a = a b + 1 + a
  AlgebraPresentation p(Q, {"a", "b", "c"});
  p.set_relation(2, 0, q(1), poly({{{0, 1, 0}, 1}}));
  p.set_relation(2, 1, q(1), poly({{{1, 0, 0}, 1}}));
  p.set_relation(1, 0, q(1), poly({{{0, 0, 0}, 1}, {{1, 0, 0}, 1}}));
  const auto ord = MonomialOrdering::grlex(DegreeFunction::standard(3), {2, 1, 0});
  REQUIRE(check_solvable(p, ord).pass);
  const auto r = check_pbw_confluence(p, ord);

  // Oracle: reduce c*b*a starting from each pair, then fully normalize.
  const auto one = q(1);
  std::map<oracle::Word, Scalar> left{{{1, 2, 0}, one}, {{0, 0}, one}};  // (c b) a = b c a + a a
  std::map<oracle::Word, Scalar> right{{{2, 0, 1}, one}, {{2}, one}, {{2, 0}, one}};  // c (b a)
  const Polynomial l = oracle::normal_form(p, left);
  const Polynomial rr = oracle::normal_form(p, right);
  CHECK(r.pass() == (l == rr));
  CHECK_FALSE(r.pass());
  REQUIRE(r.left);
  CHECK(*r.left == l);
  CHECK(*r.right == rr);
  CHECK(rr - l == poly({{{0, 1, 0}, 1}}));
}

TEST_CASE("associativity on the 0..2 box") {
  const std::vector<std::pair<AlgebraPresentation, MonomialOrdering>> cases{
      {oracle::example(1, 1, 6), oracle::example_ordering()},
      {sl2(), MonomialOrdering::grlex(DegreeFunction::standard(3), {2, 1, 0})},
  };
  for (const auto& [p, ord] : cases) {
    const SolvableAlgebra alg(p, ord);
    const auto box = box_monomials(p.nvars(), 2);
    for (const auto& a : box) {
      for (const auto& b : box) {
        const Polynomial ab = alg.mul_monomials(a, b);
        for (const auto& c : box) {
          const Polynomial one_c = Polynomial::term(c, q(1));
          CHECK(alg.mul(ab, one_c) == alg.mul(Polynomial::term(a, q(1)), alg.mul_monomials(b, c)));
        }
      }
    }
  }
}

TEST_CASE("copies share products and mixed operands are rejected") {
  const SolvableAlgebra alg(oracle::example(1, 1, 6), oracle::example_ordering());
  const SolvableAlgebra copy = alg;
  CHECK(copy.mul_monomials({0, 0, 2}, {1, 0, 0}) == alg.mul_monomials({0, 0, 2}, {1, 0, 0}));
  CHECK_THROWS_AS((alg.mul(Polynomial(2, Q), Polynomial(3, Q))), DimensionError);
  CHECK_THROWS_AS((alg.mul(Polynomial(3, Field::prime(3)), Polynomial(3, Field::prime(3)))),
                  FieldMismatchError);
  CHECK(alg.pow(poly({{{0, 0, 1}, 1}}), 0) == alg.presentation().one());
  CHECK(alg.pow(poly({{{0, 0, 1}, 1}}), 3) == poly({{{0, 0, 3}, 1}}));
}
