#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "solvalg/errors.hpp"
#include "solvalg/verify.hpp"

using namespace solvalg;

namespace {

const Field Q = Field::rationals();
using V = TypeReport::Verdict;

AlgebraPresentation two_gen(const Monomial& tail) {
  AlgebraPresentation p(Q, {"a1", "a2"});
  p.set_relation(1, 0, Scalar(Q, 1), Polynomial::term(tail, Scalar(Q, 1)));
  return p;
}

std::vector<std::uint64_t> weights_of(const DegreeFunction& d) { return d.weights(); }

}  // namespace

TEST_CASE("type checks on the three-generator example") {
  const auto p = oracle::example(1, 1, 6);
  CHECK(check_graded_type(p, DegreeFunction({2, 1, 4})).verdict == V::Graded);
  CHECK(check_graded_type(p, DegreeFunction({2, 1, 4})).witnesses.empty());

  for (const auto& r : {check_graded_type(p, DegreeFunction::standard(3)),
                        check_filtered_type(p, DegreeFunction::standard(3))}) {
    CHECK(r.verdict == V::Neither);
    REQUIRE_FALSE(r.witnesses.empty());
    const auto& w = r.witnesses.front();
    CHECK(w.j == 2);
    CHECK(w.i == 0);
    CHECK(w.term == Monomial{0, 2, 1});
    CHECK(w.degree == 3);
    CHECK(w.required == 2);
  }

  const auto f5 = oracle::example(1, 1, 5);
  const auto r5 = check_filtered_type(f5, DegreeFunction({2, 1, 4}));
  CHECK(r5.verdict == V::FilteredOnly);
  REQUIRE(r5.witnesses.size() == 1);
  CHECK(r5.witnesses[0].term == Monomial{0, 5, 0});
  CHECK(r5.witnesses[0].degree == 5);
  CHECK(check_graded_type(f5, DegreeFunction({2, 1, 4})).verdict == V::FilteredOnly);

  CHECK(check_graded_type(commutative_presentation(Q, {"x", "y"}), DegreeFunction({7, 3})).verdict ==
        V::Graded);
}

TEST_CASE("every tail inside span{1..a2^6} stays filtered") {
  for (unsigned e = 0; e <= 6; ++e) {
    for (int mu : {0, 1, -4}) {
      const auto v = check_filtered_type(oracle::example(1, mu, e), DegreeFunction({2, 1, 4})).verdict;
      CHECK(v != V::Neither);
      CHECK((v == V::Graded) == (e == 6));
    }
  }
  CHECK(check_filtered_type(oracle::example(1, 1, 7), DegreeFunction({2, 1, 4})).verdict == V::Neither);
}

TEST_CASE("weight search examples") {
  const auto w = find_weights(oracle::example(1, 1, 6), WeightMode::Graded, 16);
  REQUIRE(w);
  CHECK(weights_of(*w) == std::vector<std::uint64_t>{2, 1, 4});
  const auto c = find_weights(commutative_presentation(Q, {"x", "y", "z"}), WeightMode::Graded, 1);
  REQUIRE(c);
  CHECK(weights_of(*c) == std::vector<std::uint64_t>{1, 1, 1});
  const auto cubic = find_weights(two_gen({3, 0}), WeightMode::Graded, 16);
  REQUIRE(cubic);
  CHECK(weights_of(*cubic) == std::vector<std::uint64_t>{1, 2});
  // a2 a1 = a1 a2 + a2^3 forces m1 = 2 m2
  const auto other = find_weights(two_gen({0, 3}), WeightMode::Graded, 16);
  REQUIRE(other);
  CHECK(weights_of(*other) == std::vector<std::uint64_t>{2, 1});
  // a2 a1 = a1 a2 + a1 a2^2 has no positive graded solution
  CHECK_FALSE(find_weights(two_gen({1, 2}), WeightMode::Graded, 16));
  CHECK_FALSE(find_weights(oracle::example(1, 1, 6), WeightMode::Graded, 3));
  CHECK_THROWS_AS(find_weights(oracle::example(1, 1, 6), WeightMode::Graded, 0), std::invalid_argument);
}

TEST_CASE("weight search matches brute force") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    AlgebraPresentation p(Q, names);
    std::uniform_int_distribution<int> pick(0, 3);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (pick(rng) != 0) continue;
        Polynomial tail(n, Q);
        const int terms = 1 + pick(rng) % 2;
        for (int t = 0; t < terms; ++t) tail.add_term(oracle::random_monomial(rng, n, 3), Scalar(Q, 1));
        p.set_relation(j, i, Scalar(Q, 1), tail);
      }
    }
    for (bool graded : {true, false}) {
      const std::uint64_t bound = 6;
      const auto got = find_weights(p, graded ? WeightMode::Graded : WeightMode::Filtered, bound);
      const auto want = oracle::brute_force_weights(p, graded, bound);
      REQUIRE(got.has_value() == want.has_value());
      if (got) {
        CHECK(weights_of(*got) == *want);
        const auto v = check_graded_type(p, *got).verdict;
        if (graded) {
          CHECK(v == V::Graded);
        } else {
          CHECK(v != V::Neither);
        }
      }
    }
  }
}

TEST_CASE("degree laws") {
  const auto comm = commutative_presentation(Q, {"x", "y"});
  CHECK(verify_degree_laws(SolvableAlgebra(comm, MonomialOrdering::natural_lex(2)),
                           DegreeFunction::standard(2), 3)
            .pass);
  const SolvableAlgebra ex(oracle::example(1, 1, 6), oracle::example_ordering());
  CHECK(verify_degree_laws(ex, DegreeFunction({2, 1, 4}), 2).pass);
  const SolvableAlgebra f5(oracle::example(1, 1, 5), oracle::example_ordering());
  CHECK(verify_degree_laws(f5, DegreeFunction({2, 1, 4}), 2).pass);

  const SolvableAlgebra bad(two_gen({0, 5}), MonomialOrdering::natural_lex(2));
  const auto r = verify_degree_laws(bad, DegreeFunction::standard(2), 2);
  CHECK_FALSE(r.pass);
  CHECK(r.law == 'a');
  REQUIRE(r.witness.size() == 2);
  CHECK(r.witness[0] == Monomial{0, 1});
  CHECK(r.witness[1] == Monomial{1, 0});
  CHECK_THROWS_AS((verify_degree_laws(ex, DegreeFunction::standard(2), 1)), DimensionError);
}

TEST_CASE("graded products stay in their degree and filtered ones below it") {
  const DegreeFunction d({2, 1, 4});
  for (unsigned e : {6u, 4u}) {
    const SolvableAlgebra alg(oracle::example(1, 1, e), oracle::example_ordering());
    for (const auto& a : box_monomials(3, 2)) {
      for (const auto& b : box_monomials(3, 2)) {
        const std::uint64_t pq = d(a) + d(b);
        const Polynomial ab = alg.mul_monomials(a, b);
        for (const auto& [m, c] : ab.terms()) {
          if (e == 6) {
            CHECK(d(m) == pq);
          } else {
            CHECK(d(m) <= pq);
          }
        }
      }
    }
  }
}

TEST_CASE("degree of a product adds when leading parts multiply to nonzero") {
  std::mt19937_64 rng(17);
  const DegreeFunction d({2, 1, 4});
  const SolvableAlgebra alg(oracle::example(1, 1, 5), oracle::example_ordering());
  for (int k = 0; k < 200; ++k) {
    const auto f = oracle::random_poly(rng, 3, Q, 2);
    const auto g = oracle::random_poly(rng, 3, Q, 2);
    if (alg.mul(leading_homogeneous(d, f), leading_homogeneous(d, g)).is_zero()) continue;
    CHECK(deg_poly(d, alg.mul(f, g)) == deg_poly(d, f) + deg_poly(d, g));
  }
}
