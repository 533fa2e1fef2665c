#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "solvalg/algebra_file.hpp"
#include "solvalg/errors.hpp"

using namespace solvalg;

namespace {

const Field Q = Field::rationals();

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parses text expecting a ParseError at (line, column).
void expect_error(const std::string& text, std::size_t line, std::size_t column) {
  CAPTURE(text);
  try {
    parse_algebra_file(text);
    FAIL("no error");
  } catch (const ParseError& e) {
    CAPTURE(e.what());
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

const char* kExample =
    "field Q\n"
    "gens a1:2 a2:1 a3:4\n"
    "order gr(lex(a1>a2>a3))\n"
    "rel a3*a1 = a1*a3 + a2^6 + a2^2*a3\n";

}  // namespace

TEST_CASE("parse the example file") {
  const AlgebraFile f = parse_algebra_file(kExample);
  CHECK(f.presentation == oracle::example(1, 1, 6));
  CHECK(f.ordering == oracle::example_ordering());
  REQUIRE(f.degree);
  CHECK(*f.degree == DegreeFunction({2, 1, 4}));
  CHECK(format_algebra_file(f) == kExample);
}

TEST_CASE("defaults") {
  const AlgebraFile f = parse_algebra_file("gens x y\norder lex(x>y)\n");
  CHECK(f.presentation == commutative_presentation(Q, {"x", "y"}));
  CHECK_FALSE(f.degree);
  const AlgebraFile g = parse_algebra_file("gens x y z\n");
  CHECK(g.ordering == MonomialOrdering::natural_lex(3));
  CHECK(g.presentation.field() == Q);
}

TEST_CASE("CRLF, comments and blank lines") {
  const AlgebraFile f = parse_algebra_file(
      "# header\r\nfield GF(7)\r\n\r\ngens x:1 y:1  # two\r\nrel y*x = 3*x*y + 1/2\r\n");
  CHECK(f.presentation.field() == Field::prime(7));
  CHECK(f.presentation.relation(1, 0).lambda == Scalar(Field::prime(7), 3));
  CHECK(f.presentation.relation(1, 0).tail.coefficient(Monomial{0, 0}).residue() == 4);
}

TEST_CASE("polynomial expressions") {
  const auto p = oracle::example(1, 1, 6);
  const Polynomial f = parse_poly("a1*a3 + a2^2*a3 + a2^6", p);
  CHECK(f.size() == 3);
  CHECK(f.coefficient(Monomial{0, 2, 1}) == Scalar(Q, 1));
  CHECK(parse_poly("0", p).is_zero());
  CHECK(parse_poly("3/2*a1^2", p) == Polynomial::term(Monomial{2, 0, 0}, Scalar::parse(Q, "3/2")));
  CHECK(parse_poly("-a1 - 2*a1 + 1", p).coefficient(Monomial{1, 0, 0}) == Scalar(Q, -3));
  CHECK(parse_poly("a1*a1", p) == parse_poly("a1^2", p));
  CHECK_THROWS_AS((parse_poly("a3*a1", p)), ParseError);
  CHECK_THROWS_AS((parse_poly("a1*b", p)), ParseError);
  CHECK_THROWS_AS((parse_poly("1/0*a1", p)), ParseError);
  CHECK_THROWS_AS((parse_poly("a1 +", p)), ParseError);
  CHECK_THROWS_AS((parse_poly("", p)), ParseError);
  CHECK_THROWS_AS((parse_poly("a1^0", p)), ParseError);
}

TEST_CASE("printing orders terms by the ordering") {
  const auto p = oracle::example(1, 1, 6);
  const auto ord = oracle::example_ordering();
  CHECK(format_poly(parse_poly("a2^6 + a1*a3 - 3/2*a2 + 1 + a2^2*a3", p), p.names(), ord) ==
        "a1*a3 + a2^6 + a2^2*a3 - 3/2*a2 + 1");
  CHECK(format_poly(parse_poly("-a1 - 1", p), p.names(), ord) == "-a1 - 1");
  CHECK(format_poly(Polynomial(3, Q), p.names(), ord) == "0");
  CHECK(format_monomial(Monomial{0, 0, 0}, p.names()) == "1");
}

TEST_CASE("orderings round-trip through text") {
  const char* orders[] = {
      "lex(a3>a1>a2)",
      "grlex(a1>a2>a3)",
      "grlex(1,2,3;a2>a1>a3)",
      "grevlex(a1>a2>a3)",
      "grevlex(2,2,1;a3>a2>a1)",
      "gr(lex(a1>a2>a3))",
      "gr(1,1,1;lex(a1>a2>a3))",
      "gr(grevlex(a2>a3>a1))",
  };
  for (const char* o : orders) {
    const std::string text = std::string("gens a1:2 a2:1 a3:4\norder ") + o + "\n";
    const AlgebraFile f = parse_algebra_file(text);
    CHECK(format_algebra_file(f) == "field Q\n" + text);
    CHECK(parse_algebra_file(format_algebra_file(f)) == f);
  }
  const AlgebraFile r = parse_algebra_file("gens a~:2 b~:1 Z:1\norder rees(gr(lex(a~>b~)))\n");
  CHECK(r.ordering == MonomialOrdering::rees(make_graded(MonomialOrdering::natural_lex(2), DegreeFunction({2, 1}))));
}

TEST_CASE("diagnostics point at the offending token") {
  expect_error("gens a1 a2\nrel a2*a1 = 0*a1*a2\n", 2, 13);
  expect_error("gens a1 a2\nrel a2*a1 = a1\n", 2, 13);
  expect_error("gens a1 a2\nrel a2*a1 = a1*a2\nrel a2*a1 = a1*a2\n", 3, 5);
  expect_error("gens a1 a2\nrel a2*a1 = a1*a2 + b\n", 2, 21);
  expect_error("gens a1 a2\nrel a2*b = a1*a2\n", 2, 8);
  expect_error("gens a1:1 a2:0\n", 1, 14);
  expect_error("gens a1:1 a2:-1\n", 1, 14);
  expect_error("gens a1 a2\nrel a2*a1 = a2*a1\n", 2, 16);
  expect_error("gens a1 a2\nrel a2*a1 = 1/*a1*a2\n", 2, 15);
  expect_error("gens a1 a2\nrel a2*a1 = 2x*a1*a2\n", 2, 13);
  expect_error("gens a1 a2\nrel a1*a2 = a1*a2\n", 2, 5);
  expect_error("gens a1 a2\nrel a2 = a1*a2\n", 2, 5);
  expect_error("gens a1 a2\nrel a2*a1*a1 = a1*a2\n", 2, 5);
  expect_error("field R\n", 1, 7);
  expect_error("field GF(6)\ngens a\n", 1, 10);
  expect_error("gens a b\norder lex(a)\n", 2, 12);
  expect_error("gens a b\norder lex(a>a)\n", 2, 13);
  expect_error("gens a b\norder foo(a>b)\n", 2, 7);
  expect_error("gens a b\norder gr(lex(a>b))\n", 2, 7);
  expect_error("gens a b\nrel b*a = a*b\nfoo\n", 3, 1);
  expect_error("gens a a\n", 1, 8);
  expect_error("rel b*a = a*b\n", 1, 5);
  expect_error("gens a:1 b\n", 1, 10);
  expect_error("# nothing\n", 1, 1);
}

TEST_CASE("shipped data files parse and print back") {
  for (const char* name : {"ex1.alg", "ex1-f5.alg", "ex1-weights111.alg"}) {
    const std::string text = slurp(std::string(SOLVALG_TEST_DATA) + "/" + name);
    const AlgebraFile f = parse_algebra_file(text);
    CHECK(parse_algebra_file(format_algebra_file(f)) == f);
  }
}
