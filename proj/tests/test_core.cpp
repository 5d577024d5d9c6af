#include <gtest/gtest.h>

#include "helpers.hpp"
#include "vps/errors.hpp"
#include "vps/formspace.hpp"
#include "vps/matrix.hpp"
#include "vps/scalar.hpp"

using namespace vps;
using namespace vps::test;

TEST(Form, ParsePrintRoundTrip) {
  for (const char* s : {"x1*x3 - x2^2", "3/2*x1^2 + x5^2", "-x1*x4 + x2*x3", "0"}) {
    Form f = parse_form(s, 5, Ring::S);
    EXPECT_EQ(parse_form(f.str(), 5, Ring::S), f) << s;
  }
  EXPECT_EQ(sx(4, "x2^2").str(), "x2^2");
  EXPECT_EQ(Form(Ring::S, 4, 2).str(), "0");
}

TEST(Form, RingInferredFromVariables) {
  EXPECT_EQ(parse_form("y1*y4 + y2*y3", 4, Ring::S).ring(), Ring::T);
  EXPECT_THROW(parse_form("x1 + x2^2", 4), DomainError);
  EXPECT_THROW(parse_form("x1 + y2", 4), Error);
  EXPECT_THROW(parse_form("x1 +* x2", 4), ParseError);
  EXPECT_THROW(parse_form("x9", 4), Error);
}

TEST(Form, ArithmeticAndDerivatives) {
  Form a = sx(3, "x1 + x2"), b = sx(3, "x1 - x2");
  EXPECT_EQ(a * b, sx(3, "x1^2 - x2^2"));
  EXPECT_EQ((a * a).derivative(0), sx(3, "2*x1 + 2*x2"));
  EXPECT_THROW(form_arith(a, sx(3, "x1^2"), FormOp::Add), DomainError);
  EXPECT_THROW(form_arith(a, ty(3, "y1"), FormOp::Mul), DomainError);
}

TEST(Form, LinearSubstitution) {
  // x1 -> x1 + x2, x2 -> x2
  Form f = sx(2, "x1^2");
  std::vector<std::vector<Scalar>> m = {{1, 1}, {0, 1}};
  EXPECT_EQ(f.substitute_linear(m), sx(2, "x1^2 + 2*x1*x2 + x2^2"));
}

TEST(IdealText, RoundTrip) {
  std::string text = "ring S n=4\n# comment\nx1*x3 - x2^2\nx4^2\n";
  IdealText it = parse_ideal_text(text);
  EXPECT_EQ(it.nvars, 4);
  EXPECT_EQ(it.generators.size(), 2u);
  IdealText again = parse_ideal_text(format_ideal_text(it));
  EXPECT_EQ(again.generators, it.generators);
}

TEST(IdealText, ErrorsCarryPosition) {
  try {
    parse_ideal_text("ring S n=4\nx1*x3\nx1 + x2^2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  } catch (const DomainError&) {
  }
}

TEST(Matrix, RrefKernelDeterminant) {
  ExactMatrix m = ExactMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(m), 2u);
  ExactMatrix k = kernel(m);
  ASSERT_EQ(k.rows(), 1u);
  auto v = m.apply(k.row(0));
  for (const auto& x : v) EXPECT_EQ(x, 0);
  EXPECT_EQ(determinant(m), 0);
  ExactMatrix a = ExactMatrix::from_rows({{2, 1}, {1, 1}});
  EXPECT_EQ(determinant(a), 1);
  EXPECT_EQ(a * inverse(a), ExactMatrix::identity(2));
  EXPECT_THROW(inverse(m), DomainError);
}

TEST(Matrix, ModularRankAgreesWithExact) {
  ScalarRng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 3 + trial % 5, c = 4 + trial % 3;
    // rank-deficient by construction: product of r x k and k x c
    const int k = 1 + trial % 3;
    ExactMatrix a(r, k), b(k, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < k; ++j) a(i, j) = rng.small_rational(7);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < c; ++j) b(i, j) = rng.small_int(9);
    ExactMatrix m = a * b;
    auto mp = multi_prime_rank(m, configured_primes());
    EXPECT_TRUE(mp.agree());
    EXPECT_EQ(mp.value(), rank(m));
  }
  EXPECT_THROW(modular_rank(ExactMatrix(1, 1), 4294967311ULL), DomainError);
}

TEST(FormSpace, IntersectionMatchesDimensionFormula) {
  ScalarRng rng(3);
  const int n = 4;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Form> ga, gb;
    auto random_quadric = [&] {
      Form f(Ring::S, n, 2);
      for (const auto& m : monomials_of_degree(n, 2)) f.add_term(m, rng.small_int(3));
      return f;
    };
    for (int i = 0; i < 6; ++i) ga.push_back(random_quadric());
    for (int i = 0; i < 7; ++i) gb.push_back(random_quadric());
    FormSpace a = FormSpace::span(Ring::S, n, 2, ga), b = FormSpace::span(Ring::S, n, 2, gb);
    FormSpace c = intersect(a, b), s = sum(a, b);
    EXPECT_EQ(c.dim() + s.dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.contains(c));
    EXPECT_TRUE(b.contains(c));
  }
}

TEST(Ideal, HilbertFunctionOfExample) {
  GradedIdeal i = ideal(4, kEx11);
  EXPECT_EQ(hf(i, 5), (std::vector<long>{1, 4, 4, 4, 4, 4}));
  GradedIdeal lim = ideal(4, kEx11Limit);
  EXPECT_EQ(hf(lim, 6), (std::vector<long>{1, 4, 4, 4, 4, 4, 4}));
}

TEST(Ideal, MinimalGeneratorsDropRedundancy) {
  GradedIdeal i = ideal(3, {"x1", "x1*x2", "x2^2", "x1*x3 + x2^2"});
  auto g = i.minimal_generators(3);
  EXPECT_EQ(g.size(), 2u);
}
