#include <gtest/gtest.h>

#include "helpers.hpp"
#include "vps/apolarity.hpp"
#include "vps/errors.hpp"
#include "vps/grobner.hpp"

using namespace vps;
using namespace vps::test;

TEST(Apolarity, ContractionPairing) {
  EXPECT_EQ(apply_diff(sx(4, "x1*x4 + x2*x3"), ty(4, "y1*y4 + y2*y3")).coeff(Mono{}), 2);
  EXPECT_EQ(apply_diff(sx(2, "x1"), ty(2, "y1^3")), ty(2, "3*y1^2"));
  EXPECT_TRUE(apply_diff(sx(2, "x2"), ty(2, "y1^3")).is_zero());
  EXPECT_THROW(apply_diff(sx(2, "x1^2"), ty(2, "y1")), DomainError);
  EXPECT_THROW(apply_diff(sx(2, "x1"), sx(2, "x1")), DomainError);
}

TEST(Apolarity, InverseQuadric) {
  EXPECT_EQ(inverse_quadric(Quadric::parse("y1*y3 + y2*y4 + y5^2", 5)).form, sx(5, "4*x1*x3 + 4*x2*x4 + x5^2"));
  EXPECT_EQ(inverse_quadric(Quadric::parse("y1*y4 + y2*y3", 4)).form, sx(4, "4*x1*x4 + 4*x2*x3"));
  EXPECT_THROW(inverse_quadric(Quadric::parse("y1^2 + y2^2", 3)), SingularQuadric);
  Quadric q = Quadric::parse("y1^2 + 3*y1*y2 - y2^2", 2);
  EXPECT_EQ(inverse_quadric(inverse_quadric(q)).form, q.form);
}

TEST(Apolarity, ApolarIdealOfQuadric) {
  GradedIdeal qp = apolar_ideal(ty(4, "y1*y4 + y2*y3"));
  EXPECT_EQ(hf(qp, 4), (std::vector<long>{1, 4, 1, 0, 0}));
  EXPECT_TRUE(qp.contains(ideal(4, kEx11)));
  EXPECT_TRUE(qp.contains(ideal(4, kEqIdeal)));
  EXPECT_EQ(qp.generators().size(), 9u);
}

TEST(Apolarity, ExampleIdealsLieInQuadricPerp) {
  Form q = ty(4, "y1*y4 + y2*y3");
  GradedIdeal lim = ideal(4, kEx11Limit);
  for (const auto& g : lim.generators())
    if (g.degree() == 2) EXPECT_TRUE(apply_diff(g, q).is_zero()) << g.str();
}

TEST(Apolarity, ApolarQuadricsWitness) {
  auto r = apolar_quadrics(ideal(4, kEx11), 1);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(r.witness->full_rank());
  for (const auto& g : ideal(4, kEx11).piece(2).basis()) EXPECT_TRUE(apply_diff(g, r.witness->form).is_zero());
  EXPECT_THROW(apolar_quadrics(ideal(4, {"x3", "x4", "x1^2*x2^2 - x2^4"})), NotLinearlyNormal);
}

TEST(Apolarity, ApolarQuadricsAbsenceCertificate) {
  // all quadrics apolar to (x1^2, x1x2, x1x3) miss y1, so are singular
  auto r = apolar_quadrics(ideal(3, {"x1^2", "x1*x2", "x1*x3"}), 1);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_TRUE(r.absence_certified);
  EXPECT_EQ(r.space.size(), 3u);
}

TEST(Apolarity, PolarityConditionsAgree) {
  Quadric q = Quadric::parse("y1*y4 + y2*y3", 4);
  // L = span(y1, y2), N = q(L^⊥) where L^⊥ = (x3, x4) maps to span(y1, y2)
  LinearSubspace L = LinearSubspace::from_forms({ty(4, "y1"), ty(4, "y2")}, Ring::T, 4);
  LinearSubspace N = collineation_image(q, L.perp());
  auto c = polarity_conditions(L, N, q);
  for (bool b : c) EXPECT_TRUE(b);
  LinearSubspace N2 = LinearSubspace::from_forms({ty(4, "y3"), ty(4, "y4")}, Ring::T, 4);
  auto d = polarity_conditions(L, N2, q);
  for (bool b : d) EXPECT_FALSE(b);
  EXPECT_THROW(polarity_conditions(L, LinearSubspace::from_forms({ty(4, "y3")}, Ring::T, 4), q), DomainError);
}

TEST(Apolarity, PolarityConditionsAgreeOnRandomData) {
  ScalarRng rng(21);
  Quadric q = Quadric::parse("y1*y3 + y2*y4 + y5^2", 5);
  for (int t = 0; t < 15; ++t) {
    std::vector<std::vector<Scalar>> lv(2, std::vector<Scalar>(5)), nv(3, std::vector<Scalar>(5));
    for (auto& r : lv)
      for (auto& x : r) x = rng.small_int(2);
    LinearSubspace L(Ring::T, 5, lv);
    if (L.dim() != 2) continue;
    LinearSubspace N = t % 2 ? collineation_image(q, L.perp()) : LinearSubspace(Ring::T, 5, [&] {
      for (auto& r : nv)
        for (auto& x : r) x = rng.small_int(2);
      return nv;
    }());
    if (N.dim() != 3) continue;
    auto c = polarity_conditions(L, N, q);
    for (int k = 1; k < 6; ++k) EXPECT_EQ(c[k], c[0]) << "trial " << t << " condition " << k + 1;
  }
}

TEST(Apolarity, FirstOrderOrthogonalization) {
  Quadric q = Quadric::parse("y1*y4 + y2*y3", 4);
  GradedIdeal i0 = ideal(4, kEqIdeal);
  auto basis = i0.piece(2).basis();
  // deformation induced by a linear change E, plus an arbitrary tangent direction
  ExactMatrix e = ExactMatrix::from_rows({{0, 1, 0, 2}, {1, 0, 0, 0}, {0, 0, 1, 3}, {1, 0, 0, 0}});
  std::vector<Form> delta;
  for (const auto& v : basis) delta.push_back(derivation(v, e));
  ExactMatrix f = orthogonalize_first_order(i0, q, delta);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto r = first_order_residual(basis[k], delta[k], f, q);
    EXPECT_EQ(r[0], 0);
    EXPECT_EQ(r[1], 0);
  }
  ExactMatrix neg = e;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) neg(i, j) = -e(i, j);
  for (std::size_t k = 0; k < basis.size(); ++k) EXPECT_EQ(first_order_residual(basis[k], delta[k], neg, q)[1], 0);
  EXPECT_THROW(orthogonalize_first_order(i0, Quadric::parse("y1^2 + y2^2 + y3^2 + y4^2", 4), delta), DomainError);
}

namespace {

Form random_form(ScalarRng& rng, Ring r, int n, int d) {
  Form f(r, n, d);
  for (const auto& m : monomials_of_degree(n, d))
    if (rng.integer(0, 1)) f.add_term(m, rng.small_int(4));
  return f;
}

}  // namespace

TEST(Apolarity, ActionComposes) {
  ScalarRng rng(8);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + t % 3;
    Form f = random_form(rng, Ring::S, n, 1 + t % 2), g = random_form(rng, Ring::S, n, 1), h = random_form(rng, Ring::T, n, 4);
    EXPECT_EQ(apply_diff(f * g, h), apply_diff(f, apply_diff(g, h)));
  }
}

TEST(Apolarity, ApolarPieceHasCodimensionOne) {
  ScalarRng rng(12);
  for (int t = 0; t < 10; ++t) {
    Form q = random_form(rng, Ring::T, 4, 2);
    if (q.is_zero()) continue;
    EXPECT_EQ(apolar_piece(q, 2).codim(), 1u);
  }
  GradedIdeal p = apolar_ideal(ty(3, "y1^3"));
  EXPECT_TRUE(p.equal_up_to(ideal(3, {"x2", "x3", "x1^4"}), 5));
}

TEST(Apolarity, CoordinateSimplexWitness) {
  auto r = apolar_quadrics(ideal(4, {"x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4"}), 5);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.space.size(), 4u);
}

TEST(Apolarity, PolarityConditionsOnOrthogonalTriples) {
  ScalarRng rng(99);
  int agreeing_true = 0, checked = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + t % 3;
    ExactMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) a(i, j) = a(j, i) = rng.small_int(3);
    Quadric q = Quadric::from_matrix(Ring::T, a);
    if (!q.full_rank()) continue;
    const int dl = 1 + static_cast<int>(rng.integer(0, n - 2));
    std::vector<std::vector<Scalar>> lv(dl, std::vector<Scalar>(n));
    for (auto& r : lv)
      for (auto& x : r) x = rng.small_int(2);
    LinearSubspace L(Ring::T, n, lv);
    if (static_cast<int>(L.dim()) != dl) continue;
    LinearSubspace N;
    if (t % 2) {
      N = collineation_image(q, L.perp());
    } else {
      std::vector<std::vector<Scalar>> nv(n - dl, std::vector<Scalar>(n));
      for (auto& r : nv)
        for (auto& x : r) x = rng.small_int(2);
      N = LinearSubspace(Ring::T, n, nv);
      if (static_cast<int>(N.dim()) != n - dl) continue;
    }
    auto c = polarity_conditions(L, N, q);
    for (int k = 1; k < 6; ++k) EXPECT_EQ(c[k], c[0]) << "trial " << t << " condition " << k + 1;
    agreeing_true += c[0];
    ++checked;
  }
  EXPECT_GT(checked, 100);
  EXPECT_GT(agreeing_true, 20);
}

TEST(Apolarity, RandomDeformationsAreOrthogonalizable) {
  Quadric q = Quadric::parse("y1*y4 + y2*y3", 4);
  GradedIdeal i0 = ideal(4, kEqIdeal);
  auto basis = i0.piece(2).basis();
  auto zero = std::vector<Form>(basis.size(), Form(Ring::S, 4, 2));
  ExactMatrix f0 = orthogonalize_first_order(i0, q, zero);
  for (std::size_t k = 0; k < basis.size(); ++k) EXPECT_EQ(first_order_residual(basis[k], zero[k], f0, q)[1], 0);
  const auto stdm = i0.piece(2).standard_monomials();
  ScalarRng rng(50);
  for (int t = 0; t < 50; ++t) {
    std::vector<Form> delta;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Form d(Ring::S, 4, 2);
      for (const auto& m : stdm) d.add_term(m, rng.small_int(5));
      delta.push_back(d);
    }
    ExactMatrix f = orthogonalize_first_order(i0, q, delta);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      auto r = first_order_residual(basis[k], delta[k], f, q);
      EXPECT_EQ(r[0], 0);
      EXPECT_EQ(r[1], 0);
    }
  }
}
