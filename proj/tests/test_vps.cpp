#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "vps/errors.hpp"
#include "vps/vps.hpp"

using namespace vps;
using namespace vps::test;

namespace {

const Quadric kQ4 = Quadric::parse("y1*y4 + y2*y3", 4);
const Quadric kQ5 = Quadric::parse("y1*y4 + y2*y3 + y5^2", 5);

std::vector<std::string> ex37(bool t) {
  return {"x4*x5", "x3*x5", "x1*x5", "x4^2", "x3*x4", t ? "x1^2 + x2*x4" : "x2*x4", "x1*x4 - x5^2", "x3^2", "x2*x3 - x5^2",
          "x1*x3", "x1^4"};
}

GradedIdeal ex37_scheme() {
  return local_scheme_ideal(2, {Mono::from_exponents({4, 0}), Mono::from_exponents({1, 1}), Mono::from_exponents({0, 2})},
                            {parse_affine("1", 2), parse_affine("e1", 2), parse_affine("e1^2", 2), parse_affine("e1^3", 2),
                             parse_affine("e2", 2)});
}

Point random_point(ScalarRng& rng, int n) {
  Point p(n);
  for (auto& c : p) c = rng.small_int(6);
  return p;
}

}  // namespace

TEST(PointsIdeal, CoordinateSimplex) {
  GradedIdeal i = points_ideal({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  EXPECT_EQ(hf(i, 4), (std::vector<long>{1, 4, 4, 4, 4}));
  EXPECT_EQ(i.generators().size(), 6u);
  for (const auto& g : i.generators()) EXPECT_EQ(g.terms().size(), 1u);
}

TEST(PointsIdeal, RandomAndCollinearPoints) {
  ScalarRng rng(2);
  std::vector<Point> pts;
  for (int k = 0; k < 4; ++k) pts.push_back(random_point(rng, 4));
  GradedIdeal i = points_ideal(pts);
  EXPECT_EQ(i.dim(2), 6u);
  for (const auto& p : pts)
    for (const auto& g : i.generators()) EXPECT_EQ(g.evaluate(p), 0);
  GradedIdeal line = points_ideal({{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {1, 2, 0, 0}});
  EXPECT_EQ(hf(line, 5), (std::vector<long>{1, 2, 3, 4, 4, 4}));
  EXPECT_THROW(points_ideal({{1, 2, 0, 0}, {2, 4, 0, 0}}), DomainError);
  EXPECT_TRUE(is_saturated(i));
}

TEST(LocalScheme, CurvilinearOnALine) {
  GradedIdeal c = local_scheme_ideal(1, {Mono::from_exponents({4})},
                                     {parse_affine("1", 1), parse_affine("e1", 1), parse_affine("0", 1), parse_affine("0", 1)});
  EXPECT_TRUE(c.equal_up_to(ideal(4, {"x3", "x4", "x2^4"}), 6));
  EXPECT_EQ(socle_dimension(c, {1, 0, 0, 0}), 1u);
  EXPECT_EQ(local_length(c, {1, 0, 0, 0}), 4u);
}

TEST(LocalScheme, NonGorensteinLimitScheme) {
  GradedIdeal s = ex37_scheme();
  EXPECT_EQ(hf(s, 5), (std::vector<long>{1, 5, 5, 5, 5, 5}));
  EXPECT_EQ(socle_dimension(s, {1, 0, 0, 0, 0}), 2u);
  EXPECT_FALSE(is_locally_gorenstein(s, {1, 0, 0, 0, 0}));
  EXPECT_THROW(socle_dimension(s, {0, 1, 0, 0, 0}), DomainError);
  auto aq = apolar_quadrics(s, 3);
  EXPECT_FALSE(aq.witness.has_value());
  EXPECT_TRUE(aq.absence_certified);
}

TEST(LocalScheme, Example37FiberIsTheLimitScheme) {
  GradedIdeal sat = saturate(ideal(5, ex37(false)));
  EXPECT_EQ(hf(sat, 6), (std::vector<long>{1, 3, 4, 5, 5, 5, 5}));
  EXPECT_EQ(socle_dimension(sat, {0, 1, 0, 0, 0}), 2u);
  EXPECT_EQ(local_length(sat, {0, 1, 0, 0, 0}), 5u);
}

TEST(Gorenstein, WitnessIffLocallyGorenstein) {
  ScalarRng rng(17);
  for (int t = 0; t < 8; ++t) {
    std::vector<Point> pts;
    for (int k = 0; k < 4; ++k) pts.push_back(random_point(rng, 4));
    GradedIdeal i = points_ideal(pts);
    if (i.hilbert(1) != 4) continue;
    for (const auto& p : pts) EXPECT_TRUE(is_locally_gorenstein(i, p));
    EXPECT_TRUE(apolar_quadrics(i, t).witness.has_value());
  }
  GradedIdeal curv = local_scheme_ideal(1, {Mono::from_exponents({4})},
                                        {parse_affine("1", 1), parse_affine("e1", 1), parse_affine("e1^2", 1), parse_affine("e1^3", 1)});
  EXPECT_TRUE(is_locally_gorenstein(curv, {1, 0, 0, 0}));
  EXPECT_TRUE(apolar_quadrics(curv, 1).witness.has_value());
  // length-3 fat point plus a point
  GradedIdeal fat = local_scheme_ideal(2, {Mono::from_exponents({2, 0}), Mono::from_exponents({1, 1}), Mono::from_exponents({0, 2})},
                                       {parse_affine("1", 2), parse_affine("e1", 2), parse_affine("e2", 2), parse_affine("0", 2)});
  GradedIdeal mixed = intersect_ideals(fat, points_ideal({{0, 0, 0, 1}}), 6);
  EXPECT_EQ(hf(mixed, 4), (std::vector<long>{1, 4, 4, 4, 4}));
  EXPECT_TRUE(is_locally_gorenstein(mixed, {0, 0, 0, 1}));
  EXPECT_FALSE(is_locally_gorenstein(mixed, {1, 0, 0, 0}));
  auto aq = apolar_quadrics(mixed, 1);
  EXPECT_FALSE(aq.witness.has_value());
  EXPECT_TRUE(aq.absence_certified);
}

TEST(PolarSimplex, SumOfSquares) {
  Quadric q = Quadric::parse("y1^2 + y2^2 + y3^2 + y4^2", 4);
  PolarSimplex base = polar_base(q);
  EXPECT_EQ(base.points(), (std::vector<Point>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    PolarSimplex s = polar_simplex_sample(q, seed, true);
    EXPECT_TRUE(s.certify(q));
    for (const auto& w : s.weights) EXPECT_EQ(w, 1);
    VpsVerdict v = check_vps(points_ideal(s.points()), q);
    EXPECT_TRUE(v.in_vps);
    EXPECT_TRUE(v.saturated);
  }
}

TEST(PolarSimplex, SplitFormHasSignedWeights) {
  PolarSimplex base = polar_base(kQ4);
  EXPECT_TRUE(base.certify(kQ4));
  std::vector<Scalar> w = base.weights;
  std::sort(w.begin(), w.end());
  EXPECT_EQ(w, (std::vector<Scalar>{-1, -1, 1, 1}));
  EXPECT_THROW(polar_simplex_sample(kQ4, 1, true), UnsupportedQuadric);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    PolarSimplex s = polar_simplex_sample(kQ4, seed);
    EXPECT_TRUE(s.certify(kQ4));
    VpsVerdict v = check_vps(points_ideal(s.points()), kQ4);
    EXPECT_TRUE(v.in_vps);
    EXPECT_TRUE(v.saturated);
  }
  PolarSimplex five = polar_simplex_sample(kQ5, 9);
  EXPECT_TRUE(five.certify(kQ5));
  EXPECT_TRUE(check_vps(points_ideal(five.points()), kQ5).in_vps);
}

TEST(Cayley, OrthogonalityIsExact) {
  EXPECT_EQ(cayley_transform(kQ4, ExactMatrix(4, 4)), ExactMatrix::identity(4));
  for (const auto& q : {kQ4, kQ5, Quadric::parse("y1^2 + y2^2 + y3^2", 3), Quadric::parse("2*y1^2 - y1*y2 + 3*y2^2", 2)}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      ExactMatrix g = cayley_orthogonal(q, seed);
      EXPECT_EQ(g.transpose() * q.matrix * g, q.matrix);
    }
  }
  EXPECT_THROW(cayley_transform(kQ4, ExactMatrix::identity(4)), DomainError);
}

TEST(CheckVps, ExampleIdeals) {
  VpsVerdict a = check_vps(ideal(4, kEx11), kQ4);
  EXPECT_TRUE(a.in_vps);
  EXPECT_TRUE(a.saturated);
  EXPECT_FALSE(a.sbl_necessary.has_value());

  VpsVerdict b = check_vps(ideal(4, kEx11Limit), kQ4);
  EXPECT_TRUE(b.in_vps);
  EXPECT_FALSE(b.saturated);
  ASSERT_TRUE(b.line.has_value());
  EXPECT_EQ(*b.line, LinearSubspace::from_forms({ty(4, "y1"), ty(4, "y2")}, Ring::T, 4));
  EXPECT_TRUE(b.criteria_apply);
  EXPECT_EQ(b.sbl_necessary, std::optional<bool>(true));
  EXPECT_EQ(b.kri, std::optional<bool>(true));

  VpsVerdict c = check_vps(ideal(4, {"x1*x2", "x3^2"}), kQ4);
  EXPECT_FALSE(c.in_vps);
  VpsVerdict d = check_vps(ideal(4, {"x1^2", "x2*x4", "x3*x4", "x1*x3", "x1*x2", "x2*x3"}), kQ4);
  EXPECT_FALSE(d.in_vps);
}

TEST(UnsatLimit, LineInInverseQuadric) {
  UnsatLimit u = build_unsat_limit(ideal(4, {"x3", "x4", "x2^4"}), kQ4);
  EXPECT_TRUE(u.line_in_inverse);
  EXPECT_TRUE(u.hilbert_ok);
  EXPECT_TRUE(u.ideal.equal_up_to(ideal(4, kEx11Limit), 6));
  VpsVerdict v = check_vps(u.ideal, kQ4);
  EXPECT_TRUE(v.in_vps && !v.saturated);
  EXPECT_EQ(v.sbl_necessary, std::optional<bool>(true));
  EXPECT_EQ(v.kri, std::optional<bool>(true));
  EXPECT_TRUE(sbl_necessary(u.ideal));
  EXPECT_TRUE(kri_check(u.ideal, kQ4));
}

TEST(UnsatLimit, LineNotInInverseQuadric) {
  UnsatLimit u = build_unsat_limit(ideal(4, {"x2", "x3", "x1^4"}), kQ4);
  EXPECT_FALSE(u.line_in_inverse);
  EXPECT_TRUE(u.hilbert_ok);
  VpsVerdict v = check_vps(u.ideal, kQ4);
  EXPECT_TRUE(v.in_vps && !v.saturated);
  EXPECT_EQ(v.kri, std::optional<bool>(false));
  EXPECT_EQ(v.sbl_necessary, std::optional<bool>(false));
  EXPECT_THROW(build_unsat_limit(ideal(4, kEx11), kQ4), DomainError);
  EXPECT_THROW(sbl_necessary(ideal(4, kEx11)), DomainError);
}

TEST(UnsatLimit, DistinctCollinearPoints) {
  UnsatLimit u = build_unsat_limit(points_ideal({{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {1, -1, 0, 0}}), kQ4);
  EXPECT_TRUE(u.hilbert_ok);
  EXPECT_FALSE(is_saturated(u.ideal));
  EXPECT_TRUE(u.line_in_inverse);
}

TEST(UnsatLimit, KriFalseImpliesSblFalse) {
  ScalarRng rng(31);
  int with_line_in_inverse = 0, without = 0;
  for (std::uint64_t t = 0; t < 12; ++t) {
    // lines in Q^{-1} are images of span(y1,y2) under SO(q); others are random
    std::vector<Point> basis;
    if (t % 2 == 0) {
      ExactMatrix gt = cayley_orthogonal(kQ4, t + 100).transpose();
      basis = {gt.apply({1, 0, 0, 0}), gt.apply({0, 1, 0, 0})};
    } else {
      basis = {random_point(rng, 4), random_point(rng, 4)};
    }
    std::vector<Point> pts;
    for (int k = 0; k < 4; ++k) {
      Point p(4);
      for (int i = 0; i < 4; ++i) p[i] = basis[0][i] + Scalar(k * k - 2 * k + 3) * basis[1][i] * (k == 0 ? 0 : 1);
      pts.push_back(p);
    }
    GradedIdeal gamma;
    try {
      gamma = points_ideal(pts);
    } catch (const DomainError&) {
      continue;
    }
    if (gamma.hilbert(1) != 2) continue;
    UnsatLimit u = build_unsat_limit(gamma, kQ4);
    if (!u.hilbert_ok) continue;
    VpsVerdict v = check_vps(u.ideal, kQ4);
    ASSERT_TRUE(v.kri.has_value());
    if (!*v.kri) EXPECT_FALSE(*v.sbl_necessary);
    EXPECT_EQ(*v.kri, u.line_in_inverse);
    (u.line_in_inverse ? with_line_in_inverse : without)++;
  }
  EXPECT_GT(with_line_in_inverse, 0);
  EXPECT_GT(without, 0);
}

TEST(LineInInverse, Examples) {
  EXPECT_TRUE(line_in_inverse_quadric(LinearSubspace::from_forms({ty(4, "y1"), ty(4, "y2")}, Ring::T, 4), kQ4));
  Quadric sq = Quadric::parse("y1^2 + y2^2 + y3^2 + y4^2", 4);
  ScalarRng rng(4);
  for (int t = 0; t < 10; ++t) {
    LinearSubspace l(Ring::T, 4, {random_point(rng, 4), random_point(rng, 4)});
    if (l.dim() == 2) EXPECT_FALSE(line_in_inverse_quadric(l, sq));
  }
  // both rulings of 4x1x4 + 4x2x3 = 0
  for (int a = -2; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      LinearSubspace r1(Ring::T, 4, {{a, 0, b, 0}, {0, a, 0, -b}});
      LinearSubspace r2(Ring::T, 4, {{b, -a, 0, 0}, {0, 0, b, a}});
      EXPECT_TRUE(line_in_inverse_quadric(r1, kQ4)) << a << "," << b;
      EXPECT_TRUE(line_in_inverse_quadric(r2, kQ4)) << a << "," << b;
    }
}

TEST(Families, F1PointOnPolarPlane) {
  GradedIdeal gamma = ideal(5, {"x3", "x4", "x5", "x2^4"});
  FamilyMember on = family_builder(FamilyKind::F1, {gamma, Point{1, 1, 0, 0, 1}, std::nullopt}, kQ5);
  EXPECT_TRUE(on.generic);
  VpsVerdict v = check_vps(on.ideal, kQ5);
  EXPECT_TRUE(v.in_vps && !v.saturated && v.criteria_apply);
  EXPECT_EQ(v.kri, std::optional<bool>(true));
  EXPECT_EQ(v.sbl_necessary, std::optional<bool>(true));

  FamilyMember off = family_builder(FamilyKind::F1, {gamma, Point{1, 2, 3, 1, 1}, std::nullopt}, kQ5);
  VpsVerdict w = check_vps(off.ideal, kQ5);
  EXPECT_TRUE(w.in_vps && !w.saturated);
  EXPECT_EQ(w.kri, std::optional<bool>(false));
  EXPECT_EQ(w.sbl_necessary, std::optional<bool>(false));

  EXPECT_THROW(family_builder(FamilyKind::F1, {gamma, Point{1, 1, 0, 0, 0}, std::nullopt}, kQ5), DegenerateParameters);
}

TEST(Families, F2) {
  GradedIdeal gamma = ideal(5, {"x3", "x4", "x5", "x2^5"});
  FamilyMember m = family_builder(FamilyKind::F2, {gamma, std::nullopt, ty(5, "y1^2*y5")}, kQ5);
  EXPECT_TRUE(m.generic);
  VpsVerdict v = check_vps(m.ideal, kQ5);
  EXPECT_TRUE(v.in_vps && !v.saturated);
  EXPECT_FALSE(v.criteria_apply);
  EXPECT_EQ(v.sbl_necessary, std::optional<bool>(false));
  EXPECT_THROW(family_builder(FamilyKind::F2, {gamma, std::nullopt, ty(5, "y1^3 + y2^2*y5 + y3*y4*y5 + y1*y3^2 + y5^3")}, kQ5),
               DegenerateParameters);
}

TEST(Families, Example37Fibers) {
  Quadric q = Quadric::parse("y1*y4 + y2*y3 + 1/2*y5^2", 5);
  VpsVerdict t1 = check_vps(ideal(5, ex37(true)), q);
  EXPECT_TRUE(t1.in_vps);
  EXPECT_TRUE(t1.saturated);
  VpsVerdict t0 = check_vps(ideal(5, ex37(false)), q);
  EXPECT_TRUE(t0.in_vps);
  EXPECT_FALSE(t0.saturated);
  EXPECT_TRUE(t0.criteria_apply);
  EXPECT_EQ(t0.kri, std::optional<bool>(true));
  EXPECT_EQ(t0.sbl_necessary, std::optional<bool>(true));
  EXPECT_FALSE(check_vps(ideal(5, ex37(false)), kQ5).in_vps);
}

TEST(Macaulay, AgreesWithLexSegments) {
  EXPECT_EQ(macaulay_bound(3, 2), 4);
  for (int d = 1; d < 6; ++d) EXPECT_EQ(macaulay_bound(1, d), 1);
  EXPECT_EQ(macaulay_bound(3, 2), oracle::lex_segment_growth(3, 2, 3));
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d)
      for (long h = 0; h <= num_monomials(n, d); ++h)
        EXPECT_EQ(macaulay_bound(h, d), oracle::lex_segment_growth(n, d, h)) << n << " " << d << " " << h;
  // H(2) = n - 1 for n = 4, 5 allows at most H(m) = m + 1, m + 2
  for (int m = 2; m < 8; ++m) EXPECT_EQ(macaulay_bound(m + 1, m), m + 2);
  EXPECT_EQ(macaulay_bound(4, 2), 5);
  for (int m = 3; m < 8; ++m) EXPECT_EQ(macaulay_bound(m + 2, m), m + 3);
}

TEST(Macaulay, HilbertFunctionsObeyTheBound) {
  for (const auto& i : {ideal(4, kEx11), ideal(4, kEx11Limit), ideal(5, ex37(false)), ideal(4, {"x3", "x4", "x2^4"})}) {
    HilbFn h = hilbert_function(i, 8);
    for (int d = 1; d < 8; ++d) EXPECT_LE(h.values[d + 1], macaulay_bound(h.values[d], d));
  }
}
