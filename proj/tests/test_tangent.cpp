#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "vps/errors.hpp"
#include "vps/grobner.hpp"
#include "vps/tangent.hpp"
#include "vps/vps.hpp"

using namespace vps;
using namespace vps::test;

namespace {

const Quadric kQ4 = Quadric::parse("y1*y4 + y2*y3", 4);

FormSpace quadrics_of(const std::vector<std::string>& gens, int n) {
  std::vector<Form> fs;
  for (const auto& g : gens) fs.push_back(sx(n, g));
  return FormSpace::span(Ring::S, n, 2, fs);
}

// Dense oracle: φ: V -> S_2 with Σ σ_{j,i} x_j φ(v_i) ∈ (V)_3 for every left-kernel
// vector σ of the multiplication matrix S_1 ⊗ V -> S_3; maps into V are trivial.
std::size_t dense_syz_tangent(const FormSpace& v, const std::optional<Quadric>& q) {
  const int n = v.nvars();
  auto basis = v.basis();
  const std::size_t k = basis.size();
  const auto& s2 = monomials_of_degree(n, 2);
  const auto& s3 = monomials_of_degree(n, 3);
  auto idx3 = [&](const Mono& m) { return std::find(s3.begin(), s3.end(), m) - s3.begin(); };
  ExactMatrix mult(n * k, s3.size());
  FormSpace v3(Ring::S, n, 3);
  for (int j = 0; j < n; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      Form p = basis[i].times(Mono::var(j));
      v3.insert(p);
      for (const auto& [m, c] : p.terms()) mult(j * k + i, idx3(m)) = c;
    }
  ExactMatrix sig = left_kernel(mult);
  std::vector<Form> targets;
  if (q) {
    targets = apolar_piece(q->form, 2).basis();
  } else {
    for (const auto& m : s2) targets.push_back(Form::monomial(Ring::S, n, m));
  }
  const std::size_t t = targets.size();
  ExactMatrix cons(0, k * t);
  for (std::size_t r = 0; r < sig.rows(); ++r) {
    std::vector<Form> cols;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t a = 0; a < t; ++a) {
        Form acc(Ring::S, n, 3);
        for (int j = 0; j < n; ++j)
          if (sig(r, j * k + i) != 0) acc.axpy(sig(r, j * k + i), targets[a].times(Mono::var(j)));
        cols.push_back(v3.reduce(acc));
      }
    for (const auto& m : s3) {
      std::vector<Scalar> row(k * t);
      bool any = false;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        row[c] = cols[c].coeff(m);
        any = any || row[c] != 0;
      }
      if (any) cons.append_row(row);
    }
  }
  const std::size_t valid = k * t - (cons.rows() ? rank(cons) : 0);
  return valid - k * k;
}

FormSpace substituted(const FormSpace& v, const std::vector<std::vector<Scalar>>& m) {
  std::vector<Form> out;
  for (const auto& f : v.basis()) out.push_back(f.substitute_linear(m));
  return FormSpace::span(v.ring(), v.nvars(), v.degree(), out);
}

const std::vector<std::string> kSimplex = {"x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4"};

}  // namespace

TEST(SyzTangent, NormalBundlePoint) {
  FormSpace v = quadrics_of(kEqIdeal, 4);
  TangentReport r = syz_tangent(v, kQ4);
  EXPECT_EQ(r.dimension, 9u);
  EXPECT_EQ(r.dimension, dense_syz_tangent(v, kQ4));
  EXPECT_EQ(torus_weights(r, sl2_torus_n4()), std::vector<long>(9, 2));
  EXPECT_EQ(torus_weights(r, {0, 0, 0, 0}), std::vector<long>(9, 0));
  auto dec = weight_decomposition(v, sl2_torus_n4());
  EXPECT_EQ(dec, (std::map<long, std::size_t>{{-2, 3}, {0, 3}}));
  TangentReport full = syz_tangent(v);
  EXPECT_GT(full.dimension, 9u);
  EXPECT_EQ(full.dimension, dense_syz_tangent(v, std::nullopt));
}

TEST(SyzTangent, GoodPointsGiveTwelve) {
  EXPECT_EQ(syz_tangent(quadrics_of(kSimplex, 4)).dimension, 12u);
  EXPECT_EQ(dense_syz_tangent(quadrics_of(kSimplex, 4), std::nullopt), 12u);
  Quadric q = Quadric::parse("y1^2 + y2^2 + y3^2 + y4^2", 4);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    GradedIdeal i = points_ideal(polar_simplex_sample(q, seed).points());
    EXPECT_EQ(syz_tangent(i.piece(2)).dimension, 12u) << seed;
    EXPECT_EQ(syz_tangent(i.piece(2), q).dimension, 6u) << seed;
    EXPECT_EQ(dense_syz_tangent(i.piece(2), q), 6u) << seed;
  }
}

TEST(SyzTangent, InvariantUnderCoordinateChange) {
  ScalarRng rng(19);
  FormSpace v = quadrics_of(kEqIdeal, 4);
  const std::size_t base = syz_tangent(v).dimension;
  for (int t = 0; t < 5; ++t) {
    std::vector<std::vector<Scalar>> m(4, std::vector<Scalar>(4));
    do {
      for (auto& row : m)
        for (auto& c : row) c = rng.small_int(3);
    } while (determinant(ExactMatrix::from_rows(m)) == 0);
    EXPECT_EQ(syz_tangent(substituted(v, m)).dimension, base);
  }
}

TEST(SyzTangent, SymmetriesAreTangent) {
  FormSpace v = quadrics_of(kEqIdeal, 4);
  TangentReport r = syz_tangent(v, kQ4);
  ExactMatrix id = ExactMatrix::identity(4);
  for (auto m : {sl2_matrix_n4(1, 1, 0, 1), sl2_matrix_n4(1, 0, 1, 1)}) {
    auto images = induced_tangent_vector(r, m - id);
    EXPECT_TRUE(tangent_contains(r, images));
  }
  ExactMatrix e(4, 4);
  e(0, 1) = 1;
  EXPECT_FALSE(tangent_contains(r, induced_tangent_vector(r, e)));
}

TEST(SyzTangent, Preconditions) {
  EXPECT_THROW(syz_tangent(quadrics_of({"x1*x2"}, 4)), DomainError);
  EXPECT_THROW(syz_tangent(quadrics_of(kSimplex, 4), kQ4), DomainError);
}

TEST(SyzTangent, AgreesWithHomOnTruncatedIdeal) {
  for (const auto& gens : {kEqIdeal, kSimplex}) {
    FormSpace v = quadrics_of(gens, 4);
    std::vector<Form> all = v.basis();
    for (const auto& m : monomials_of_degree(4, 4)) all.push_back(Form::monomial(Ring::S, 4, m));
    GradedIdeal j(Ring::S, 4, all);
    EXPECT_EQ(hom_tangent(j, 5).dimension, syz_tangent(v).dimension);
  }
}

TEST(SyzTangent, TorusWeightsIndependentOfBasis) {
  TangentReport r = syz_tangent(quadrics_of(kEqIdeal, 4));
  auto w = torus_weights(r, sl2_torus_n4());
  ScalarRng rng(5);
  TangentReport mixed = r;
  for (auto& b : mixed.basis)
    for (const auto& other : r.basis) {
      Scalar c = rng.small_int(2);
      for (std::size_t i = 0; i < b.size(); ++i) b[i].axpy(c, other[i]);
    }
  ASSERT_TRUE(std::all_of(mixed.basis.begin(), mixed.basis.end(), [&](const auto& b) { return tangent_contains(r, b); }));
  EXPECT_EQ(torus_weights(mixed, sl2_torus_n4()), w);
  EXPECT_THROW(torus_weights(syz_tangent(substituted(quadrics_of(kEqIdeal, 4), {{1, 1, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}})),
                             sl2_torus_n4()),
               DomainError);
}

TEST(HilbTangent, ReducedPoints) {
  TangentReport r = hilb_tangent(ideal(4, kSimplex));
  EXPECT_EQ(r.dimension, 12u);
  ScalarRng rng(8);
  for (int t = 0; t < 3; ++t) {
    std::vector<Point> pts;
    for (int k = 0; k < 4; ++k) {
      Point p(4);
      for (auto& c : p) c = rng.small_int(5);
      pts.push_back(p);
    }
    GradedIdeal i = points_ideal(pts);
    if (i.hilbert(1) != 4) continue;
    TangentReport ri = hilb_tangent(i);
    EXPECT_EQ(ri.dimension, 12u);
    ExactMatrix f(4, 4);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) f(a, b) = rng.small_int(2);
    EXPECT_TRUE(tangent_contains(ri, induced_tangent_vector(ri, f)));
  }
}

TEST(HilbTangent, UnsaturatedLimitBound) {
  TangentReport r = hilb_tangent(ideal(4, kEx11Limit));
  EXPECT_LE(r.dimension, 15u);
  EXPECT_EQ(r.dimension, 15u);
  EXPECT_THROW(hilb_tangent(ideal(4, {"x1", "x2"})), DomainError);
}

TEST(Excess, Arithmetic) {
  ExcessReport e = excess_degree_arithmetic(6, split_bundle_degree(5, 2));
  EXPECT_EQ(e.per_curve, 26);
  EXPECT_EQ(e.excess, 52);
  EXPECT_EQ(e.total, 362);
  EXPECT_EQ(fano_index_from_adjunction(10, 6), 2);
  EXPECT_EQ(-2, 10 - fano_index_from_adjunction(10, 6) * 6);
  EXPECT_THROW(fano_index_from_adjunction(9, 6), DomainError);
}
