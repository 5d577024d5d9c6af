#pragma once

#include <map>
#include <optional>
#include <vector>

#include "vps/apolarity.hpp"
#include "vps/ideal.hpp"
#include "vps/limits.hpp"

namespace vps {

/// A degree-0 Hom tangent space: basis[t][i] is the image of generators[i]
/// under the t-th basis map, in normal form modulo `quotient`.
struct TangentReport {
  std::size_t dimension = 0;
  std::vector<Form> generators;
  std::vector<std::vector<Form>> basis;
  std::optional<std::vector<long>> weights;
  int truncation_degree = 0;
  GradedIdeal quotient;
};

/// Hom((V) + S_{>=4}, T/((V) + S_{>=4}))_0 with T = S, or T = q^⊥ when q is
/// given: maps V -> T_2/V killing every linear syzygy in (S/(V))_3.
/// Requires V ⊆ S_2, H_{S/(V)}(3) = n and V ⊆ q^⊥ (DomainError otherwise).
TangentReport syz_tangent(const FormSpace& v, const std::optional<Quadric>& q = std::nullopt);

/// Hom(I, S/I)_0 with the syzygy constraints of degree <= truncation.
TangentReport hom_tangent(const GradedIdeal& ideal, int truncation);

/// Hom(I, S/I)_0 for H_{S/I} = (1,n,n,...), truncation raised until two
/// consecutive values agree; Unstable past 2 * max generator degree + 4.
TangentReport hilb_tangent(const GradedIdeal& ideal);

/// True when the map g_i -> images[i] (reduced modulo the quotient) is in the span of the report.
bool tangent_contains(const TangentReport& report, const std::vector<Form>& images);

/// The tangent vector induced by x -> x + εFx: g_i -> sum_j (Fx)_j ∂_j g_i.
std::vector<Form> induced_tangent_vector(const TangentReport& report, const ExactMatrix& f);

/// Dimensions of the weight spaces of a torus-fixed space; DomainError otherwise.
std::map<long, std::size_t> weight_decomposition(const FormSpace& space, const WeightVec& w);

/// Weights (sorted, with multiplicity) of a map g -> φ(g): w(φ(g)) - w(g).
/// DomainError when a generator is not weight-homogeneous or the span is not torus-stable.
std::vector<long> torus_weights(const TangentReport& report, const WeightVec& w);

/// Standard torus diag(t, 1/t) of the SL_2 acting on k[x1..x4] by the 4x4 embedding below.
WeightVec sl2_torus_n4();
/// The matrix [[a00,0,a10,0],[0,a00,0,-a10],[a01,0,a11,0],[0,-a01,0,a11]].
ExactMatrix sl2_matrix_n4(const Scalar& a00, const Scalar& a01, const Scalar& a10, const Scalar& a11);

/// Excess-intersection bookkeeping for the two curves of degree hc with normal bundle degree c1n.
struct ExcessReport {
  long per_curve = 0;  ///< 6 * hc - c1n
  long excess = 0;     ///< 2 * per_curve
  long total = 0;      ///< 310 + excess
};
ExcessReport excess_degree_arithmetic(long hc, long c1n);
/// c1 of O(twist)^rank on P^1.
long split_bundle_degree(long rank, long twist);
/// a with -2 = c1n - a * hc (adjunction on a rational curve); DomainError if not integral.
long fano_index_from_adjunction(long c1n, long hc);

}  // namespace vps
