#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vps/apolarity.hpp"
#include "vps/ideal.hpp"

namespace vps {

using WeightVec = std::vector<long>;

/// Sum of c * λ^k * parts[k]; all parts share ring, nvars and degree.
struct LaurentForm {
  std::map<long, Form> parts;

  [[nodiscard]] long min_exponent() const { return parts.begin()->first; }
  /// Divides by λ^min_exponent.
  [[nodiscard]] LaurentForm normalized() const;
  [[nodiscard]] Form at(const Scalar& lambda) const;
  [[nodiscard]] std::string str() const;
};

/// Image of generators under x_i -> λ^{w_i} x_i.
struct LaurentFamily {
  WeightVec weights;
  int nvars = 0;
  std::vector<LaurentForm> raw;         ///< before normalization
  std::vector<LaurentForm> generators;  ///< each divided by its lowest λ-power

  /// The fiber at λ = value (value ≠ 0).
  [[nodiscard]] GradedIdeal fiber(const Scalar& value) const;
};

/// Weight of a monomial: w · exponents.
long weight_of(const Mono& m, const WeightVec& w);

LaurentFamily act_torus(const GradedIdeal& ideal, const WeightVec& w);

/// lim_{λ→0} of the span of f(λ^w x), f ∈ V, by iterated rank-drop replacement.
FormSpace weight_limit_piece(const FormSpace& piece, const WeightVec& w);

/// Degreewise limit up to d_max (default: determinacy bound), then generators re-extracted.
GradedIdeal weight_limit(const GradedIdeal& ideal, const WeightVec& w, int d_max = -1);

/// lim_{λ→0} of the point λ^{-w}·p: keeps the coordinates of maximal weight among the nonzero ones.
std::vector<Scalar> point_limit(const std::vector<Scalar>& p, const WeightVec& w);

/// Common weight of the monomials of q, or nullopt if q is not semi-invariant.
std::optional<long> semi_invariant_weight(const Form& q, const WeightVec& w);

struct QuadricDegeneration {
  GradedIdeal limit;
  long q_weight = 0;
  bool limit_apolar = false;
  bool limit_saturated = false;
  bool saturation_apolar = false;
};

/// weight_limit with the semi-invariance precondition (DomainError otherwise) and an apolarity report.
QuadricDegeneration degenerate_on_quadric(const GradedIdeal& ideal, const Quadric& q, const WeightVec& w, int d_max = -1);

}  // namespace vps
