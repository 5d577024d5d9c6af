#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vps/apolarity.hpp"
#include "vps/grobner.hpp"
#include "vps/ideal.hpp"

namespace vps {

using Point = std::vector<Scalar>;

/// A finite scheme given either by distinct rational points or by a saturated ideal.
struct SchemeSpec {
  std::vector<Point> points;
  std::optional<GradedIdeal> ideal;

  static SchemeSpec from_points(std::vector<Point> pts) { return {std::move(pts), std::nullopt}; }
  static SchemeSpec from_ideal(GradedIdeal i) { return {{}, std::move(i)}; }
};

/// Ideal of distinct points: I_d = ker(S_d -> k^points). d_max defaults to
/// the number of points. Repeated points throw DomainError.
GradedIdeal points_ideal(const std::vector<Point>& points, int d_max = -1);
/// Ideal variant is checked for saturation (DomainError otherwise).
GradedIdeal points_ideal(const SchemeSpec& spec, int d_max = -1);

/// Ideal of the scheme Spec k[e1..ek]/(relations) embedded by x_i -> images[i].
/// The relations must be monomials cutting out a finite-length algebra.
GradedIdeal local_scheme_ideal(int local_vars, const std::vector<Mono>& relations, const std::vector<AffinePoly>& images,
                               int d_max = -1);

/// n linear forms with q = sum weights[i] * forms[i]^2.
struct PolarSimplex {
  std::vector<Form> forms;
  std::vector<Scalar> weights;

  [[nodiscard]] std::vector<Point> points() const;
  /// True when the weighted sum of squares expands to q exactly.
  [[nodiscard]] bool certify(const Quadric& q) const;
};

/// Rational diagonalization of q; weights are reduced to squarefree integers.
PolarSimplex polar_base(const Quadric& q);

/// g = (I - B)(I + B)^{-1} with B = A^{-1}K; throws DomainError if I + B is singular.
ExactMatrix cayley_transform(const Quadric& q, const ExactMatrix& skew);
/// Cayley transform of a seeded random integer skew matrix, retrying on singular I + B.
ExactMatrix cayley_orthogonal(const Quadric& q, std::uint64_t seed, long bound = 3);

/// Seeded polar simplex: the base decomposition moved by a Cayley-rational
/// element of SO(q). With unit_weights, throws UnsupportedQuadric unless
/// q is a plain sum of rational squares in the base decomposition.
PolarSimplex polar_simplex_sample(const Quadric& q, std::uint64_t seed, bool unit_weights = false);

struct VpsVerdict {
  bool in_vps = false;
  bool saturated = false;
  std::optional<bool> sbl_necessary;
  std::optional<bool> kri;
  std::optional<LinearSubspace> line;
  /// I^sat has Hilbert function (1,n-2,n-1,n,n,...), the setting of both line criteria.
  bool criteria_apply = false;
  HilbFn hilbert;
  std::string details;
};

/// The unique line in V(J) for J = sat((sat_ideal)_2), as a subspace of T_1.
std::optional<LinearSubspace> detect_line(const GradedIdeal& sat_ideal, std::uint64_t seed = 0);

/// Ideal of the linear subspace L ⊂ T_1, generated by L^⊥.
GradedIdeal linear_ideal(const LinearSubspace& line);

VpsVerdict check_vps(const GradedIdeal& ideal, const Quadric& q);

/// I^sat · I_L ⊆ I, generator by generator. Throws DomainError if no line is found.
bool sbl_necessary(const GradedIdeal& ideal);
/// q^{-1}(L·N) = 0 with N = ((I^sat)_1)^⊥. Throws DomainError if no line is found.
bool kri_check(const GradedIdeal& ideal, const Quadric& q);
/// q^{-1} vanishes on Sym^2(L).
bool line_in_inverse_quadric(const LinearSubspace& line, const Quadric& q);

struct UnsatLimit {
  GradedIdeal ideal;
  LinearSubspace line;
  bool line_in_inverse = false;
  bool hilbert_ok = false;  ///< H_{S/I} = (1,4,4,...)
};

/// I_Γ ∩ q^⊥ for a length-4 subscheme Γ of a line in P^3.
UnsatLimit build_unsat_limit(const GradedIdeal& gamma, const Quadric& q);

enum class FamilyKind { F1, F2 };

struct FamilyParams {
  GradedIdeal gamma;            ///< subscheme of a line: length 4 (F1) or 5 (F2)
  std::optional<Point> point;   ///< F1: the extra point
  std::optional<Form> cubic;    ///< F2: the cubic c in T_3
};

struct FamilyMember {
  GradedIdeal ideal;
  LinearSubspace line;
  bool generic = false;  ///< H_{S/I} = (1,5,5,...) up to the determinacy bound
  std::string details;
};

/// F1: I_{Γ' ∪ p} ∩ q^⊥; F2: I_Γ ∩ c^⊥ ∩ q^⊥ (n = 5).
FamilyMember family_builder(FamilyKind kind, const FamilyParams& params, const Quadric& q);

/// Socle dimension of the local algebra of Γ at the point; DomainError when the point is not in Γ.
std::size_t socle_dimension(const GradedIdeal& gamma, const Point& point);
/// Length of the local algebra of Γ at the point.
std::size_t local_length(const GradedIdeal& gamma, const Point& point);
bool is_locally_gorenstein(const GradedIdeal& gamma, const Point& point);

/// Largest H(d+1) allowed by Macaulay's theorem given H(d) = h.
long macaulay_bound(long h, int d);

}  // namespace vps
