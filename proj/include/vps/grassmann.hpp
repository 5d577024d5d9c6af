#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vps/apolarity.hpp"
#include "vps/formspace.hpp"
#include "vps/matrix.hpp"

namespace vps {

/// Sorted k-subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int m, int k);

/// Maximal minors of a k x m matrix, indexed by k_subsets(m, k) and scaled so
/// that the first nonzero coordinate is 1.
struct PluckerVec {
  int k = 0;
  int m = 0;
  std::vector<Scalar> coords;

  friend bool operator==(const PluckerVec&, const PluckerVec&) = default;
  [[nodiscard]] std::string str() const;
};

/// Throws DomainError when the rows are dependent.
PluckerVec plucker(const ExactMatrix& rows);
/// Coordinates of V in the frame's echelon basis (pivot coefficients); V ⊆ frame required.
ExactMatrix frame_coordinates(const FormSpace& v, const FormSpace& frame);
PluckerVec plucker(const FormSpace& v, const FormSpace& frame);
/// The pinned frame (q^⊥)_2, basis in grevlex-descending pivot order.
FormSpace plucker_frame(const Quadric& q);

/// Quadric in Plücker coordinates: coefficient of p_i p_j (i <= j).
using PluckerQuadric = std::map<std::pair<std::size_t, std::size_t>, Scalar>;
Scalar evaluate(const PluckerQuadric& f, const std::vector<Scalar>& p);

struct PluckerQuadricSpace {
  int k = 0;
  int m = 0;
  std::size_t dimension = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::size_t> modular_dimensions;
  std::size_t samples = 0;
  std::size_t blocks = 0;
  std::vector<PluckerQuadric> quadrics;  ///< exact basis, one torus-weight block at a time
};

/// Quadrics vanishing on Gr(k, m), as kernels of sampled evaluations on each
/// torus-weight block of degree-2 Plücker monomials. Throws Unstable when 25%
/// more samples change a block rank, or the primes and the exact rank disagree.
PluckerQuadricSpace plucker_quadric_space(int k, int m, std::uint64_t seed = 0,
                                          const std::vector<std::uint64_t>& primes = configured_primes());

struct SpanReport {
  std::size_t sample_count = 0;
  std::size_t projective_dimension = 0;
  bool stabilized = false;
  std::vector<std::uint64_t> primes;
  std::vector<std::size_t> ranks;
  bool exact_confirmed = false;  ///< the independent subset has full exact rank
  ExactMatrix basis;             ///< independent Plücker vectors spanning the samples
};

/// Span of the rows (Plücker vectors). Throws Unstable when the rank on the
/// first 80% of rows differs from the full rank or the primes disagree.
SpanReport span_of(const std::vector<PluckerVec>& samples, const std::vector<std::uint64_t>& primes = configured_primes());

/// Plücker vector of (I_Γ)_2 for the seeded polar simplex Γ of q.
PluckerVec polar_simplex_plucker(const Quadric& q, const FormSpace& frame, std::uint64_t seed);

/// Span of `samples` seeded polar simplices, plus `curve_samples` points on each ruling curve when q is split.
SpanReport vps_span(const Quadric& q, std::size_t samples, std::uint64_t seed = 0, std::size_t curve_samples = 4,
                    const std::vector<std::uint64_t>& primes = configured_primes());

struct RestrictionReport {
  std::size_t rank = 0;
  std::size_t target_dimension = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::size_t> ranks;
  std::size_t exact_subset_size = 0;
  std::size_t exact_subset_rank = 0;
  std::size_t exact_subset_modular_rank = 0;
};

/// Rank of f -> f(Σ t_a basis_a) into quadrics in the span coordinates t.
RestrictionReport restrict_quadrics(const std::vector<PluckerQuadric>& quadrics, const ExactMatrix& span_basis,
                                    const std::vector<std::uint64_t>& primes = configured_primes(),
                                    std::size_t exact_subset = 24, std::uint64_t seed = 0);

/// The ruling line L of q^{-1} with parameter [a:b]: ruling 1 has
/// L^⊥ = (a x1 - b x3, a x2 + b x4), ruling 2 has L^⊥ = (a x1 + b x2, -a x3 + b x4).
/// Only q proportional to y1y4 + y2y3 is supported (UnsupportedQuadric otherwise).
LinearSubspace ruling_line(const Quadric& q, int ruling, const Scalar& a, const Scalar& b);
/// (I_L)_2 ∩ (q^⊥)_2 for the ruling line.
FormSpace ruling_space(const Quadric& q, int ruling, const Scalar& a, const Scalar& b);
PluckerVec ruling_curve(const Quadric& q, int ruling, const Scalar& a, const Scalar& b);

struct CurveSample {
  Scalar t;  ///< affine parameter a/b
  PluckerVec point;
};

/// Least d <= 12 such that the samples lie on the image of a degree-d map
/// t -> P(t); fitted on all but two samples and confirmed on the last two.
/// Throws NotPolynomialMap when no such d exists or too few samples are given.
int fit_rnc_degree(const std::vector<CurveSample>& samples);

}  // namespace vps
