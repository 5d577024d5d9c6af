#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "vps/form.hpp"
#include "vps/formspace.hpp"
#include "vps/ideal.hpp"
#include "vps/matrix.hpp"

namespace vps {

/// Contraction pairing: f (in S_e, or T_e) acts on g (in the dual ring, degree
/// d >= e) as the operator f(∂), with x^a on y^b giving b!/(b-a)! y^(b-a).
Form apply_diff(const Form& f, const Form& g);

/// A quadratic form with its symmetric matrix: form(v) = v^T A v, so a
/// cross-term coefficient c_ij corresponds to A_ij = c_ij / 2.
struct Quadric {
  Form form;
  ExactMatrix matrix;
  std::size_t rank = 0;

  static Quadric from_form(const Form& f);
  static Quadric from_matrix(Ring ring, const ExactMatrix& a);
  static Quadric parse(std::string_view text, int nvars);
  [[nodiscard]] int nvars() const { return form.nvars(); }
  [[nodiscard]] bool full_rank() const { return rank == static_cast<std::size_t>(nvars()); }
  /// v^T A w.
  [[nodiscard]] Scalar bilinear(const std::vector<Scalar>& v, const std::vector<Scalar>& w) const;
};

/// Quadric whose matrix is the inverse; lives in the dual ring.
/// Throws SingularQuadric unless full rank.
Quadric inverse_quadric(const Quadric& q);

/// (g^⊥)_e: kernel of S_e -> T_{d-e}, f -> apply_diff(f, g); all of S_e for e > d.
FormSpace apolar_piece(const Form& g, int e);
/// g^⊥ with generators extracted up to d_max (default deg g + 1).
GradedIdeal apolar_ideal(const Form& g, int d_max = -1);

/// A linear subspace of S_1 or T_1, kept as an rref basis of coordinate rows.
class LinearSubspace {
 public:
  LinearSubspace() = default;
  LinearSubspace(Ring ambient, int nvars, const std::vector<std::vector<Scalar>>& vectors);
  static LinearSubspace from_forms(const std::vector<Form>& linear_forms, Ring ambient, int nvars);

  [[nodiscard]] Ring ambient() const { return ambient_; }
  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
  [[nodiscard]] const ExactMatrix& basis() const { return basis_; }
  [[nodiscard]] std::vector<Form> forms() const;
  /// Annihilator in the dual ring's degree-1 piece.
  [[nodiscard]] LinearSubspace perp() const;
  [[nodiscard]] bool contains(const std::vector<Scalar>& v) const;
  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b);
  [[nodiscard]] std::string str() const;

 private:
  Ring ambient_ = Ring::T;
  int nvars_ = 0;
  ExactMatrix basis_;
};

/// Image of a subspace of the dual ring under the collineation v -> apply_diff(v, q).
LinearSubspace collineation_image(const Quadric& q, const LinearSubspace& v);

/// The six equivalent conditions of the polarity lemma for L, N in T_1:
/// (1) L^⊥·N^⊥ ⊆ q^⊥, (2) q(L^⊥·N^⊥) = 0, (3) q(L^⊥) = N,
/// (4) q^{-1}(N) = L^⊥, (5) q^{-1}(N·L) = 0, (6) N·L ⊆ (q^{-1})^⊥.
/// Throws DomainError unless dim L + dim N = n.
std::array<bool, 6> polarity_conditions(const LinearSubspace& L, const LinearSubspace& N, const Quadric& q);

struct ApolarQuadrics {
  std::vector<Form> space;         ///< basis of {q in T_2 : q(I_2) = 0}
  std::optional<Quadric> witness;  ///< a full-rank member, when found
  bool absence_certified = false;  ///< determinant shown to vanish on the whole space
};

/// Quadrics annihilating I_2 and a full-rank witness. Requires H_{S/I}(1) = n
/// (NotLinearlyNormal otherwise).
ApolarQuadrics apolar_quadrics(const GradedIdeal& ideal, std::uint64_t seed = 0);

/// First-order orthogonalization: given v_k = basis of (I0)_2 (rref order)
/// and deformation images delta_k in S_2, finds F with
/// q((Id + εF)∘(v_k + ε delta_k)) = 0 mod ε² for every k, where (Id+εF)
/// acts by the substitution x -> x + εFx. Throws Infeasible if none exists.
ExactMatrix orthogonalize_first_order(const GradedIdeal& i0, const Quadric& q, const std::vector<Form>& deformation);

/// sum_i (sum_j F_ij x_j) ∂_i v, the first-order action of Id + εF.
Form derivation(const Form& v, const ExactMatrix& f);

/// Both ε-coefficients of q((Id + εF)∘(v + ε delta)), by dual-number expansion.
std::array<Scalar, 2> first_order_residual(const Form& v, const Form& delta, const ExactMatrix& f, const Quadric& q);

}  // namespace vps
