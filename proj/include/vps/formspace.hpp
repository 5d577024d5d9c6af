#pragma once

#include <map>
#include <vector>

#include "vps/form.hpp"

namespace vps {

/// A subspace of the forms of one degree, stored as a fully reduced echelon
/// basis: every row is monic, rows are keyed by their grevlex-leading
/// monomial, and no pivot monomial occurs in any other row.
class FormSpace {
 public:
  FormSpace() = default;
  FormSpace(Ring ring, int nvars, int degree) : ring_(ring), nvars_(nvars), degree_(degree) {}
  /// The whole space of degree-d forms.
  static FormSpace full(Ring ring, int nvars, int degree);
  static FormSpace span(Ring ring, int nvars, int degree, const std::vector<Form>& forms);

  [[nodiscard]] Ring ring() const { return ring_; }
  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] std::size_t dim() const { return rows_.size(); }
  [[nodiscard]] std::size_t codim() const { return static_cast<std::size_t>(num_monomials(nvars_, degree_)) - dim(); }

  /// Returns true when `f` enlarged the space.
  bool insert(const Form& f);
  /// Remainder of f modulo the space (no pivot monomial survives).
  [[nodiscard]] Form reduce(const Form& f) const;
  [[nodiscard]] bool contains(const Form& f) const { return reduce(f).is_zero(); }
  [[nodiscard]] bool contains(const FormSpace& other) const;
  [[nodiscard]] bool is_pivot(const Mono& m) const { return rows_.count(m) != 0; }

  /// Basis rows in grevlex-descending order of their pivots.
  [[nodiscard]] std::vector<Form> basis() const;
  [[nodiscard]] const std::map<Mono, Form, GrevlexGreater>& rows() const { return rows_; }
  /// Monomials of the degree that are not pivots; they represent a basis of
  /// the quotient.
  [[nodiscard]] std::vector<Mono> standard_monomials() const;

  friend bool operator==(const FormSpace& a, const FormSpace& b) { return a.rows_ == b.rows_ && a.degree_ == b.degree_; }

  /// S_1 * this (or S_e * this) as a space of degree + e.
  [[nodiscard]] FormSpace times_monomials(int e) const;

 private:
  Ring ring_ = Ring::S;
  int nvars_ = 0;
  int degree_ = 0;
  std::map<Mono, Form, GrevlexGreater> rows_;
};

/// A ∩ B for two spaces of the same degree.
FormSpace intersect(const FormSpace& a, const FormSpace& b);
/// A + B.
FormSpace sum(const FormSpace& a, const FormSpace& b);

/// Coordinates of a form of degree d in the monomial basis of S_d.
std::vector<Scalar> monomial_coordinates(const Form& f);
Form form_from_coordinates(Ring ring, int nvars, int degree, const std::vector<Scalar>& c);

}  // namespace vps
