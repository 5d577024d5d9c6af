#pragma once

#include <vector>

#include "vps/ideal.hpp"
#include "vps/monomial.hpp"

namespace vps {

/// Reduced, monic Gröbner basis with its order.
struct GroebnerBasis {
  MonoOrder order;
  std::vector<Form> polys;
  std::vector<Mono> leads;  ///< leading monomials under `order`
};

Mono leading_monomial(const Form& f, const MonoOrder& order);

/// Buchberger's algorithm with sugar (lcm-degree) pair selection, the product
/// criterion and the chain criterion. Input forms must be homogeneous.
GroebnerBasis buchberger(const std::vector<Form>& gens, const MonoOrder& order);
GroebnerBasis groebner(const GradedIdeal& ideal, const MonoOrder& order);
GroebnerBasis groebner(const GradedIdeal& ideal);

/// Fully reduced remainder of f modulo the basis.
Form normal_form(const Form& f, const GroebnerBasis& gb);

/// Hilbert series N(t)/(1-t)^n of S/(leads); `numerator[k]` is the t^k coefficient.
struct HilbertSeries {
  int nvars = 0;
  std::vector<long> numerator;
  [[nodiscard]] long value(int d) const;
};
HilbertSeries hilbert_series(const std::vector<Mono>& leads, int nvars);

/// A polynomial in one variable with rational coefficients (ascending).
struct HilbertPolynomial {
  std::vector<Scalar> coeffs;
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs.empty(); }
  [[nodiscard]] Scalar operator()(long t) const;
  [[nodiscard]] bool is_constant() const { return coeffs.size() <= 1; }
  [[nodiscard]] std::string str() const;
};
HilbertPolynomial hilbert_polynomial(const HilbertSeries& series);
/// Number of terms in the Gotzmann representation of P.
long gotzmann_number(const HilbertPolynomial& p);

/// Gotzmann number of the Hilbert polynomial plus the largest generator degree.
int determinacy_bound(const GradedIdeal& ideal);

/// I : x_var^∞ via a grevlex basis with x_var last.
GradedIdeal colon_variable(const GradedIdeal& ideal, int var);
/// I : (x_1..x_n)^∞ as the intersection of the variable colons.
GradedIdeal saturate(const GradedIdeal& ideal);
bool is_saturated(const GradedIdeal& ideal);

/// Degreewise intersection up to d_max, with generators extracted per degree.
GradedIdeal intersect_ideals(const GradedIdeal& a, const GradedIdeal& b, int d_max);

/// A syzygy as one coefficient form per generator.
using Syzygy = std::vector<Form>;

/// Basis of {(a_i) in S_1^k : sum a_i g_i = 0} for quadrics g_i.
std::vector<Syzygy> linear_syzygies(const std::vector<Form>& gens);

struct SyzygyPiece {
  int degree = 0;
  std::vector<Syzygy> basis;
};
/// Syzygies of degree d (deg a_i = d - deg g_i) for every d <= d_max.
std::vector<SyzygyPiece> module_syzygies(const std::vector<Form>& gens, int d_max);

}  // namespace vps
