#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vps/monomial.hpp"
#include "vps/scalar.hpp"

namespace vps {

/// S = k[x1..xn] or its dual T = k[y1..yn].
enum class Ring { S, T };

inline char var_char(Ring r) { return r == Ring::S ? 'x' : 'y'; }
inline Ring dual(Ring r) { return r == Ring::S ? Ring::T : Ring::S; }

/// Homogeneous polynomial. Terms are kept grevlex-descending and never store
/// zero coefficients. A zero form still carries its declared degree.
class Form {
 public:
  using Terms = std::map<Mono, Scalar, GrevlexGreater>;

  Form() = default;
  Form(Ring ring, int nvars, int degree) : ring_(ring), nvars_(nvars), degree_(degree) {}

  static Form monomial(Ring ring, int nvars, const Mono& m, const Scalar& c = 1);
  static Form variable(Ring ring, int nvars, int i) { return monomial(ring, nvars, Mono::var(i)); }
  static Form constant(Ring ring, int nvars, const Scalar& c) { return monomial(ring, nvars, Mono{}, c); }
  /// Linear form sum_i c[i] * var_i.
  static Form linear(Ring ring, const std::vector<Scalar>& c);

  [[nodiscard]] Ring ring() const { return ring_; }
  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  /// Grevlex-leading monomial/coefficient; the form must be nonzero.
  [[nodiscard]] const Mono& lead_mono() const { return terms_.begin()->first; }
  [[nodiscard]] const Scalar& lead_coeff() const { return terms_.begin()->second; }
  [[nodiscard]] Scalar coeff(const Mono& m) const;

  /// Adds c*m; m must have the form's degree.
  void add_term(const Mono& m, const Scalar& c);
  /// this += c * other (same ring, degree).
  void axpy(const Scalar& c, const Form& other);

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Scalar& c);

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator-(Form a) { return a *= Scalar(-1); }
  friend Form operator*(Form a, const Scalar& c) { return a *= c; }
  friend Form operator*(const Scalar& c, Form a) { return a *= c; }
  friend Form operator*(const Form& a, const Form& b);
  friend bool operator==(const Form& a, const Form& b);

  /// Product with a monomial.
  [[nodiscard]] Form times(const Mono& m) const;
  /// Scaled so that the leading coefficient is 1 (zero stays zero).
  [[nodiscard]] Form monic() const;
  [[nodiscard]] Form derivative(int var) const;
  [[nodiscard]] Scalar evaluate(const std::vector<Scalar>& point) const;
  /// Substitutes var_i -> sum_j M[i][j] * var_j (same ring, square M).
  [[nodiscard]] Form substitute_linear(const std::vector<std::vector<Scalar>>& M) const;
  /// Coefficient vector against `basis` monomials (missing monomials throw).
  [[nodiscard]] std::vector<Scalar> coordinates(const std::vector<Mono>& basis) const;

  /// Text in the polynomial grammar, e.g. "3/2*x1^2*x3 - x2*x4"; "0" for zero.
  [[nodiscard]] std::string str() const;

 private:
  void check_compatible(const Form& o, const char* op) const;

  Ring ring_ = Ring::S;
  int nvars_ = 0;
  int degree_ = 0;
  Terms terms_;
};

/// Inhomogeneous polynomial in local coordinates, keyed by monomial.
using AffinePoly = std::map<Mono, Scalar, GrevlexGreater>;
/// Parses a polynomial in letter1..letter<nvars> without a homogeneity check.
AffinePoly parse_affine(std::string_view text, int nvars, char letter = 'e');

/// Form arithmetic dispatcher; throws DomainError on ring or degree mismatch.
enum class FormOp { Add, Sub, Mul };
Form form_arith(const Form& a, const Form& b, FormOp op);
Form form_scale(const Form& a, const Scalar& c);

/// Parses a homogeneous form. The ring is inferred from the variable letter
/// (x -> S, y -> T); `nvars` fixes the ring size. A constant parses in
/// `default_ring`. Throws ParseError with line/column on bad input and
/// DomainError for inhomogeneous input.
Form parse_form(std::string_view text, int nvars, Ring default_ring = Ring::S, std::size_t line = 1);

/// Highest variable index used in the text (1-based), or 0.
int scan_nvars(std::string_view text);

/// A generator list with its ring header.
struct IdealText {
  Ring ring = Ring::S;
  int nvars = 0;
  std::vector<Form> generators;
};

/// Ideal file: `ring S n=<n>` header, one generator per line, `#` comments.
IdealText parse_ideal_text(std::string_view text);
std::string format_ideal_text(const IdealText& ideal);
IdealText read_ideal_file(const std::string& path);
void write_ideal_file(const std::string& path, const IdealText& ideal);

}  // namespace vps
