#include "vps/apolarity.hpp"

#include <random>

#include "vps/errors.hpp"

namespace vps {

Form apply_diff(const Form& f, const Form& g) {
  if (f.ring() == g.ring()) throw DomainError("apply_diff: operands must live in dual rings");
  if (f.nvars() != g.nvars()) throw DomainError("apply_diff: variable count mismatch");
  if (g.degree() < f.degree()) throw DomainError("apply_diff: degree of the operator exceeds the form");
  Form out(g.ring(), g.nvars(), g.degree() - f.degree());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      if (!Mono::divides(a, b)) continue;
      mpz_class factor = 1;
      for (int i = 0; i < g.nvars(); ++i)
        for (int k = 0; k < a.e[i]; ++k) factor *= b.e[i] - k;
      out.add_term(b / a, ca * cb * Scalar(factor));
    }
  return out;
}

Quadric Quadric::from_form(const Form& f) {
  if (f.degree() != 2 && !f.is_zero()) throw DomainError("a quadric must have degree 2");
  const int n = f.nvars();
  ExactMatrix a(n, n);
  for (const auto& [m, c] : f.terms()) {
    int i = -1, j = -1;
    for (int v = 0; v < n; ++v) {
      if (m.e[v] == 2) i = j = v;
      if (m.e[v] == 1) (i < 0 ? i : j) = v;
    }
    if (i == j) {
      a(i, i) = c;
    } else {
      a(i, j) = c / 2;
      a(j, i) = c / 2;
    }
  }
  Quadric q;
  q.form = f;
  if (f.is_zero()) q.form = Form(f.ring(), n, 2);
  q.matrix = std::move(a);
  q.rank = vps::rank(q.matrix);
  return q;
}

Quadric Quadric::from_matrix(Ring ring, const ExactMatrix& a) {
  if (!a.is_symmetric()) throw DomainError("quadric matrix must be symmetric");
  const int n = static_cast<int>(a.rows());
  Form f(ring, n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (a(i, j) == 0) continue;
      f.add_term(Mono::var(i) * Mono::var(j), i == j ? a(i, j) : 2 * a(i, j));
    }
  Quadric q;
  q.form = std::move(f);
  q.matrix = a;
  q.rank = vps::rank(a);
  return q;
}

Quadric Quadric::parse(std::string_view text, int nvars) { return from_form(parse_form(text, nvars, Ring::T)); }

Scalar Quadric::bilinear(const std::vector<Scalar>& v, const std::vector<Scalar>& w) const {
  auto aw = matrix.apply(w);
  Scalar s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * aw[i];
  return s;
}

Quadric inverse_quadric(const Quadric& q) {
  if (!q.full_rank()) throw SingularQuadric("quadric of rank " + std::to_string(q.rank) + " < " + std::to_string(q.nvars()));
  return Quadric::from_matrix(dual(q.form.ring()), inverse(q.matrix));
}

FormSpace apolar_piece(const Form& g, int e) {
  const Ring r = dual(g.ring());
  const int n = g.nvars();
  if (e > g.degree()) return FormSpace::full(r, n, e);
  const auto& src = monomials_of_degree(n, e);
  const auto& dst = monomials_of_degree(n, g.degree() - e);
  ExactMatrix m(src.size(), dst.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto img = apply_diff(Form::monomial(r, n, src[i]), g).coordinates(dst);
    for (std::size_t j = 0; j < dst.size(); ++j) m(i, j) = img[j];
  }
  ExactMatrix ker = left_kernel(m);
  FormSpace out(r, n, e);
  for (std::size_t k = 0; k < ker.rows(); ++k) out.insert(form_from_coordinates(r, n, e, ker.row(k)));
  return out;
}

GradedIdeal apolar_ideal(const Form& g, int d_max) {
  if (g.is_zero()) throw DomainError("apolar ideal of the zero form");
  if (d_max < 0) d_max = g.degree() + 1;
  std::vector<FormSpace> pieces;
  for (int e = 0; e <= d_max; ++e) pieces.push_back(apolar_piece(g, e));
  return GradedIdeal::from_pieces(dual(g.ring()), g.nvars(), pieces);
}

// ---- linear subspaces --------------------------------------------------------

LinearSubspace::LinearSubspace(Ring ambient, int nvars, const std::vector<std::vector<Scalar>>& vectors)
    : ambient_(ambient), nvars_(nvars) {
  ExactMatrix m(vectors.size(), nvars);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != static_cast<std::size_t>(nvars)) throw DomainError("vector length mismatch");
    for (int c = 0; c < nvars; ++c) m(r, c) = vectors[r][c];
  }
  basis_ = rref(m).matrix;
  if (basis_.rows() == 0) basis_ = ExactMatrix(0, nvars);
}

LinearSubspace LinearSubspace::from_forms(const std::vector<Form>& linear_forms, Ring ambient, int nvars) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& f : linear_forms) {
    if (f.degree() != 1 && !f.is_zero()) throw DomainError("expected linear forms");
    if (f.is_zero()) continue;
    rows.push_back(f.coordinates(monomials_of_degree(nvars, 1)));
  }
  // monomials_of_degree(n,1) lists x1..xn in order
  return LinearSubspace(ambient, nvars, rows);
}

std::vector<Form> LinearSubspace::forms() const {
  std::vector<Form> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(Form::linear(ambient_, basis_.row(r)));
  return out;
}

LinearSubspace LinearSubspace::perp() const {
  ExactMatrix k = kernel(basis_.rows() ? basis_ : ExactMatrix(0, nvars_));
  if (basis_.rows() == 0) k = ExactMatrix::identity(nvars_);
  return LinearSubspace(dual(ambient_), nvars_, k.to_rows());
}

bool LinearSubspace::contains(const std::vector<Scalar>& v) const {
  auto rows = basis_.to_rows();
  rows.push_back(v);
  return LinearSubspace(ambient_, nvars_, rows).dim() == dim();
}

bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
  return a.ambient_ == b.ambient_ && a.nvars_ == b.nvars_ && a.basis_ == b.basis_;
}

std::string LinearSubspace::str() const {
  std::string out = "span(";
  auto fs = forms();
  for (std::size_t i = 0; i < fs.size(); ++i) out += (i ? ", " : "") + fs[i].str();
  return out + ")";
}

LinearSubspace collineation_image(const Quadric& q, const LinearSubspace& v) {
  if (v.ambient() == q.form.ring()) throw DomainError("collineation acts on the dual ring");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& f : v.forms()) rows.push_back(apply_diff(f, q.form).coordinates(monomials_of_degree(q.nvars(), 1)));
  return LinearSubspace(q.form.ring(), q.nvars(), rows);
}

std::array<bool, 6> polarity_conditions(const LinearSubspace& L, const LinearSubspace& N, const Quadric& q) {
  const int n = q.nvars();
  if (L.ambient() != Ring::T || N.ambient() != Ring::T || q.form.ring() != Ring::T)
    throw DomainError("polarity_conditions expects L, N and q in T");
  if (static_cast<int>(L.dim() + N.dim()) != n) throw DomainError("dim L + dim N must equal n");
  const Quadric qi = inverse_quadric(q);
  const LinearSubspace Lp = L.perp(), Np = N.perp();
  std::array<bool, 6> out{true, true, true, true, true, true};

  const FormSpace qperp2 = apolar_piece(q.form, 2);
  for (const auto& a : Lp.forms())
    for (const auto& b : Np.forms())
      if (!qperp2.contains(a * b)) out[0] = false;

  for (std::size_t i = 0; i < Lp.dim(); ++i)
    for (std::size_t j = 0; j < Np.dim(); ++j)
      if (q.bilinear(Lp.basis().row(i), Np.basis().row(j)) != 0) out[1] = false;

  out[2] = collineation_image(q, Lp) == N;
  out[3] = collineation_image(qi, N) == Lp;

  for (const auto& a : N.forms())
    for (const auto& b : L.forms())
      if (!apply_diff(qi.form, a * b).is_zero()) out[4] = false;

  const FormSpace qiperp2 = apolar_piece(qi.form, 2);
  for (const auto& a : N.forms())
    for (const auto& b : L.forms())
      if (!qiperp2.contains(a * b)) out[5] = false;
  return out;
}

// ---- apolar quadrics ---------------------------------------------------------

namespace {

ExactMatrix combine(const std::vector<ExactMatrix>& mats, const std::vector<Scalar>& t) {
  ExactMatrix m(mats.front().rows(), mats.front().cols());
  for (std::size_t k = 0; k < mats.size(); ++k)
    if (t[k] != 0)
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += t[k] * mats[k](i, j);
  return m;
}

}  // namespace

ApolarQuadrics apolar_quadrics(const GradedIdeal& ideal, std::uint64_t seed) {
  const int n = ideal.nvars();
  if (ideal.ring() != Ring::S) throw DomainError("apolar_quadrics expects an ideal in S");
  if (ideal.hilbert(1) != n)
    throw NotLinearlyNormal("H(1) = " + std::to_string(ideal.hilbert(1)) + " differs from n = " + std::to_string(n));
  const auto& t2 = monomials_of_degree(n, 2);
  const auto i2 = ideal.piece(2).basis();
  // rows: monomials of T_2; columns: basis of I_2; q annihilates I_2 iff q^T M = 0
  ExactMatrix m(t2.size(), i2.size());
  for (std::size_t r = 0; r < t2.size(); ++r)
    for (std::size_t c = 0; c < i2.size(); ++c)
      m(r, c) = apply_diff(i2[c], Form::monomial(Ring::T, n, t2[r])).coeff(Mono{});
  ExactMatrix ker = left_kernel(m);
  ApolarQuadrics out;
  std::vector<ExactMatrix> mats;
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    out.space.push_back(form_from_coordinates(Ring::T, n, 2, ker.row(k)));
    mats.push_back(Quadric::from_form(out.space.back()).matrix);
  }
  if (mats.empty()) {
    out.absence_certified = true;
    return out;
  }
  ScalarRng rng(seed);
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<Scalar> t(mats.size());
    for (auto& v : t) v = rng.small_int(9);
    ExactMatrix a = combine(mats, t);
    if (determinant(a) != 0) {
      out.witness = Quadric::from_matrix(Ring::T, a);
      return out;
    }
  }
  // det(sum t_k A_k) has degree <= n in each t_k, so vanishing on the grid
  // {0..n}^k forces it to vanish identically.
  const std::size_t k = mats.size();
  double grid = 1;
  for (std::size_t i = 0; i < k; ++i) grid *= n + 1;
  if (grid > 200000) return out;
  std::vector<Scalar> t(k, 0);
  std::vector<int> idx(k, 0);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) t[i] = idx[i];
    ExactMatrix a = combine(mats, t);
    if (determinant(a) != 0) {
      out.witness = Quadric::from_matrix(Ring::T, a);
      return out;
    }
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] > n) idx[pos++] = 0;
    if (pos == k) break;
  }
  out.absence_certified = true;
  return out;
}

// ---- first-order orthogonalization ------------------------------------------

Form derivation(const Form& v, const ExactMatrix& f) {
  const int n = v.nvars();
  Form out(v.ring(), n, v.degree());
  for (int i = 0; i < n; ++i) {
    Form di = v.derivative(i);
    if (di.is_zero()) continue;
    std::vector<Scalar> row(n);
    for (int j = 0; j < n; ++j) row[j] = f(i, j);
    Form li = Form::linear(v.ring(), row);
    if (li.is_zero()) continue;
    out += li * di;
  }
  return out;
}

namespace {

struct Dual {
  Form a, b;  // a + ε b
};

Dual dual_mul(const Dual& p, const Dual& q) { return {p.a * q.a, p.a * q.b + p.b * q.a}; }

}  // namespace

ExactMatrix orthogonalize_first_order(const GradedIdeal& i0, const Quadric& q, const std::vector<Form>& deformation) {
  const int n = i0.nvars();
  if (!q.full_rank()) throw SingularQuadric("orthogonalization needs a full-rank quadric");
  const auto basis = i0.piece(2).basis();
  if (deformation.size() != basis.size())
    throw DomainError("deformation must give one image per basis element of (I0)_2");
  for (const auto& v : basis)
    if (!apply_diff(v, q.form).is_zero()) throw DomainError("(I0)_2 is not contained in q^⊥");
  // unknown F_ij at column i*n + j
  ExactMatrix a(basis.size(), static_cast<std::size_t>(n * n));
  std::vector<Scalar> rhs(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      Form di = basis[k].derivative(i);
      if (di.is_zero()) continue;
      for (int j = 0; j < n; ++j)
        a(k, i * n + j) = apply_diff(Form::variable(Ring::S, n, j) * di, q.form).coeff(Mono{});
    }
    if (deformation[k].degree() != 2 && !deformation[k].is_zero()) throw DomainError("deformation images must be quadrics");
    rhs[k] = deformation[k].is_zero() ? Scalar(0) : Scalar(-apply_diff(deformation[k], q.form).coeff(Mono{}));
  }
  bool ok = false;
  auto x = solve(a, rhs, ok);
  if (!ok) throw Infeasible("no first-order orthogonalizing matrix exists");
  ExactMatrix f(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f(i, j) = x[i * n + j];
  return f;
}

std::array<Scalar, 2> first_order_residual(const Form& v, const Form& delta, const ExactMatrix& f, const Quadric& q) {
  const int n = v.nvars();
  std::vector<Dual> images;
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> row(n);
    for (int j = 0; j < n; ++j) row[j] = f(i, j);
    images.push_back({Form::variable(Ring::S, n, i), Form::linear(Ring::S, row)});
  }
  auto substitute = [&](const Form& p) {
    Dual acc{Form(Ring::S, n, p.degree()), Form(Ring::S, n, p.degree())};
    for (const auto& [m, c] : p.terms()) {
      Dual t{Form::constant(Ring::S, n, c), Form(Ring::S, n, 0)};
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < m.e[i]; ++k) t = dual_mul(t, images[i]);
      acc.a += t.a;
      acc.b += t.b;
    }
    return acc;
  };
  Dual sv = substitute(v);
  Form eps_part = sv.b;
  if (!delta.is_zero()) eps_part += substitute(delta).a;
  return {apply_diff(sv.a, q.form).coeff(Mono{}), apply_diff(eps_part, q.form).coeff(Mono{})};
}

}  // namespace vps
