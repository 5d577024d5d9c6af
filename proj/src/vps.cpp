#include "vps/vps.hpp"

#include <map>

#include "vps/errors.hpp"
#include "vps/scalar.hpp"

namespace vps {

namespace {

Scalar evaluate_mono(const Mono& m, const Point& p) {
  Scalar v = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int k = 0; k < m.e[i]; ++k) v *= p[i];
  return v;
}

LinearSubspace perp_of_linear_piece(const FormSpace& piece1) {
  return LinearSubspace::from_forms(piece1.basis(), Ring::S, piece1.nvars()).perp();
}

long scheme_length(const GradedIdeal& gamma) { return gamma.hilbert(determinacy_bound(gamma)); }

bool hilbert_is_flat(const GradedIdeal& ideal, long n, HilbFn* out = nullptr) {
  const int bound = std::max(determinacy_bound(ideal), 2);
  HilbFn h = hilbert_function(ideal, bound);
  if (out) *out = h;
  if (h.values[0] != 1) return false;
  for (int d = 1; d <= bound; ++d)
    if (h.values[d] != n) return false;
  return true;
}

}  // namespace

// ---- scheme ideals -----------------------------------------------------------

GradedIdeal points_ideal(const std::vector<Point>& points, int d_max) {
  if (points.empty()) throw DomainError("points_ideal needs at least one point");
  const int n = static_cast<int>(points.front().size());
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n) throw DomainError("points have different lengths");
    bool zero = true;
    for (const auto& c : p) zero = zero && c == 0;
    if (zero) throw DomainError("the zero vector is not a projective point");
  }
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      if (rank(ExactMatrix::from_rows({points[a], points[b]})) < 2)
        throw DomainError("repeated point " + std::to_string(a + 1) + " = " + std::to_string(b + 1) +
                          "; pass schemes with multiplicity as ideals");
  if (d_max < 0) d_max = std::max<int>(static_cast<int>(points.size()), 2);
  std::vector<FormSpace> pieces;
  for (int d = 0; d <= d_max; ++d) {
    const auto& monos = monomials_of_degree(n, d);
    ExactMatrix m(monos.size(), points.size());
    for (std::size_t r = 0; r < monos.size(); ++r)
      for (std::size_t c = 0; c < points.size(); ++c) m(r, c) = evaluate_mono(monos[r], points[c]);
    ExactMatrix ker = left_kernel(m);
    FormSpace sp(Ring::S, n, d);
    for (std::size_t k = 0; k < ker.rows(); ++k) sp.insert(form_from_coordinates(Ring::S, n, d, ker.row(k)));
    pieces.push_back(std::move(sp));
  }
  return GradedIdeal::from_pieces(Ring::S, n, pieces);
}

GradedIdeal points_ideal(const SchemeSpec& spec, int d_max) {
  if (spec.ideal) {
    if (!is_saturated(*spec.ideal)) throw DomainError("scheme ideal is not saturated");
    return *spec.ideal;
  }
  return points_ideal(spec.points, d_max);
}

GradedIdeal local_scheme_ideal(int local_vars, const std::vector<Mono>& relations, const std::vector<AffinePoly>& images,
                               int d_max) {
  const int n = static_cast<int>(images.size());
  if (n < 1 || n > kMaxVars) throw DomainError("need between 1 and " + std::to_string(kMaxVars) + " images");
  auto killed = [&](const Mono& m) {
    for (const auto& r : relations)
      if (Mono::divides(r, m)) return true;
    return false;
  };
  std::vector<Mono> standard;
  for (int d = 0;; ++d) {
    if (d > 64) throw DomainError("relations do not define a finite-length algebra");
    bool any = false;
    for (const auto& m : monomials_of_degree(local_vars, d))
      if (!killed(m)) {
        standard.push_back(m);
        any = true;
      }
    if (!any) break;
  }
  auto mul = [&](const AffinePoly& a, const AffinePoly& b) {
    AffinePoly out;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        Mono m = ma * mb;
        if (killed(m)) continue;
        Scalar c = out[m] + ca * cb;
        if (c == 0) out.erase(m); else out[m] = c;
      }
    return out;
  };
  for (const auto& img : images)
    for (const auto& [m, c] : img)
      if (killed(m)) throw DomainError("image monomial " + m.str('e') + " is zero in the algebra");
  std::map<Mono, std::size_t, GrevlexGreater> index;
  for (std::size_t i = 0; i < standard.size(); ++i) index[standard[i]] = i;
  if (d_max < 0) d_max = static_cast<int>(standard.size()) + 1;

  std::vector<FormSpace> pieces;
  for (int d = 0; d <= d_max; ++d) {
    const auto& monos = monomials_of_degree(n, d);
    ExactMatrix m(monos.size(), standard.size());
    for (std::size_t r = 0; r < monos.size(); ++r) {
      AffinePoly v{{Mono{}, Scalar(1)}};
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < monos[r].e[i]; ++k) v = mul(v, images[i]);
      for (const auto& [mono, c] : v) m(r, index.at(mono)) = c;
    }
    ExactMatrix ker = left_kernel(m);
    FormSpace sp(Ring::S, n, d);
    for (std::size_t k = 0; k < ker.rows(); ++k) sp.insert(form_from_coordinates(Ring::S, n, d, ker.row(k)));
    pieces.push_back(std::move(sp));
  }
  return GradedIdeal::from_pieces(Ring::S, n, pieces);
}

// ---- polar simplices ---------------------------------------------------------

std::vector<Point> PolarSimplex::points() const {
  std::vector<Point> out;
  for (const auto& f : forms) out.push_back(f.coordinates(monomials_of_degree(f.nvars(), 1)));
  return out;
}

bool PolarSimplex::certify(const Quadric& q) const {
  Form acc(q.form.ring(), q.nvars(), 2);
  for (std::size_t i = 0; i < forms.size(); ++i) acc += weights[i] * (forms[i] * forms[i]);
  return acc == q.form;
}

namespace {

// w * l^2 rewritten as s * (f l / v)^2 with s a squarefree integer.
void normalize_weight(Scalar& w, Form& l) {
  mpz_class u = w.get_num(), v = w.get_den();
  mpz_class m = u * v;
  mpz_class f = 1;
  mpz_class s = m < 0 ? mpz_class(-1) : mpz_class(1);
  mpz_class rest = abs(m);
  for (mpz_class p = 2; p * p <= rest && p < 100000; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      f *= p;
    }
  }
  w = Scalar(s * rest);
  l *= Scalar(f) / Scalar(v);
}

}  // namespace

PolarSimplex polar_base(const Quadric& q) {
  if (!q.full_rank()) throw SingularQuadric("polar simplices need a full-rank quadric");
  const int n = q.nvars();
  Form rest = q.form;
  PolarSimplex out;
  auto push = [&](Scalar w, Form l) {
    normalize_weight(w, l);
    out.forms.push_back(std::move(l));
    out.weights.push_back(std::move(w));
  };
  while (!rest.is_zero()) {
    int sq = -1;
    for (int i = 0; i < n && sq < 0; ++i)
      if (rest.coeff(Mono::var(i) * Mono::var(i)) != 0) sq = i;
    if (sq >= 0) {
      Scalar a = rest.coeff(Mono::var(sq) * Mono::var(sq));
      Form l = rest.derivative(sq) * (Scalar(1) / (2 * a));
      rest -= a * (l * l);
      push(a, l);
      continue;
    }
    const auto& [m, b] = *rest.terms().begin();
    int i = -1, j = -1;
    for (int v = 0; v < n; ++v)
      if (m.e[v]) (i < 0 ? i : j) = v;
    Form l1 = rest.derivative(i), l2 = rest.derivative(j);
    Form s = l1 + l2, t = l1 - l2;
    Scalar w = Scalar(1) / (4 * b);
    rest -= w * (s * s) - w * (t * t);
    push(w, s);
    push(-w, t);
  }
  if (static_cast<int>(out.forms.size()) != n || !out.certify(q))
    throw InternalError("diagonalization did not reproduce the quadric");
  return out;
}

ExactMatrix cayley_transform(const Quadric& q, const ExactMatrix& skew) {
  const int n = q.nvars();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (skew(i, j) != -skew(j, i)) throw DomainError("Cayley parameter must be skew-symmetric");
  const ExactMatrix id = ExactMatrix::identity(n);
  const ExactMatrix b = inverse(q.matrix) * skew;
  const ExactMatrix m = id + b;
  if (determinant(m) == 0) throw DomainError("I + B is singular");
  ExactMatrix g = (id - b) * inverse(m);
  if (!(g.transpose() * q.matrix * g == q.matrix)) throw InternalError("Cayley transform is not q-orthogonal");
  return g;
}

ExactMatrix cayley_orthogonal(const Quadric& q, std::uint64_t seed, long bound) {
  const int n = q.nvars();
  if (!q.full_rank()) throw SingularQuadric("Cayley transform needs a full-rank quadric");
  ScalarRng rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    ExactMatrix k(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        k(i, j) = rng.small_int(bound);
        k(j, i) = -k(i, j);
      }
    try {
      return cayley_transform(q, k);
    } catch (const DomainError&) {
    }
  }
  throw DomainError("no invertible I + B found after 16 attempts");
}

PolarSimplex polar_simplex_sample(const Quadric& q, std::uint64_t seed, bool unit_weights) {
  PolarSimplex base = polar_base(q);
  if (unit_weights)
    for (const auto& w : base.weights)
      if (w != 1) throw UnsupportedQuadric("no rational sum-of-squares simplex is built in for " + q.form.str());
  const int n = q.nvars();
  ExactMatrix gt = cayley_orthogonal(q, seed).transpose();
  PolarSimplex out;
  out.weights = base.weights;
  for (const auto& f : base.forms) out.forms.push_back(Form::linear(q.form.ring(), gt.apply(f.coordinates(monomials_of_degree(n, 1)))));
  if (!out.certify(q)) throw InternalError("moved simplex failed its certificate");
  return out;
}

// ---- membership and boundary criteria ----------------------------------------

GradedIdeal linear_ideal(const LinearSubspace& line) {
  if (line.ambient() != Ring::T) throw DomainError("linear_ideal expects a subspace of T_1");
  return GradedIdeal(Ring::S, line.nvars(), line.perp().forms());
}

std::optional<LinearSubspace> detect_line(const GradedIdeal& sat_ideal, std::uint64_t seed) {
  const int n = sat_ideal.nvars();
  const FormSpace& p2 = sat_ideal.piece(2);
  if (p2.dim() == 0) return std::nullopt;
  GradedIdeal k = saturate(GradedIdeal(Ring::S, n, p2.basis()));
  if (k.dim(0) > 0) return std::nullopt;
  if (static_cast<int>(k.dim(1)) == n - 2) return perp_of_linear_piece(k.piece(1));
  if (static_cast<int>(k.dim(1)) > n - 2) return std::nullopt;
  // V(K) is L plus further components: cut with hyperplanes to find points of L
  ScalarRng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Point> pts;
  for (int attempt = 0; attempt < 8 && pts.size() < 2; ++attempt) {
    std::vector<Scalar> h(n);
    for (auto& c : h) c = rng.small_int(5);
    auto gens = k.generators();
    gens.push_back(Form::linear(Ring::S, h));
    if (gens.back().is_zero()) continue;
    GradedIdeal j = saturate(GradedIdeal(Ring::S, n, gens));
    if (static_cast<int>(j.dim(1)) != n - 1) continue;
    Point p = perp_of_linear_piece(j.piece(1)).basis().row(0);
    if (pts.empty() || LinearSubspace(Ring::T, n, {pts[0], p}).dim() == 2) pts.push_back(p);
  }
  if (pts.size() < 2) return std::nullopt;
  LinearSubspace line(Ring::T, n, pts);
  GradedIdeal il = linear_ideal(line);
  for (const auto& g : k.generators())
    if (!il.contains(g)) return std::nullopt;
  return line;
}

namespace {

bool sbl_impl(const GradedIdeal& ideal, const GradedIdeal& sat, const LinearSubspace& line) {
  GradedIdeal il = linear_ideal(line);
  for (const auto& a : sat.generators())
    for (const auto& b : il.generators())
      if (!ideal.contains(a * b)) return false;
  return true;
}

bool kri_impl(const GradedIdeal& sat, const LinearSubspace& line, const Quadric& q) {
  const LinearSubspace span = perp_of_linear_piece(sat.piece(1));
  const Quadric qi = inverse_quadric(q);
  for (const auto& l : line.forms())
    for (const auto& v : span.forms())
      if (!apply_diff(qi.form, l * v).is_zero()) return false;
  return true;
}

}  // namespace

VpsVerdict check_vps(const GradedIdeal& ideal, const Quadric& q) {
  const int n = ideal.nvars();
  if (q.form.ring() != Ring::T || ideal.ring() != Ring::S || q.nvars() != n)
    throw DomainError("check_vps expects I in S and q in T with the same number of variables");
  VpsVerdict v;
  const bool flat = hilbert_is_flat(ideal, n, &v.hilbert);
  bool apolar = true;
  for (const auto& f : ideal.piece(2).basis())
    if (!apply_diff(f, q.form).is_zero()) apolar = false;
  v.in_vps = flat && apolar;
  v.saturated = is_saturated(ideal);
  v.details = "hilbert " + v.hilbert.str() + (apolar ? "; I_2 in q^perp" : "; I_2 not in q^perp");
  if (!v.in_vps || v.saturated) return v;
  GradedIdeal sat = saturate(ideal);
  HilbFn hs = hilbert_function(sat, std::max(determinacy_bound(sat), 4));
  v.criteria_apply = true;
  for (std::size_t d = 0; d < hs.values.size(); ++d) {
    const long want = d == 0 ? 1 : std::min<long>(n, n - 3 + static_cast<long>(d));
    if (hs.values[d] != want) v.criteria_apply = false;
  }
  v.details += "; saturation hilbert " + hs.str();
  v.line = detect_line(sat);
  if (!v.line) {
    v.details += "; no unique line in V(I^sat_2)";
    return v;
  }
  v.details += "; line " + v.line->str();
  v.sbl_necessary = sbl_impl(ideal, sat, *v.line);
  if (q.full_rank()) {
    v.kri = kri_impl(sat, *v.line, q);
  } else {
    v.details += "; q singular, kri skipped";
  }
  return v;
}

bool sbl_necessary(const GradedIdeal& ideal) {
  GradedIdeal sat = saturate(ideal);
  auto line = detect_line(sat);
  if (!line) throw DomainError("no line detected in V(I^sat_2)");
  return sbl_impl(ideal, sat, *line);
}

bool kri_check(const GradedIdeal& ideal, const Quadric& q) {
  GradedIdeal sat = saturate(ideal);
  auto line = detect_line(sat);
  if (!line) throw DomainError("no line detected in V(I^sat_2)");
  return kri_impl(sat, *line, q);
}

bool line_in_inverse_quadric(const LinearSubspace& line, const Quadric& q) {
  if (line.ambient() != Ring::T) throw DomainError("line must be a subspace of T_1");
  const Quadric qi = inverse_quadric(q);
  const auto fs = line.forms();
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t b = a; b < fs.size(); ++b)
      if (!apply_diff(qi.form, fs[a] * fs[b]).is_zero()) return false;
  return true;
}

UnsatLimit build_unsat_limit(const GradedIdeal& gamma, const Quadric& q) {
  if (gamma.nvars() != 4 || q.nvars() != 4) throw DomainError("build_unsat_limit works in P^3");
  HilbFn h = hilbert_function(gamma, std::max(determinacy_bound(gamma), 4));
  const std::vector<long> want = {1, 2, 3, 4};
  for (std::size_t d = 0; d < h.values.size(); ++d)
    if (h.values[d] != (d < want.size() ? want[d] : 4))
      throw DomainError("Γ must have Hilbert function (1,2,3,4,4,...), got " + h.str());
  UnsatLimit out;
  out.line = perp_of_linear_piece(gamma.piece(1));
  out.line_in_inverse = line_in_inverse_quadric(out.line, q);
  const int d_max = std::max(gamma.max_generator_degree(), 3) + 1;
  out.ideal = intersect_ideals(gamma, apolar_ideal(q.form), d_max);
  out.hilbert_ok = hilbert_is_flat(out.ideal, 4);
  return out;
}

FamilyMember family_builder(FamilyKind kind, const FamilyParams& params, const Quadric& q) {
  const GradedIdeal& gamma = params.gamma;
  if (gamma.nvars() != 5 || q.nvars() != 5) throw DomainError("family_builder works in P^4");
  if (!q.full_rank()) throw SingularQuadric("family_builder needs a full-rank quadric");
  if (gamma.dim(1) != 3) throw DomainError("Γ must lie on a line");
  FamilyMember out;
  out.line = perp_of_linear_piece(gamma.piece(1));
  const long len = scheme_length(gamma);
  const GradedIdeal qperp = apolar_ideal(q.form);
  const int d_max = static_cast<int>(len) + 2;
  if (kind == FamilyKind::F1) {
    if (len != 4) throw DomainError("F1 needs Γ' of length 4, got " + std::to_string(len));
    if (!params.point) throw DomainError("F1 needs a point");
    if (out.line.contains(*params.point)) throw DegenerateParameters("the point lies on the line of Γ'");
    GradedIdeal u = intersect_ideals(gamma, points_ideal({*params.point}), d_max);
    out.ideal = intersect_ideals(u, qperp, d_max);
  } else {
    if (len != 5) throw DomainError("F2 needs Γ of length 5, got " + std::to_string(len));
    if (!params.cubic || params.cubic->ring() != Ring::T || params.cubic->degree() != 3)
      throw DomainError("F2 needs a cubic in T");
    GradedIdeal u = intersect_ideals(gamma, apolar_ideal(*params.cubic), d_max);
    out.ideal = intersect_ideals(u, qperp, d_max);
    if (out.ideal.hilbert(2) != 5)
      throw DegenerateParameters("H(2) = " + std::to_string(out.ideal.hilbert(2)) + " instead of 5");
  }
  HilbFn h;
  out.generic = hilbert_is_flat(out.ideal, 5, &h);
  out.details = "hilbert " + h.str();
  return out;
}

// ---- local algebra -----------------------------------------------------------

namespace {

struct LocalAlgebra {
  RrefResult rref;
  std::vector<Mono> columns;
  std::map<Mono, std::size_t, GrevlexGreater> index;
  std::vector<bool> is_pivot;
  int chart = 0;
  int order = 0;  // truncation at m^order

  std::vector<Scalar> reduce(std::vector<Scalar> v) const {
    for (std::size_t r = 0; r < rref.matrix.rows(); ++r) {
      const Scalar c = v[rref.pivots[r]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (rref.matrix(r, k) != 0) v[k] -= c * rref.matrix(r, k);
    }
    return v;
  }
};

LocalAlgebra local_algebra(const GradedIdeal& gamma, const Point& point) {
  const int n = gamma.nvars();
  if (static_cast<int>(point.size()) != n) throw DomainError("point has the wrong length");
  int j = -1;
  for (int i = 0; i < n && j < 0; ++i)
    if (point[i] != 0) j = i;
  if (j < 0) throw DomainError("the zero vector is not a projective point");
  LocalAlgebra la;
  la.chart = j;
  la.order = static_cast<int>(scheme_length(gamma)) + 1;
  // x_i -> x_i + (a_i / a_j) x_j moves e_j to the point
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 1;
    if (i != j) m[i][j] = point[i] / point[j];
  }
  for (int d = 0; d < la.order; ++d)
    for (const auto& mono : monomials_of_degree(n, d))
      if (mono.e[j] == 0) {
        la.index[mono] = la.columns.size();
        la.columns.push_back(mono);
      }
  auto dehom = [&](const Form& f) {
    std::vector<std::pair<Mono, Scalar>> out;
    for (const auto& [mono, c] : f.terms()) {
      Mono t = mono;
      t.e[j] = 0;
      out.emplace_back(t, c);
    }
    return out;
  };
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : gamma.generators()) {
    auto a = dehom(g.substitute_linear(m));
    for (const auto& mult : la.columns) {
      std::vector<Scalar> row(la.columns.size(), 0);
      bool nonzero = false;
      for (const auto& [mono, c] : a) {
        Mono t = mono * mult;
        if (t.degree() >= la.order) continue;
        row[la.index.at(t)] += c;
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  la.rref = rows.empty() ? rref(ExactMatrix(0, la.columns.size())) : rref(ExactMatrix::from_rows(rows, la.columns.size()));
  la.is_pivot.assign(la.columns.size(), false);
  for (auto p : la.rref.pivots) la.is_pivot[p] = true;
  if (la.rref.rank == la.columns.size()) throw DomainError("the point is not in the support of Γ");
  return la;
}

}  // namespace

std::size_t local_length(const GradedIdeal& gamma, const Point& point) {
  LocalAlgebra la = local_algebra(gamma, point);
  return la.columns.size() - la.rref.rank;
}

std::size_t socle_dimension(const GradedIdeal& gamma, const Point& point) {
  LocalAlgebra la = local_algebra(gamma, point);
  const int n = gamma.nvars();
  std::vector<std::size_t> basis;
  for (std::size_t c = 0; c < la.columns.size(); ++c)
    if (!la.is_pivot[c]) basis.push_back(c);
  ExactMatrix mult(basis.size(), basis.size() * (n - 1));
  std::size_t block = 0;
  for (int i = 0; i < n; ++i) {
    if (i == la.chart) continue;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Mono t = la.columns[basis[b]] * Mono::var(i);
      if (t.degree() >= la.order) continue;
      std::vector<Scalar> v(la.columns.size(), 0);
      v[la.index.at(t)] = 1;
      v = la.reduce(std::move(v));
      for (std::size_t k = 0; k < basis.size(); ++k) mult(b, block * basis.size() + k) = v[basis[k]];
    }
    ++block;
  }
  return left_kernel(mult).rows();
}

bool is_locally_gorenstein(const GradedIdeal& gamma, const Point& point) { return socle_dimension(gamma, point) == 1; }

long macaulay_bound(long h, int d) {
  if (d < 1) throw DomainError("macaulay_bound needs d >= 1");
  if (h < 0) throw DomainError("negative Hilbert function value");
  long rem = h, out = 0;
  for (int k = d; k >= 1 && rem > 0; --k) {
    long a = k;
    while (binomial(a + 1, k) <= rem) ++a;
    out += binomial(a + 1, k + 1);
    rem -= binomial(a, k);
  }
  return out;
}

}  // namespace vps
