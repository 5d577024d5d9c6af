#include "vps/tangent.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "vps/errors.hpp"
#include "vps/grobner.hpp"
#include "vps/matrix.hpp"

namespace vps {

namespace {

using CoordKey = std::pair<std::size_t, std::array<std::uint8_t, kMaxVars>>;

struct HomProblem {
  std::vector<Form> gens;
  std::vector<std::vector<Form>> targets;
  GradedIdeal quotient;
  std::vector<std::size_t> offsets;
  std::size_t unknowns = 0;
  std::map<std::tuple<std::array<std::uint8_t, kMaxVars>, std::size_t, std::size_t>, Form> cache;
  ExactMatrix rows;

  HomProblem(std::vector<Form> g, std::vector<std::vector<Form>> t, GradedIdeal q)
      : gens(std::move(g)), targets(std::move(t)), quotient(std::move(q)) {
    for (const auto& t_i : targets) {
      offsets.push_back(unknowns);
      unknowns += t_i.size();
    }
    rows = ExactMatrix(0, unknowns);
  }

  const Form& reduced_product(const Mono& m, std::size_t i, std::size_t k) {
    auto key = std::make_tuple(m.e, i, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const Form& b = targets[i][k];
    Form r = quotient.piece(b.degree() + m.degree()).reduce(b.times(m));
    return cache.emplace(key, std::move(r)).first->second;
  }

  void add_syzygy(const Syzygy& s) {
    std::map<std::array<std::uint8_t, kMaxVars>, std::vector<Scalar>> eqs;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (s[i].is_zero()) continue;
      for (std::size_t k = 0; k < targets[i].size(); ++k)
        for (const auto& [m, c] : s[i].terms())
          for (const auto& [mm, cc] : reduced_product(m, i, k).terms()) {
            auto& row = eqs[mm.e];
            if (row.empty()) row.assign(unknowns, Scalar(0));
            row[offsets[i] + k] += c * cc;
          }
    }
    for (auto& [m, row] : eqs) rows.append_row(row);
    if (rows.rows() > 4 * unknowns + 16) compress();
  }

  void compress() {
    RrefResult r = rref(rows);
    rows = r.matrix;
    if (rows.rows() == 0) rows = ExactMatrix(0, unknowns);
  }

  [[nodiscard]] ExactMatrix solutions() const {
    if (rows.rows() == 0) return ExactMatrix::identity(unknowns);
    return kernel(rows);
  }

  [[nodiscard]] std::size_t dimension() const { return unknowns - (rows.rows() == 0 ? 0 : rank(rows)); }

  [[nodiscard]] TangentReport report(int truncation) const {
    TangentReport out;
    out.generators = gens;
    out.quotient = quotient;
    out.truncation_degree = truncation;
    ExactMatrix sol = solutions();
    for (std::size_t t = 0; t < sol.rows(); ++t) {
      std::vector<Form> images;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Form f(gens[i].ring(), gens[i].nvars(), gens[i].degree());
        for (std::size_t k = 0; k < targets[i].size(); ++k)
          if (sol(t, offsets[i] + k) != 0) f.axpy(sol(t, offsets[i] + k), targets[i][k]);
        images.push_back(std::move(f));
      }
      out.basis.push_back(std::move(images));
    }
    out.dimension = out.basis.size();
    return out;
  }
};

std::vector<Form> standard_forms(const FormSpace& piece) {
  std::vector<Form> out;
  for (const auto& m : piece.standard_monomials()) out.push_back(Form::monomial(piece.ring(), piece.nvars(), m));
  return out;
}

HomProblem quotient_problem(const GradedIdeal& ideal, const std::vector<Form>& gens) {
  std::vector<std::vector<Form>> targets;
  for (const auto& g : gens) targets.push_back(standard_forms(ideal.piece(g.degree())));
  return HomProblem(gens, std::move(targets), ideal);
}

std::map<CoordKey, Scalar> coordinates_of(const std::vector<Form>& images) {
  std::map<CoordKey, Scalar> out;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (const auto& [m, c] : images[i].terms()) out[{i, m.e}] = c;
  return out;
}

std::size_t rank_of_coordinate_rows(const std::vector<std::map<CoordKey, Scalar>>& vecs) {
  std::map<CoordKey, std::size_t> index;
  for (const auto& v : vecs)
    for (const auto& [k, c] : v) index.emplace(k, 0);
  std::size_t col = 0;
  for (auto& [k, c] : index) c = col++;
  if (vecs.empty() || index.empty()) return 0;
  ExactMatrix m(vecs.size(), index.size());
  for (std::size_t r = 0; r < vecs.size(); ++r)
    for (const auto& [k, c] : vecs[r]) m(r, index.at(k)) = c;
  return rank(m);
}

std::optional<long> homogeneous_weight(const Form& f, const WeightVec& w) {
  std::optional<long> out;
  for (const auto& [m, c] : f.terms()) {
    long x = weight_of(m, w);
    if (out && *out != x) return std::nullopt;
    out = x;
  }
  return out;
}

}  // namespace

TangentReport syz_tangent(const FormSpace& v, const std::optional<Quadric>& q) {
  if (v.degree() != 2 || v.ring() != Ring::S) throw DomainError("syz_tangent expects a subspace of S_2");
  const int n = v.nvars();
  std::vector<Form> gens = v.basis();
  GradedIdeal j(Ring::S, n, gens);
  if (j.hilbert(3) != n)
    throw DomainError("syz_tangent requires H_{S/(V)}(3) = n, found " + std::to_string(j.hilbert(3)));
  std::vector<Form> complement;
  if (q) {
    FormSpace qp = apolar_piece(q->form, 2);
    if (!qp.contains(v)) throw DomainError("syz_tangent: V is not contained in q^⊥");
    FormSpace comp(Ring::S, n, 2);
    for (const auto& b : qp.basis()) {
      Form r = j.piece(2).reduce(b);
      if (!r.is_zero()) comp.insert(r);
    }
    complement = comp.basis();
  } else {
    complement = standard_forms(j.piece(2));
  }
  HomProblem prob(gens, std::vector<std::vector<Form>>(gens.size(), complement), j);
  for (const auto& s : linear_syzygies(gens)) prob.add_syzygy(s);
  return prob.report(3);
}

TangentReport hom_tangent(const GradedIdeal& ideal, int truncation) {
  std::vector<Form> gens = ideal.minimal_generators(ideal.max_generator_degree());
  HomProblem prob = quotient_problem(ideal, gens);
  for (const auto& piece : module_syzygies(gens, truncation))
    for (const auto& s : piece.basis) prob.add_syzygy(s);
  return prob.report(truncation);
}

TangentReport hilb_tangent(const GradedIdeal& ideal) {
  const long n = ideal.nvars();
  const int bound = determinacy_bound(ideal);
  for (int d = 0; d <= bound; ++d)
    if (ideal.hilbert(d) != (d == 0 ? 1 : n))
      throw DomainError("hilb_tangent requires H_{S/I} = (1,n,n,...)");
  const int maxdeg = ideal.max_generator_degree();
  const int cap = 2 * maxdeg + 4;
  std::vector<Form> gens = ideal.minimal_generators(maxdeg);
  HomProblem prob = quotient_problem(ideal, gens);
  int added = -1;
  auto add_through = [&](int d) {
    auto pieces = module_syzygies(gens, d);
    for (int e = added + 1; e <= d; ++e)
      for (const auto& s : pieces[e].basis) prob.add_syzygy(s);
    added = d;
  };
  add_through(maxdeg + 1);
  std::size_t prev = prob.dimension();
  for (int d = maxdeg + 1; d < cap; ++d) {
    add_through(d + 1);
    std::size_t cur = prob.dimension();
    if (cur == prev) return prob.report(d);
    prev = cur;
  }
  throw Unstable("hilb_tangent did not stabilize by degree " + std::to_string(cap));
}

bool tangent_contains(const TangentReport& report, const std::vector<Form>& images) {
  if (images.size() != report.generators.size()) throw DomainError("tangent_contains: one image per generator expected");
  std::vector<Form> reduced;
  for (const auto& f : images) reduced.push_back(report.quotient.piece(f.degree()).reduce(f));
  std::vector<std::map<CoordKey, Scalar>> vecs;
  for (const auto& b : report.basis) vecs.push_back(coordinates_of(b));
  const std::size_t r0 = rank_of_coordinate_rows(vecs);
  vecs.push_back(coordinates_of(reduced));
  return rank_of_coordinate_rows(vecs) == r0;
}

std::vector<Form> induced_tangent_vector(const TangentReport& report, const ExactMatrix& f) {
  std::vector<Form> out;
  for (const auto& g : report.generators) out.push_back(report.quotient.piece(g.degree()).reduce(derivation(g, f)));
  return out;
}

std::map<long, std::size_t> weight_decomposition(const FormSpace& space, const WeightVec& w) {
  std::map<long, std::size_t> out;
  for (const auto& f : space.basis()) {
    auto x = homogeneous_weight(f, w);
    if (!x) throw DomainError("weight_decomposition: space is not torus-fixed");
    ++out[*x];
  }
  return out;
}

std::vector<long> torus_weights(const TangentReport& report, const WeightVec& w) {
  std::vector<long> gen_weight;
  for (const auto& g : report.generators) {
    auto x = homogeneous_weight(g, w);
    if (!x) throw DomainError("torus_weights: generator " + g.str() + " is not weight-homogeneous");
    gen_weight.push_back(*x);
  }
  std::map<long, std::vector<std::map<CoordKey, Scalar>>> blocks;
  for (const auto& b : report.basis)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (const auto& [m, c] : b[i].terms()) blocks[weight_of(m, w) - gen_weight[i]];
  for (auto& [c, vecs] : blocks)
    for (const auto& b : report.basis) {
      std::map<CoordKey, Scalar> v;
      for (std::size_t i = 0; i < b.size(); ++i)
        for (const auto& [m, coef] : b[i].terms())
          if (weight_of(m, w) - gen_weight[i] == c) v[{i, m.e}] = coef;
      vecs.push_back(std::move(v));
    }
  std::vector<long> out;
  for (const auto& [c, vecs] : blocks) out.insert(out.end(), rank_of_coordinate_rows(vecs), c);
  if (out.size() != report.dimension) throw DomainError("torus_weights: tangent space is not torus-stable");
  return out;
}

WeightVec sl2_torus_n4() { return {1, 1, -1, -1}; }

ExactMatrix sl2_matrix_n4(const Scalar& a00, const Scalar& a01, const Scalar& a10, const Scalar& a11) {
  if (a00 * a11 - a01 * a10 != 1) throw DomainError("sl2_matrix_n4: determinant must be 1");
  return ExactMatrix::from_rows({{a00, 0, a10, 0}, {0, a00, 0, -a10}, {a01, 0, a11, 0}, {0, -a01, 0, a11}});
}

ExcessReport excess_degree_arithmetic(long hc, long c1n) {
  ExcessReport r;
  r.per_curve = 6 * hc - c1n;
  r.excess = 2 * r.per_curve;
  r.total = 310 + r.excess;
  return r;
}

long split_bundle_degree(long rank, long twist) { return rank * twist; }

long fano_index_from_adjunction(long c1n, long hc) {
  if (hc == 0 || (c1n + 2) % hc != 0) throw DomainError("adjunction gives a non-integral index");
  return (c1n + 2) / hc;
}

}  // namespace vps
