#include "vps/limits.hpp"

#include "vps/errors.hpp"
#include "vps/formspace.hpp"
#include "vps/grobner.hpp"

namespace vps {

long weight_of(const Mono& m, const WeightVec& w) {
  long s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * m.e[i];
  return s;
}

LaurentForm LaurentForm::normalized() const {
  LaurentForm out;
  const long k = min_exponent();
  for (const auto& [e, f] : parts) out.parts.emplace(e - k, f);
  return out;
}

Form LaurentForm::at(const Scalar& lambda) const {
  if (lambda == 0) throw DomainError("LaurentForm::at needs λ ≠ 0");
  const Form& first = parts.begin()->second;
  Form out(first.ring(), first.nvars(), first.degree());
  for (const auto& [e, f] : parts) {
    Scalar p = 1;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) p *= lambda;
    out += f * (e < 0 ? Scalar(1) / p : p);
  }
  return out;
}

std::string LaurentForm::str() const {
  std::string out;
  for (const auto& [e, f] : parts) {
    if (!out.empty()) out += " + ";
    std::string body = f.terms().size() > 1 ? "(" + f.str() + ")" : f.str();
    out += e == 0 ? body : "t^" + std::to_string(e) + "*" + body;
  }
  return out;
}

GradedIdeal LaurentFamily::fiber(const Scalar& value) const {
  std::vector<Form> gens;
  for (const auto& g : generators) gens.push_back(g.at(value));
  return GradedIdeal(Ring::S, nvars, gens);
}

LaurentFamily act_torus(const GradedIdeal& ideal, const WeightVec& w) {
  if (static_cast<int>(w.size()) != ideal.nvars()) throw DomainError("weight vector length must equal n");
  LaurentFamily fam;
  fam.weights = w;
  fam.nvars = ideal.nvars();
  for (const auto& g : ideal.generators()) {
    LaurentForm lf;
    for (const auto& [m, c] : g.terms()) {
      auto it = lf.parts.try_emplace(weight_of(m, w), Form(g.ring(), g.nvars(), g.degree())).first;
      it->second.add_term(m, c);
    }
    fam.raw.push_back(lf);
    fam.generators.push_back(lf.normalized());
  }
  return fam;
}

namespace {

// Vector over k[λ, λ^{-1}]: exponent -> coefficient vector.
using LaurentVec = std::map<long, std::vector<Scalar>>;

bool is_zero_vec(const std::vector<Scalar>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

void axpy(LaurentVec& a, const Scalar& c, const LaurentVec& b) {
  for (const auto& [e, v] : b) {
    auto& t = a.try_emplace(e, std::vector<Scalar>(v.size(), 0)).first->second;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) t[k] += c * v[k];
  }
  for (auto it = a.begin(); it != a.end();) it = is_zero_vec(it->second) ? a.erase(it) : std::next(it);
}

LaurentVec normalize(const LaurentVec& v) {
  LaurentVec out;
  const long k = v.begin()->first;
  for (const auto& [e, c] : v) out.emplace(e - k, c);
  return out;
}

struct EchelonRow {
  std::vector<Scalar> vals;
  std::vector<Scalar> combo;  // vals = sum combo[r] * accepted[r](0)
  std::size_t pivot = 0;
};

}  // namespace

FormSpace weight_limit_piece(const FormSpace& piece, const WeightVec& w) {
  const int n = piece.nvars(), d = piece.degree();
  const auto& monos = monomials_of_degree(n, d);
  std::vector<LaurentVec> accepted;
  std::vector<EchelonRow> echelon;
  for (const auto& f : piece.basis()) {
    LaurentVec v;
    for (std::size_t k = 0; k < monos.size(); ++k) {
      Scalar c = f.coeff(monos[k]);
      if (c == 0) continue;
      v.try_emplace(weight_of(monos[k], w), std::vector<Scalar>(monos.size(), 0)).first->second[k] = c;
    }
    for (int iter = 0;; ++iter) {
      if (iter > 100000) throw InternalError("weight limit did not terminate");
      v = normalize(v);
      std::vector<Scalar> v0 = v.at(0);
      std::vector<Scalar> combo(accepted.size() + 1, 0);
      for (const auto& row : echelon) {
        if (v0[row.pivot] == 0) continue;
        Scalar c = v0[row.pivot] / row.vals[row.pivot];
        for (std::size_t k = 0; k < v0.size(); ++k)
          if (row.vals[k] != 0) v0[k] -= c * row.vals[k];
        for (std::size_t r = 0; r < row.combo.size(); ++r)
          if (row.combo[r] != 0) combo[r] += c * row.combo[r];
      }
      if (!is_zero_vec(v0)) {
        EchelonRow row;
        row.pivot = 0;
        while (v0[row.pivot] == 0) ++row.pivot;
        row.vals = std::move(v0);
        for (auto& c : combo) c = -c;
        combo[accepted.size()] = 1;
        row.combo = std::move(combo);
        for (auto& other : echelon) other.combo.resize(accepted.size() + 1, 0);
        accepted.push_back(std::move(v));
        echelon.push_back(std::move(row));
        break;
      }
      // v(0) is a combination of accepted constant terms: subtract and divide by λ
      for (std::size_t r = 0; r < accepted.size(); ++r)
        if (combo[r] != 0) axpy(v, -combo[r], accepted[r]);
      if (v.empty()) throw InternalError("basis became dependent over k(λ)");
    }
  }
  FormSpace out(piece.ring(), n, d);
  for (const auto& a : accepted) out.insert(form_from_coordinates(piece.ring(), n, d, a.at(0)));
  if (out.dim() != piece.dim()) throw InternalError("limit lost dimension");
  return out;
}

GradedIdeal weight_limit(const GradedIdeal& ideal, const WeightVec& w, int d_max) {
  if (static_cast<int>(w.size()) != ideal.nvars()) throw DomainError("weight vector length must equal n");
  if (d_max < 0) d_max = determinacy_bound(ideal);
  std::vector<FormSpace> pieces;
  for (int d = 0; d <= d_max; ++d) pieces.push_back(weight_limit_piece(ideal.piece(d), w));
  for (int d = 0; d < d_max; ++d)
    if (!pieces[d + 1].contains(pieces[d].times_monomials(1)))
      throw InternalError("degreewise limits are not closed under multiplication at degree " + std::to_string(d));
  return GradedIdeal::from_pieces(ideal.ring(), ideal.nvars(), pieces);
}

std::vector<Scalar> point_limit(const std::vector<Scalar>& p, const WeightVec& w) {
  if (p.size() != w.size()) throw DomainError("weight vector length must equal n");
  std::optional<long> best;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0 && (!best || w[i] > *best)) best = w[i];
  if (!best) throw DomainError("the zero vector is not a projective point");
  std::vector<Scalar> out(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0 && w[i] == *best) out[i] = p[i];
  return out;
}

std::optional<long> semi_invariant_weight(const Form& q, const WeightVec& w) {
  std::optional<long> s;
  for (const auto& [m, c] : q.terms()) {
    long x = weight_of(m, w);
    if (s && *s != x) return std::nullopt;
    s = x;
  }
  return s.value_or(0);
}

QuadricDegeneration degenerate_on_quadric(const GradedIdeal& ideal, const Quadric& q, const WeightVec& w, int d_max) {
  auto s = semi_invariant_weight(q.form, w);
  if (!s) throw DomainError("q is not semi-invariant under the weights");
  QuadricDegeneration out;
  out.q_weight = *s;
  out.limit = weight_limit(ideal, w, d_max);
  auto apolar = [&](const GradedIdeal& i) {
    for (const auto& f : i.piece(2).basis())
      if (!apply_diff(f, q.form).is_zero()) return false;
    return true;
  };
  out.limit_apolar = apolar(out.limit);
  out.limit_saturated = is_saturated(out.limit);
  out.saturation_apolar = out.limit_saturated ? out.limit_apolar : apolar(saturate(out.limit));
  return out;
}

}  // namespace vps
