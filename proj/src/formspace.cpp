#include "vps/formspace.hpp"

#include "vps/errors.hpp"

namespace vps {

FormSpace FormSpace::full(Ring ring, int nvars, int degree) {
  FormSpace s(ring, nvars, degree);
  for (const auto& m : monomials_of_degree(nvars, degree)) s.rows_.emplace(m, Form::monomial(ring, nvars, m));
  return s;
}

FormSpace FormSpace::span(Ring ring, int nvars, int degree, const std::vector<Form>& forms) {
  FormSpace s(ring, nvars, degree);
  for (const auto& f : forms) s.insert(f);
  return s;
}

Form FormSpace::reduce(const Form& f) const {
  if (f.degree() != degree_ && !f.is_zero()) throw DomainError("FormSpace::reduce: degree mismatch");
  Form r = f;
  if (r.is_zero()) return Form(ring_, nvars_, degree_);
  if (r.ring() != ring_ || r.nvars() != nvars_) throw DomainError("FormSpace::reduce: ring mismatch");
  // Rows carry no other pivots, so one sweep over the original pivot terms is enough.
  for (const auto& [m, c] : f.terms()) {
    auto it = rows_.find(m);
    if (it == rows_.end()) continue;
    Scalar cur = r.coeff(m);
    if (cur != 0) r.axpy(-cur, it->second);
  }
  return r;
}

bool FormSpace::insert(const Form& f) {
  if (f.is_zero()) return false;
  Form r = reduce(f);
  if (r.is_zero()) return false;
  r = r.monic();
  const Mono lead = r.lead_mono();
  for (auto& [m, row] : rows_) {
    Scalar c = row.coeff(lead);
    if (c != 0) row.axpy(-c, r);
  }
  rows_.emplace(lead, std::move(r));
  return true;
}

bool FormSpace::contains(const FormSpace& other) const {
  for (const auto& [m, row] : other.rows_)
    if (!contains(row)) return false;
  return true;
}

std::vector<Form> FormSpace::basis() const {
  std::vector<Form> out;
  out.reserve(rows_.size());
  for (const auto& [m, row] : rows_) out.push_back(row);
  return out;
}

std::vector<Mono> FormSpace::standard_monomials() const {
  std::vector<Mono> out;
  for (const auto& m : monomials_of_degree(nvars_, degree_))
    if (!rows_.count(m)) out.push_back(m);
  return out;
}

FormSpace FormSpace::times_monomials(int e) const {
  FormSpace out(ring_, nvars_, degree_ + e);
  const auto& mons = monomials_of_degree(nvars_, e);
  for (const auto& [pm, row] : rows_)
    for (const auto& m : mons) out.insert(row.times(m));
  return out;
}

FormSpace intersect(const FormSpace& a, const FormSpace& b) {
  if (a.degree() != b.degree()) throw DomainError("intersect: degree mismatch");
  // Reduce A's basis modulo B while tracking which combination of A produced
  // each remainder; a combination whose remainder vanishes lies in A ∩ B.
  struct Tracked {
    Form rem;
    Form comb;
  };
  std::map<Mono, Tracked, GrevlexGreater> echelon;
  FormSpace out(a.ring(), a.nvars(), a.degree());
  for (const auto& f : a.basis()) {
    Tracked t{b.reduce(f), f};
    while (!t.rem.is_zero()) {
      auto it = echelon.find(t.rem.lead_mono());
      if (it == echelon.end()) break;
      Scalar c = t.rem.lead_coeff() / it->second.rem.lead_coeff();
      t.rem.axpy(-c, it->second.rem);
      t.comb.axpy(-c, it->second.comb);
    }
    if (t.rem.is_zero()) {
      out.insert(t.comb);
    } else {
      Mono lead = t.rem.lead_mono();
      echelon.emplace(lead, std::move(t));
    }
  }
  return out;
}

FormSpace sum(const FormSpace& a, const FormSpace& b) {
  FormSpace out = a;
  for (const auto& f : b.basis()) out.insert(f);
  return out;
}

std::vector<Scalar> monomial_coordinates(const Form& f) {
  return f.coordinates(monomials_of_degree(f.nvars(), f.degree()));
}

Form form_from_coordinates(Ring ring, int nvars, int degree, const std::vector<Scalar>& c) {
  const auto& mons = monomials_of_degree(nvars, degree);
  if (c.size() != mons.size()) throw DomainError("coordinate vector has wrong length");
  Form f(ring, nvars, degree);
  for (std::size_t i = 0; i < c.size(); ++i) f.add_term(mons[i], c[i]);
  return f;
}

}  // namespace vps
