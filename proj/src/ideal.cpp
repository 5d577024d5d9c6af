#include "vps/ideal.hpp"

#include <algorithm>

#include "vps/errors.hpp"

namespace vps {

std::string HilbFn::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  if (eventual) out += ",...";
  return out + ")";
}

GradedIdeal::GradedIdeal(Ring ring, int nvars, std::vector<Form> generators)
    : ring_(ring), nvars_(nvars), cache_(std::make_shared<Cache>()) {
  if (nvars < 1 || nvars > kMaxVars) throw DomainError("number of variables must be in 1.." + std::to_string(kMaxVars));
  for (auto& g : generators) {
    if (g.ring() != ring || g.nvars() != nvars) throw DomainError("generator ring does not match the ideal");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

GradedIdeal GradedIdeal::unit(Ring ring, int nvars) {
  return GradedIdeal(ring, nvars, {Form::constant(ring, nvars, 1)});
}

GradedIdeal GradedIdeal::parse(std::string_view text) { return from_text(parse_ideal_text(text)); }

GradedIdeal GradedIdeal::from_text(const IdealText& text) { return GradedIdeal(text.ring, text.nvars, text.generators); }

GradedIdeal GradedIdeal::from_strings(int nvars, const std::vector<std::string>& gens, Ring ring) {
  std::vector<Form> forms;
  for (std::size_t i = 0; i < gens.size(); ++i) forms.push_back(parse_form(gens[i], nvars, ring, i + 1));
  for (const auto& f : forms)
    if (f.ring() != ring) throw DomainError("generator ring does not match the ideal");
  return GradedIdeal(ring, nvars, std::move(forms));
}

GradedIdeal GradedIdeal::from_pieces(Ring ring, int nvars, const std::vector<FormSpace>& pieces) {
  GradedIdeal out(ring, nvars, extract_generators(pieces));
  std::lock_guard<std::recursive_mutex> lock(out.cache_->mu);
  for (std::size_t d = 0; d < pieces.size(); ++d) out.cache_->pieces.emplace(static_cast<int>(d), pieces[d]);
  return out;
}

int GradedIdeal::max_generator_degree() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

const FormSpace& GradedIdeal::piece(int d) const {
  if (d < 0) throw DomainError("negative degree");
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  auto it = cache_->pieces.find(d);
  if (it != cache_->pieces.end()) return it->second;
  FormSpace sp(ring_, nvars_, d);
  if (d > 0) {
    const FormSpace& prev = piece(d - 1);
    if (prev.dim() == static_cast<std::size_t>(num_monomials(nvars_, d - 1))) {
      sp = FormSpace::full(ring_, nvars_, d);
    } else {
      sp = prev.times_monomials(1);
    }
  }
  for (const auto& g : gens_)
    if (g.degree() == d) sp.insert(g);
  return cache_->pieces.emplace(d, std::move(sp)).first->second;
}

long GradedIdeal::hilbert(int d) const { return num_monomials(nvars_, d) - static_cast<long>(dim(d)); }

bool GradedIdeal::contains(const Form& f) const {
  if (f.is_zero()) return true;
  return piece(f.degree()).contains(f);
}

bool GradedIdeal::contains(const GradedIdeal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool GradedIdeal::equal_up_to(const GradedIdeal& other, int d_max) const {
  for (int d = 0; d <= d_max; ++d)
    if (!(piece(d) == other.piece(d))) return false;
  return true;
}

std::vector<Form> GradedIdeal::minimal_generators(int d_max) const {
  std::vector<FormSpace> pieces;
  for (int d = 0; d <= d_max; ++d) pieces.push_back(piece(d));
  return extract_generators(pieces);
}

std::vector<Form> extract_generators(const std::vector<FormSpace>& pieces) {
  std::vector<Form> gens;
  for (std::size_t d = 0; d < pieces.size(); ++d) {
    const FormSpace& p = pieces[d];
    FormSpace generated = d == 0 ? FormSpace(p.ring(), p.nvars(), 0) : pieces[d - 1].times_monomials(1);
    if (generated.dim() == p.dim()) continue;
    for (const auto& row : p.basis()) {
      if (generated.is_pivot(row.lead_mono())) continue;
      Form g = generated.reduce(row).monic();
      if (g.is_zero()) continue;
      generated.insert(g);
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

}  // namespace vps
