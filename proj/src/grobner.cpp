#include "vps/grobner.hpp"

#include <algorithm>
#include <map>

#include "vps/errors.hpp"

namespace vps {

namespace {

struct Term {
  Mono m;
  Scalar c;
};

/// Terms sorted descending under the active order.
using Poly = std::vector<Term>;

Poly to_poly(const Form& f, const MonoOrder& ord) {
  Poly p;
  p.reserve(f.size());
  for (const auto& [m, c] : f.terms()) p.push_back({m, c});
  if (ord.kind() != MonoOrder::Kind::Grevlex || ord.rank().empty() ||
      !std::is_sorted(ord.rank().begin(), ord.rank().end()))
    std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
  return p;
}

Form to_form(const Poly& p, Ring ring, int n, int degree) {
  Form f(ring, n, degree);
  for (const auto& t : p) f.add_term(t.m, t.c);
  return f;
}

/// p - c * mono * q
Poly sub_scaled(const Poly& p, const Scalar& c, const Mono& mono, const Poly& q, const MonoOrder& ord) {
  Poly out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < q.size()) {
    if (j == q.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Mono qm = q[j].m * mono;
    if (i == p.size()) {
      out.push_back({qm, -c * q[j].c});
      ++j;
      continue;
    }
    int s = ord.cmp(p[i].m, qm);
    if (s > 0) {
      out.push_back(p[i++]);
    } else if (s < 0) {
      out.push_back({qm, -c * q[j].c});
      ++j;
    } else {
      Scalar v = p[i].c - c * q[j].c;
      if (v != 0) out.push_back({qm, v});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(Poly& p) {
  if (p.empty() || p.front().c == 1) return;
  Scalar inv = 1 / p.front().c;
  for (auto& t : p) t.c *= inv;
}

/// Full reduction of p by the monic polynomials G.
Poly reduce_full(Poly p, const std::vector<Poly>& G, const MonoOrder& ord) {
  Poly rem;
  while (!p.empty()) {
    const Term lt = p.front();
    const Poly* div = nullptr;
    for (const auto& g : G)
      if (!g.empty() && Mono::divides(g.front().m, lt.m)) {
        div = &g;
        break;
      }
    if (div) {
      p = sub_scaled(p, lt.c, lt.m / div->front().m, *div, ord);
    } else {
      rem.push_back(lt);
      p.erase(p.begin());
    }
  }
  return rem;
}

struct Pair {
  std::size_t i, j;
  Mono lcm;
  int degree;
};

}  // namespace

Mono leading_monomial(const Form& f, const MonoOrder& order) {
  if (f.is_zero()) throw DomainError("leading monomial of zero");
  const Mono* best = nullptr;
  for (const auto& [m, c] : f.terms())
    if (!best || order.greater(m, *best)) best = &m;
  return *best;
}

GroebnerBasis buchberger(const std::vector<Form>& gens, const MonoOrder& order) {
  GroebnerBasis out{order, {}, {}};
  if (gens.empty()) return out;
  const Ring ring = gens.front().ring();
  const int n = gens.front().nvars();

  std::vector<Poly> G;
  std::vector<Pair> pending;
  std::vector<std::vector<bool>> open;  // open[i][j], i < j

  auto add = [&](Poly h) {
    make_monic(h);
    const std::size_t k = G.size();
    G.push_back(std::move(h));
    for (auto& row : open) row.push_back(false);
    open.emplace_back(k + 1, false);
    for (std::size_t i = 0; i < k; ++i) {
      if (G[i].empty()) continue;
      Mono l = Mono::lcm(G[i].front().m, G[k].front().m);
      pending.push_back({i, k, l, l.degree()});
      open[i][k] = true;
    }
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Poly h = reduce_full(to_poly(g, order), G, order);
    if (!h.empty()) add(std::move(h));
  }

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      return order.greater(b.lcm, a.lcm);
    });
    Pair pr = *best;
    pending.erase(best);
    open[pr.i][pr.j] = false;
    const Mono li = G[pr.i].front().m, lj = G[pr.j].front().m;
    if (Mono::coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || G[k].empty()) continue;
      if (!Mono::divides(G[k].front().m, pr.lcm)) continue;
      bool ik_open = k < pr.i ? open[k][pr.i] : open[pr.i][k];
      bool jk_open = k < pr.j ? open[k][pr.j] : open[pr.j][k];
      if (!ik_open && !jk_open) chain = true;
    }
    if (chain) continue;
    Poly s = sub_scaled(Poly{}, Scalar(-1), pr.lcm / li, G[pr.i], order);
    s = sub_scaled(s, Scalar(1), pr.lcm / lj, G[pr.j], order);
    Poly h = reduce_full(std::move(s), G, order);
    if (!h.empty()) add(std::move(h));
  }

  // minimize and interreduce
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (Mono::divides(G[j].front().m, G[i].front().m) && (G[j].front().m != G[i].front().m || j < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly head{minimal[i].front()};
    Poly tail(minimal[i].begin() + 1, minimal[i].end());
    Poly r = reduce_full(std::move(tail), others, order);
    head.insert(head.end(), r.begin(), r.end());
    make_monic(head);
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Poly& a, const Poly& b) { return order.greater(a.front().m, b.front().m); });
  for (const auto& p : reduced) {
    out.leads.push_back(p.front().m);
    out.polys.push_back(to_form(p, ring, n, p.front().m.degree()));
  }
  return out;
}

GroebnerBasis groebner(const GradedIdeal& ideal, const MonoOrder& order) {
  return buchberger(ideal.generators(), order);
}

GroebnerBasis groebner(const GradedIdeal& ideal) { return groebner(ideal, MonoOrder::grevlex(ideal.nvars())); }

Form normal_form(const Form& f, const GroebnerBasis& gb) {
  std::vector<Poly> G;
  for (const auto& g : gb.polys) G.push_back(to_poly(g, gb.order));
  Poly r = reduce_full(to_poly(f, gb.order), G, gb.order);
  return to_form(r, f.ring(), f.nvars(), f.degree());
}

// ---- Hilbert series -------------------------------------------------------

namespace {

std::vector<Mono> minimalize(std::vector<Mono> gens) {
  std::sort(gens.begin(), gens.end(), [](const Mono& a, const Mono& b) { return grevlex_cmp(a, b) < 0; });
  std::vector<Mono> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (Mono::divides(o, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<long> poly_add(std::vector<long> a, const std::vector<long>& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  return a;
}

std::vector<long> numerator(std::vector<Mono> gens, int n) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.degree() == 0) return {0};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!Mono::coprime(gens[i], gens[j])) coprime = false;
  if (coprime) {
    std::vector<long> r{1};
    for (const auto& g : gens) {
      std::vector<long> f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] = -1;
      r = poly_mul(r, f);
    }
    return r;
  }
  // pivot on the variable dividing the most generators
  int best = -1, count = 0;
  for (int v = 0; v < n; ++v) {
    int c = 0;
    for (const auto& g : gens)
      if (g.e[v]) ++c;
    if (c > count) {
      count = c;
      best = v;
    }
  }
  Mono x = Mono::var(best);
  std::vector<Mono> plus = gens;
  plus.push_back(x);
  std::vector<Mono> colon;
  for (const auto& g : gens) colon.push_back(g.e[best] ? g / x : g);
  // S/M has series S/(M + x) + t * S/(M : x)
  return poly_add(numerator(std::move(plus), n), numerator(std::move(colon), n), 1);
}

/// Coefficients (ascending) of C(x + c, a) as a polynomial in x.
std::vector<Scalar> binomial_poly(long c, long a) {
  std::vector<Scalar> p{Scalar(1)};
  for (long j = 0; j < a; ++j) {
    // multiply by (x + c - j)
    std::vector<Scalar> q(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] += p[i] * (c - j);
    }
    p = std::move(q);
  }
  mpz_class fact = 1;
  for (long j = 2; j <= a; ++j) fact *= j;
  for (auto& v : p) v /= fact;
  return p;
}

void trim(std::vector<Scalar>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

long HilbertSeries::value(int d) const {
  long total = 0;
  for (std::size_t k = 0; k < numerator.size() && static_cast<int>(k) <= d; ++k)
    total += numerator[k] * num_monomials(nvars, d - static_cast<int>(k));
  return total;
}

HilbertSeries hilbert_series(const std::vector<Mono>& leads, int nvars) {
  HilbertSeries s;
  s.nvars = nvars;
  s.numerator = numerator(leads, nvars);
  while (s.numerator.size() > 1 && s.numerator.back() == 0) s.numerator.pop_back();
  return s;
}

Scalar HilbertPolynomial::operator()(long t) const {
  Scalar v = 0, pw = 1;
  for (const auto& c : coeffs) {
    v += c * pw;
    pw *= t;
  }
  return v;
}

std::string HilbertPolynomial::str() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] == 0) continue;
    Scalar a = abs(coeffs[k]);
    if (out.empty()) {
      if (coeffs[k] < 0) out += "-";
    } else {
      out += coeffs[k] < 0 ? " - " : " + ";
    }
    if (a != 1 || k == 0) out += a.get_str();
    if (k >= 1) out += (a != 1 ? "*" : std::string()) + "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

HilbertPolynomial hilbert_polynomial(const HilbertSeries& series) {
  const int n = series.nvars;
  std::vector<Scalar> total;
  for (std::size_t k = 0; k < series.numerator.size(); ++k) {
    if (series.numerator[k] == 0) continue;
    // C(d - k + n - 1, n - 1) as a polynomial in d
    auto b = binomial_poly(n - 1 - static_cast<long>(k), n - 1);
    if (total.size() < b.size()) total.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) total[i] += b[i] * series.numerator[k];
  }
  trim(total);
  return {total};
}

long gotzmann_number(const HilbertPolynomial& p) {
  std::vector<Scalar> rest = p.coeffs;
  trim(rest);
  long s = 0;
  while (!rest.empty()) {
    long a = static_cast<long>(rest.size()) - 1;
    if (rest.back() < 0) throw DomainError("not a Hilbert polynomial: negative leading coefficient");
    auto b = binomial_poly(a - s, a);
    for (std::size_t i = 0; i < b.size(); ++i) rest[i] -= b[i];
    trim(rest);
    ++s;
    if (static_cast<long>(rest.size()) - 1 > a || s > 1000000)
      throw DomainError("not a Hilbert polynomial: no Gotzmann representation");
  }
  return s;
}

int determinacy_bound(const GradedIdeal& ideal) {
  auto gb = groebner(ideal);
  auto hp = hilbert_polynomial(hilbert_series(gb.leads, ideal.nvars()));
  return static_cast<int>(gotzmann_number(hp)) + ideal.max_generator_degree();
}

HilbFn hilbert_function(const GradedIdeal& ideal, int d_max) {
  HilbFn h;
  for (int d = 0; d <= d_max; ++d) h.values.push_back(ideal.hilbert(d));
  auto gb = groebner(ideal);
  auto series = hilbert_series(gb.leads, ideal.nvars());
  auto hp = hilbert_polynomial(series);
  if (hp.is_constant()) {
    long c = hp.is_zero() ? 0 : hp.coeffs[0].get_num().get_si();
    int last_diff = -1;
    int top = static_cast<int>(series.numerator.size()) + 1;
    for (int d = 0; d <= top; ++d)
      if (series.value(d) != c) last_diff = d;
    h.eventual = c;
    h.onset = last_diff + 1;
  }
  return h;
}

// ---- colon, saturation, intersection ---------------------------------------

GradedIdeal colon_variable(const GradedIdeal& ideal, int var) {
  auto gb = groebner(ideal, MonoOrder::grevlex_last(ideal.nvars(), var));
  std::vector<Form> gens;
  for (const auto& g : gb.polys) {
    int k = 255;
    for (const auto& [m, c] : g.terms()) k = std::min<int>(k, m.e[var]);
    Form q(g.ring(), g.nvars(), g.degree() - k);
    for (const auto& [m, c] : g.terms()) {
      Mono mm = m;
      mm.e[var] = static_cast<std::uint8_t>(mm.e[var] - k);
      q.add_term(mm, c);
    }
    gens.push_back(std::move(q));
  }
  return GradedIdeal(ideal.ring(), ideal.nvars(), std::move(gens));
}

GradedIdeal saturate(const GradedIdeal& ideal) {
  const int n = ideal.nvars();
  if (ideal.is_zero()) return ideal;
  auto gb = groebner(ideal);
  auto hp = hilbert_polynomial(hilbert_series(gb.leads, n));
  if (hp.is_zero()) return GradedIdeal::unit(ideal.ring(), n);
  int top = std::max<int>(1, static_cast<int>(gotzmann_number(hp)));
  std::vector<GradedIdeal> colons;
  for (int v = 0; v < n; ++v) colons.push_back(colon_variable(ideal, v));
  std::vector<FormSpace> pieces;
  for (int d = 0; d <= top; ++d) {
    FormSpace p = colons[0].piece(d);
    for (int v = 1; v < n; ++v) p = intersect(p, colons[v].piece(d));
    pieces.push_back(std::move(p));
  }
  return GradedIdeal::from_pieces(ideal.ring(), n, pieces);
}

bool is_saturated(const GradedIdeal& ideal) {
  if (ideal.is_zero()) return true;
  int bound = determinacy_bound(ideal);
  GradedIdeal sat = saturate(ideal);
  for (int d = 0; d <= bound; ++d)
    if (ideal.dim(d) != sat.dim(d)) return false;
  return true;
}

GradedIdeal intersect_ideals(const GradedIdeal& a, const GradedIdeal& b, int d_max) {
  if (a.ring() != b.ring() || a.nvars() != b.nvars()) throw DomainError("intersect_ideals: ring mismatch");
  std::vector<FormSpace> pieces;
  for (int d = 0; d <= d_max; ++d) pieces.push_back(intersect(a.piece(d), b.piece(d)));
  return GradedIdeal::from_pieces(a.ring(), a.nvars(), pieces);
}

// ---- syzygies ---------------------------------------------------------------

namespace {

struct SparseCombo {
  std::map<std::size_t, Scalar> c;
  void axpy(const Scalar& a, const SparseCombo& o) {
    for (const auto& [k, v] : o.c) {
      auto [it, ins] = c.try_emplace(k, a * v);
      if (!ins) {
        it->second += a * v;
        if (it->second == 0) c.erase(it);
      }
    }
  }
};

}  // namespace

std::vector<SyzygyPiece> module_syzygies(const std::vector<Form>& gens, int d_max) {
  std::vector<SyzygyPiece> out;
  if (gens.empty()) return out;
  const Ring ring = gens.front().ring();
  const int n = gens.front().nvars();
  for (int d = 0; d <= d_max; ++d) {
    SyzygyPiece piece{d, {}};
    // columns of the multiplication map: (generator index, multiplier)
    std::vector<std::pair<std::size_t, Mono>> columns;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int e = d - gens[i].degree();
      if (e < 0) continue;
      for (const auto& m : monomials_of_degree(n, e)) columns.emplace_back(i, m);
    }
    struct Row {
      Form rem;
      SparseCombo combo;
    };
    std::map<Mono, Row, GrevlexGreater> echelon;
    std::vector<SparseCombo> kernel;
    for (std::size_t k = 0; k < columns.size(); ++k) {
      Row r{gens[columns[k].first].times(columns[k].second), {}};
      r.combo.c[k] = 1;
      while (!r.rem.is_zero()) {
        auto it = echelon.find(r.rem.lead_mono());
        if (it == echelon.end()) break;
        Scalar f = r.rem.lead_coeff() / it->second.rem.lead_coeff();
        r.rem.axpy(-f, it->second.rem);
        r.combo.axpy(-f, it->second.combo);
      }
      if (r.rem.is_zero()) {
        kernel.push_back(std::move(r.combo));
      } else {
        Mono lead = r.rem.lead_mono();
        echelon.emplace(lead, std::move(r));
      }
    }
    for (const auto& kv : kernel) {
      Syzygy s;
      for (const auto& g : gens) s.emplace_back(ring, n, std::max(0, d - g.degree()));
      for (const auto& [k, v] : kv.c) s[columns[k].first].add_term(columns[k].second, v);
      piece.basis.push_back(std::move(s));
    }
    out.push_back(std::move(piece));
  }
  return out;
}

std::vector<Syzygy> linear_syzygies(const std::vector<Form>& gens) {
  for (const auto& g : gens)
    if (g.degree() != 2) throw DomainError("linear_syzygies expects quadrics");
  if (gens.empty()) return {};
  auto pieces = module_syzygies(gens, 3);
  return pieces[3].basis;
}

}  // namespace vps
