#include "vps/grassmann.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "vps/errors.hpp"
#include "vps/vps.hpp"

namespace vps {

namespace {

void subsets_rec(int m, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= m - (k - static_cast<int>(cur.size())); ++i) {
    cur.push_back(i);
    subsets_rec(m, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Scalar> raw_minors(const ExactMatrix& rows, const std::vector<std::vector<int>>& subsets) {
  const std::size_t k = rows.rows();
  std::vector<Scalar> out;
  out.reserve(subsets.size());
  ExactMatrix sub(k, k);
  for (const auto& s : subsets) {
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) sub(r, c) = rows(r, s[c]);
    out.push_back(determinant(sub));
  }
  return out;
}

void canonicalize(std::vector<Scalar>& v) {
  for (const auto& c : v)
    if (c != 0) {
      Scalar inv = 1 / c;
      for (auto& x : v) x *= inv;
      return;
    }
  throw DomainError("zero Plücker vector");
}

std::size_t rank_mod(const ExactMatrix& m, std::uint64_t p, std::vector<std::size_t>* order = nullptr) {
  if (m.rows() == 0) {
    if (order) order->clear();
    return 0;
  }
  ModMatrix a = ModMatrix::reduce(m, p);
  return a.echelon(order).size();
}

ExactMatrix rows_of(const ExactMatrix& m, std::size_t count) {
  ExactMatrix out(0, m.cols());
  for (std::size_t r = 0; r < count && r < m.rows(); ++r) out.append_row(m.row(r));
  return out;
}

const Form& split_quadric() {
  static const Form f = parse_form("y1*y4 + y2*y3", 4);
  return f;
}

}  // namespace

std::vector<std::vector<int>> k_subsets(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (k < 0 || k > m) return out;
  subsets_rec(m, k, 0, cur, out);
  return out;
}

std::string PluckerVec::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << to_string(coords[i]);
  os << "]";
  return os.str();
}

PluckerVec plucker(const ExactMatrix& rows) {
  RrefResult r = rref(rows);
  if (r.rank != rows.rows()) throw DomainError("plucker: rows are linearly dependent");
  PluckerVec out{static_cast<int>(rows.rows()), static_cast<int>(rows.cols()), {}};
  out.coords = raw_minors(r.matrix, k_subsets(out.m, out.k));
  canonicalize(out.coords);
  return out;
}

ExactMatrix frame_coordinates(const FormSpace& v, const FormSpace& frame) {
  auto fb = frame.basis();
  ExactMatrix out(0, fb.size());
  for (const auto& f : v.basis()) {
    if (!frame.contains(f)) throw DomainError("frame_coordinates: " + f.str() + " is outside the frame");
    std::vector<Scalar> row;
    for (const auto& b : fb) row.push_back(f.coeff(b.lead_mono()));
    out.append_row(row);
  }
  return out;
}

PluckerVec plucker(const FormSpace& v, const FormSpace& frame) { return plucker(frame_coordinates(v, frame)); }

FormSpace plucker_frame(const Quadric& q) { return apolar_piece(q.form, 2); }

Scalar evaluate(const PluckerQuadric& f, const std::vector<Scalar>& p) {
  Scalar s = 0;
  for (const auto& [ij, c] : f) s += c * p.at(ij.first) * p.at(ij.second);
  return s;
}

PluckerQuadricSpace plucker_quadric_space(int k, int m, std::uint64_t seed, const std::vector<std::uint64_t>& primes) {
  if (k <= 0 || k >= m) throw DomainError("plucker_quadric_space requires 0 < k < m");
  auto subsets = k_subsets(m, k);
  const std::size_t n = subsets.size();
  std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> blocks;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::vector<int> w(m, 0);
      for (int a : subsets[i]) ++w[a];
      for (int a : subsets[j]) ++w[a];
      blocks[w].emplace_back(i, j);
    }
  std::size_t largest = 0;
  for (const auto& [w, b] : blocks) largest = std::max(largest, b.size());
  const std::size_t base = largest + 6;
  const std::size_t total = base + (base + 3) / 4;

  ScalarRng rng(seed);
  std::vector<std::vector<Scalar>> points;
  while (points.size() < total) {
    ExactMatrix a(k, m);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < m; ++c) a(r, c) = rng.small_int(3);
    if (rank(a) != static_cast<std::size_t>(k)) continue;
    points.push_back(raw_minors(a, subsets));
  }

  PluckerQuadricSpace out;
  out.k = k;
  out.m = m;
  out.samples = total;
  out.blocks = blocks.size();
  out.primes = primes;
  out.modular_dimensions.assign(primes.size(), 0);
  for (const auto& [w, block] : blocks) {
    ExactMatrix e(total, block.size());
    for (std::size_t s = 0; s < total; ++s)
      for (std::size_t c = 0; c < block.size(); ++c) e(s, c) = points[s][block[c].first] * points[s][block[c].second];
    const std::size_t r_full = rank(e);
    if (rank(rows_of(e, base)) != r_full) throw Unstable("plucker_quadric_space: block rank grew with more samples");
    out.dimension += block.size() - r_full;
    for (std::size_t p = 0; p < primes.size(); ++p) out.modular_dimensions[p] += block.size() - rank_mod(e, primes[p]);
    ExactMatrix ker = kernel(e);
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      PluckerQuadric f;
      for (std::size_t c = 0; c < block.size(); ++c)
        if (ker(r, c) != 0) f[block[c]] = ker(r, c);
      out.quadrics.push_back(std::move(f));
    }
  }
  for (auto d : out.modular_dimensions)
    if (d != out.dimension) throw Unstable("plucker_quadric_space: modular and exact dimensions disagree");
  return out;
}

SpanReport span_of(const std::vector<PluckerVec>& samples, const std::vector<std::uint64_t>& primes) {
  if (samples.empty()) throw DomainError("span_of: no samples");
  ExactMatrix m(0, samples.front().coords.size());
  for (const auto& s : samples) m.append_row(s.coords);
  SpanReport out;
  out.sample_count = samples.size();
  std::vector<std::size_t> order;
  for (auto p : primes) {
    try {
      std::vector<std::size_t> o;
      out.ranks.push_back(rank_mod(m, p, &o));
      out.primes.push_back(p);
      if (order.empty()) order = o;
    } catch (const BadReduction&) {
      continue;
    }
  }
  if (out.primes.empty()) throw BadReduction("span_of: every prime divides a denominator");
  for (auto r : out.ranks)
    if (r != out.ranks.front()) throw Unstable("span_of: ranks differ between primes");
  const std::size_t rk = out.ranks.front();
  const std::size_t head = (samples.size() * 4 + 4) / 5;
  out.stabilized = rank_mod(rows_of(m, head), out.primes.front()) == rk;
  if (!out.stabilized) throw Unstable("span_of: rank still growing; more samples needed");
  std::sort(order.begin(), order.end());
  out.basis = ExactMatrix(0, m.cols());
  for (auto r : order) out.basis.append_row(m.row(r));
  out.exact_confirmed = rank(out.basis) == rk;
  out.projective_dimension = rk == 0 ? 0 : rk - 1;
  return out;
}

PluckerVec polar_simplex_plucker(const Quadric& q, const FormSpace& frame, std::uint64_t seed) {
  PolarSimplex s = polar_simplex_sample(q, seed);
  return plucker(points_ideal(s.points(), 2).piece(2), frame);
}

SpanReport vps_span(const Quadric& q, std::size_t samples, std::uint64_t seed, std::size_t curve_samples,
                    const std::vector<std::uint64_t>& primes) {
  FormSpace frame = plucker_frame(q);
  std::vector<PluckerVec> pts;
  bool split = true;
  try {
    ruling_line(q, 1, 0, 1);
  } catch (const UnsupportedQuadric&) {
    split = false;
  }
  for (std::size_t i = 0; i < samples; ++i) {
    pts.push_back(polar_simplex_plucker(q, frame, seed + i));
    if (split && i % 8 == 0 && i / 8 < curve_samples) {
      const Scalar t(static_cast<long>(i / 8) + 1);
      pts.push_back(ruling_curve(q, 1, t, 1));
      pts.push_back(ruling_curve(q, 2, t, 1));
    }
  }
  return span_of(pts, primes);
}

RestrictionReport restrict_quadrics(const std::vector<PluckerQuadric>& quadrics, const ExactMatrix& span_basis,
                                    const std::vector<std::uint64_t>& primes, std::size_t exact_subset, std::uint64_t seed) {
  const std::size_t r = span_basis.rows();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) pairs.emplace_back(a, b);
  RestrictionReport out;
  out.target_dimension = pairs.size();
  if (quadrics.empty() || r == 0) return out;

  for (auto p : primes) {
    ModMatrix basis(r, span_basis.cols(), p);
    try {
      basis = ModMatrix::reduce(span_basis, p);
    } catch (const BadReduction&) {
      continue;
    }
    ModMatrix img(quadrics.size(), pairs.size(), p);
    for (std::size_t qi = 0; qi < quadrics.size(); ++qi)
      for (const auto& [ij, c] : quadrics[qi]) {
        const std::uint64_t cp = reduce_mod(c, p);
        const auto [i, j] = ij;
        for (std::size_t t = 0; t < pairs.size(); ++t) {
          const auto [a, b] = pairs[t];
          std::uint64_t v = mod_mul(basis(a, i), basis(b, j), p);
          if (a != b) v = (v + mod_mul(basis(b, i), basis(a, j), p)) % p;
          if (v) img(qi, t) = (img(qi, t) + mod_mul(cp, v, p)) % p;
        }
      }
    out.ranks.push_back(img.echelon().size());
    out.primes.push_back(p);
  }
  if (out.primes.empty()) throw BadReduction("restrict_quadrics: every prime divides a denominator");
  for (auto x : out.ranks)
    if (x != out.ranks.front()) throw Unstable("restrict_quadrics: ranks differ between primes");
  out.rank = out.ranks.front();

  std::vector<std::size_t> idx(quadrics.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  ScalarRng rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng.engine());
  idx.resize(std::min(exact_subset, idx.size()));
  ExactMatrix sub(idx.size(), pairs.size());
  for (std::size_t row = 0; row < idx.size(); ++row)
    for (const auto& [ij, c] : quadrics[idx[row]]) {
      const auto [i, j] = ij;
      for (std::size_t t = 0; t < pairs.size(); ++t) {
        const auto [a, b] = pairs[t];
        Scalar v = span_basis(a, i) * span_basis(b, j);
        if (a != b) v += span_basis(b, i) * span_basis(a, j);
        if (v != 0) sub(row, t) += c * v;
      }
    }
  out.exact_subset_size = idx.size();
  out.exact_subset_rank = rank(sub);
  out.exact_subset_modular_rank = rank_mod(sub, out.primes.front());
  return out;
}

LinearSubspace ruling_line(const Quadric& q, int ruling, const Scalar& a, const Scalar& b) {
  if (q.nvars() != 4 || q.form.ring() != Ring::T) throw UnsupportedQuadric("ruling curves need a quadric in k[y1..y4]");
  const Form& split = split_quadric();
  const Scalar s = q.form.coeff(split.lead_mono());
  if (s == 0 || !(q.form == split * s))
    throw UnsupportedQuadric("ruling curves are implemented for q proportional to y1*y4 + y2*y3");
  if (ruling != 1 && ruling != 2) throw DomainError("ruling must be 1 or 2");
  if (a == 0 && b == 0) throw DomainError("ruling parameter [0:0]");
  std::vector<std::vector<Scalar>> perp;
  if (ruling == 1)
    perp = {{a, 0, -b, 0}, {0, a, 0, b}};
  else
    perp = {{a, b, 0, 0}, {0, 0, -a, b}};
  return LinearSubspace(Ring::S, 4, perp).perp();
}

FormSpace ruling_space(const Quadric& q, int ruling, const Scalar& a, const Scalar& b) {
  LinearSubspace line = ruling_line(q, ruling, a, b);
  FormSpace v = intersect(linear_ideal(line).piece(2), apolar_piece(q.form, 2));
  if (v.dim() != 6) throw InternalError("ruling_space: expected a 6-dimensional space");
  return v;
}

PluckerVec ruling_curve(const Quadric& q, int ruling, const Scalar& a, const Scalar& b) {
  return plucker(ruling_space(q, ruling, a, b), plucker_frame(q));
}

int fit_rnc_degree(const std::vector<CurveSample>& samples) {
  if (samples.size() < 9) throw NotPolynomialMap("fit_rnc_degree needs at least 9 samples");
  std::set<Scalar> seen;
  for (const auto& s : samples)
    if (!seen.insert(s.t).second) throw DomainError("fit_rnc_degree: repeated parameter");
  const std::size_t nc = samples.front().point.coords.size();
  // normalize by a generic linear form so every coordinate is a rational function of t
  ScalarRng rng(0x5eed);
  std::vector<Scalar> ell(nc);
  std::vector<std::vector<Scalar>> ratio;
  for (int attempt = 0; attempt < 16; ++attempt) {
    for (auto& c : ell) c = rng.small_int(5);
    ratio.clear();
    bool ok = true;
    for (const auto& s : samples) {
      Scalar den = 0;
      for (std::size_t j = 0; j < nc; ++j) den += ell[j] * s.point.coords[j];
      if (den == 0) {
        ok = false;
        break;
      }
      std::vector<Scalar> r(nc);
      for (std::size_t j = 0; j < nc; ++j) r[j] = s.point.coords[j] / den;
      ratio.push_back(std::move(r));
    }
    if (ok) break;
    ratio.clear();
  }
  if (ratio.empty()) throw NotPolynomialMap("fit_rnc_degree: no usable normalization");
  const std::size_t nfit = samples.size() - 2;
  auto powers = [](const Scalar& t, int d) {
    std::vector<Scalar> p(d + 1);
    p[0] = 1;
    for (int e = 1; e <= d; ++e) p[e] = p[e - 1] * t;
    return p;
  };
  for (int d = 0; d <= 12 && static_cast<std::size_t>(2 * d + 1) <= nfit; ++d) {
    ExactMatrix vand(nfit, d + 1);
    for (std::size_t s = 0; s < nfit; ++s) {
      auto p = powers(samples[s].t, d);
      for (int e = 0; e <= d; ++e) vand(s, e) = p[e];
    }
    ExactMatrix u = left_kernel(vand);
    ExactMatrix cons(0, d + 1);
    for (std::size_t j = 0; j < nc; ++j)
      for (std::size_t k = 0; k < u.rows(); ++k) {
        std::vector<Scalar> row(d + 1);
        bool any = false;
        for (std::size_t s = 0; s < nfit; ++s) {
          if (u(k, s) == 0 || ratio[s][j] == 0) continue;
          Scalar f = u(k, s) * ratio[s][j];
          for (int e = 0; e <= d; ++e) row[e] += f * vand(s, e);
          any = true;
        }
        if (any) cons.append_row(row);
      }
    std::vector<Scalar> den;
    if (cons.rows() == 0) {
      den.assign(d + 1, 0);
      den[0] = 1;
    } else {
      ExactMatrix ker = kernel(cons);
      if (ker.rows() == 0) continue;
      den = ker.row(0);
    }
    auto eval = [&](const std::vector<Scalar>& c, const Scalar& t) {
      auto p = powers(t, d);
      Scalar v = 0;
      for (int e = 0; e <= d; ++e) v += c[e] * p[e];
      return v;
    };
    bool held = true;
    for (std::size_t j = 0; j < nc && held; ++j) {
      std::vector<Scalar> vals(nfit);
      for (std::size_t s = 0; s < nfit; ++s) vals[s] = ratio[s][j] * eval(den, samples[s].t);
      bool ok = false;
      std::vector<Scalar> num = solve(vand, vals, ok);
      if (!ok) {
        held = false;
        break;
      }
      for (std::size_t h = nfit; h < samples.size(); ++h) {
        Scalar dv = eval(den, samples[h].t);
        if (dv == 0 || eval(num, samples[h].t) != ratio[h][j] * dv) {
          held = false;
          break;
        }
      }
    }
    if (held) return d;
  }
  throw NotPolynomialMap("fit_rnc_degree: no consistent degree within the sample budget");
}

}  // namespace vps
