#include "vps/reproduce.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "vps/apolarity.hpp"
#include "vps/errors.hpp"
#include "vps/grassmann.hpp"
#include "vps/grobner.hpp"
#include "vps/limits.hpp"
#include "vps/matrix.hpp"
#include "vps/tangent.hpp"
#include "vps/vps.hpp"

namespace vps {

namespace {

GradedIdeal ideal_of(int n, const std::vector<std::string>& gens) { return GradedIdeal::from_strings(n, gens); }

const std::vector<std::string> kEx11 = {"x1*x3 - x2^2", "x2*x3 - x1*x4", "x2*x4", "x3*x4", "x4^2", "x3^2"};
const std::vector<std::string> kEx11Limit = {"x2^4", "x4^2",  "x2*x4", "x3*x4", "x1^2*x4",
                                             "x2*x3 - x1*x4", "x3^2", "x1*x3"};
const std::vector<std::string> kEqIdeal = {"x1*x3", "x2*x3 - x1*x4", "x3^2", "x2*x4", "x3*x4", "x4^2"};

std::vector<std::string> ex37(bool t) {
  return {"x4*x5", "x3*x5", "x1*x5", "x4^2", "x3*x4", t ? "x1^2 + x2*x4" : "x2*x4", "x1*x4 - x5^2", "x3^2", "x2*x3 - x5^2",
          "x1*x3", "x1^4"};
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<long>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

class Builder {
 public:
  explicit Builder(std::string id) { report_.id = std::move(id); }
  void check(std::string name, const std::string& computed, const std::string& expected) {
    report_.checks.push_back({std::move(name), computed, expected, computed == expected});
  }
  void check(std::string name, bool computed, bool expected) {
    check(std::move(name), std::string(yes_no(computed)), std::string(yes_no(expected)));
  }
  void check(std::string name, long computed, long expected) {
    check(std::move(name), std::to_string(computed), std::to_string(expected));
  }
  void note(const std::string& s) { report_.note += (report_.note.empty() ? "" : " ") + s; }
  ReproReport finish() {
    for (const auto& c : report_.checks)
      if (!c.pass) report_.status = ReproStatus::Mismatch;
    return report_;
  }

 private:
  ReproReport report_;
};

const Quadric& split4() {
  static const Quadric q = Quadric::parse("y1*y4 + y2*y3", 4);
  return q;
}

ReproReport ex_1_1(const RunConfig& cfg) {
  Builder b("ex-1.1");
  const Quadric& q = split4();
  GradedIdeal lim = weight_limit(ideal_of(4, kEx11), {0, 1, 0, 1}, cfg.d_max.value_or(-1));
  GradedIdeal sat = saturate(lim);
  FormSpace qp = apolar_piece(q.form, 2);
  b.check("weight limit equals I_lim through degree 5", lim.equal_up_to(ideal_of(4, kEx11Limit), 5), true);
  b.check("saturation equals (x3,x4,x2^4)", sat.equal_up_to(ideal_of(4, {"x3", "x4", "x2^4"}), 6), true);
  b.check("I_lim contained in q^perp", apolar_ideal(q.form).contains(lim), true);
  b.check("saturation contained in q^perp", apolar_ideal(q.form).contains(sat), false);
  b.check("limit Hilbert function", hilbert_function(lim, 5).str(), "(1,4,4,4,4,4,...)");
  return b.finish();
}

ReproReport eq_ideal(const RunConfig&) {
  Builder b("eq-ideal");
  const Quadric& q = split4();
  GradedIdeal inter = intersect_ideals(ideal_of(4, {"x3", "x4"}), apolar_ideal(q.form), 4);
  GradedIdeal six = ideal_of(4, kEqIdeal);
  b.check("degree-2 piece equals the six quadrics", inter.piece(2) == six.piece(2), true);
  b.check("intersection equals the ideal of the six quadrics through degree 4", inter.equal_up_to(six, 4), true);
  b.check("dimension of the degree-2 piece", static_cast<long>(inter.dim(2)), 6);
  return b.finish();
}

ReproReport inv_quadric_n5(const RunConfig&) {
  Builder b("inv-quadric-n5");
  Quadric inv = inverse_quadric(Quadric::parse("y1*y3 + y2*y4 + y5^2", 5));
  b.check("inverse quadric", inv.form.str(), parse_form("4*x1*x3 + 4*x2*x4 + x5^2", 5).str());
  return b.finish();
}

ReproReport ex_3_7(const RunConfig&) {
  Builder b("ex-3.7");
  Quadric q = Quadric::parse("y1*y4 + y2*y3 + 1/2*y5^2", 5);
  VpsVerdict t1 = check_vps(ideal_of(5, ex37(true)), q);
  VpsVerdict t0 = check_vps(ideal_of(5, ex37(false)), q);
  b.check("t=1 fiber apolar", t1.in_vps, true);
  b.check("t=1 fiber saturated", t1.saturated, true);
  b.check("t=0 fiber apolar", t0.in_vps, true);
  b.check("t=0 fiber saturated", t0.saturated, false);
  GradedIdeal sat = saturate(ideal_of(5, ex37(false)));
  HilbFn h = hilbert_function(sat, 6);
  std::vector<long> head(h.values.begin(), h.values.begin() + 6);
  b.check("Hilbert function of the t=0 saturation", join(head), "{1,2,3,4,5,5}");
  b.check("socle dimension at [0:1:0:0:0]", static_cast<long>(socle_dimension(sat, {0, 1, 0, 0, 0})), 2);
  b.note("q is read as y1*y4 + y2*y3 + (1/2)*y5^2 so that x1*x4 - x5^2 is apolar under differentiation.");
  return b.finish();
}

ReproReport lemma_3_4(const RunConfig& cfg) {
  Builder b("lemma-3.4");
  ScalarRng rng(cfg.seed + 34);
  long agree = 0, trials = 0, holds = 0;
  while (trials < 200) {
    const int n = 4 + static_cast<int>(trials % 2);
    ExactMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) a(i, j) = a(j, i) = rng.small_int(3);
    Quadric q = Quadric::from_matrix(Ring::T, a);
    if (!q.full_rank()) continue;
    const int dl = 1 + static_cast<int>(rng.integer(0, n - 2));
    std::vector<std::vector<Scalar>> lv(dl, std::vector<Scalar>(n)), nv(n - dl, std::vector<Scalar>(n));
    for (auto& r : lv)
      for (auto& x : r) x = rng.small_int(2);
    LinearSubspace l(Ring::T, n, lv);
    if (static_cast<int>(l.dim()) != dl) continue;
    LinearSubspace nn;
    if (trials % 2) {
      nn = collineation_image(q, l.perp());
    } else {
      for (auto& r : nv)
        for (auto& x : r) x = rng.small_int(2);
      nn = LinearSubspace(Ring::T, n, nv);
      if (static_cast<int>(nn.dim()) != n - dl) continue;
    }
    auto c = polarity_conditions(l, nn, q);
    bool all_same = true;
    for (bool x : c) all_same = all_same && x == c[0];
    agree += all_same;
    holds += c[0];
    ++trials;
  }
  b.check("triples where all six conditions agree", agree, 200);
  b.note("conditions held on " + std::to_string(holds) + " of 200 triples");
  return b.finish();
}

ReproReport tangent_9(const RunConfig&) {
  Builder b("tangent-9");
  TangentReport r = syz_tangent(ideal_of(4, kEqIdeal).piece(2), split4());
  b.check("tangent dimension at ((x3,x4) ∩ q^perp)_2", static_cast<long>(r.dimension), 9);
  return b.finish();
}

ReproReport weights_2(const RunConfig&) {
  Builder b("weights-2");
  FormSpace v = ideal_of(4, kEqIdeal).piece(2);
  TangentReport r = syz_tangent(v, split4());
  b.check("tangent weights", join(torus_weights(r, sl2_torus_n4())), join(std::vector<long>(9, 2)));
  std::vector<long> dec;
  for (const auto& [w, d] : weight_decomposition(v, sl2_torus_n4())) dec.insert(dec.end(), d, w);
  b.check("weights of the degree-2 piece", join(dec), "{-2,-2,-2,0,0,0}");
  return b.finish();
}

ReproReport span_38(const RunConfig& cfg) {
  Builder b("span-38");
  SpanReport s = vps_span(split4(), cfg.samples, cfg.seed, 4, cfg.primes);
  b.check("projective dimension of the span", static_cast<long>(s.projective_dimension), 38);
  b.check("independent subset has full exact rank", s.exact_confirmed, true);
  b.note(std::to_string(s.sample_count) + " samples");
  return b.finish();
}

ReproReport quadrics_1050_380(const RunConfig& cfg) {
  Builder b("quadrics-1050-380");
  PluckerQuadricSpace qs = plucker_quadric_space(6, 9, cfg.seed, cfg.primes);
  b.check("Plücker quadrics on Gr(6,9)", static_cast<long>(qs.dimension), 1050);
  SpanReport s = vps_span(split4(), cfg.samples, cfg.seed, 4, cfg.primes);
  RestrictionReport r = restrict_quadrics(qs.quadrics, s.basis, cfg.primes, 24, cfg.seed);
  b.check("independent restricted quadrics", static_cast<long>(r.rank), 380);
  b.check("target dimension", static_cast<long>(r.target_dimension), 780);
  b.check("exact subset rank equals modular subset rank", r.exact_subset_rank == r.exact_subset_modular_rank, true);
  return b.finish();
}

ReproReport curves_6(const RunConfig&) {
  Builder b("curves-6");
  std::vector<PluckerVec> all;
  for (int ruling : {1, 2}) {
    std::vector<PluckerVec> pts;
    std::vector<CurveSample> samples;
    for (int i = 0; i < 15; ++i) {
      Scalar t = Scalar(i - 7) / 2;
      PluckerVec p = ruling_curve(split4(), ruling, t, 1);
      pts.push_back(p);
      samples.push_back({t, p});
    }
    const std::string tag = "ruling " + std::to_string(ruling);
    b.check(tag + " span dimension", static_cast<long>(span_of(pts).projective_dimension), 6);
    b.check(tag + " curve degree", static_cast<long>(fit_rnc_degree(samples)), 6);
    all.insert(all.end(), pts.begin(), pts.end());
  }
  b.check("combined span rank", static_cast<long>(span_of(all).projective_dimension) + 1, 14);
  return b.finish();
}

ReproReport excess_362(const RunConfig&) {
  Builder b("excess-362");
  const long c1n = split_bundle_degree(5, 2);
  ExcessReport e = excess_degree_arithmetic(6, c1n);
  b.check("c1 of the normal bundle O(2)^5", c1n, 10);
  b.check("excess per curve", e.per_curve, 26);
  b.check("total degree", e.total, 362);
  b.check("Fano index from adjunction", fano_index_from_adjunction(c1n, 6), 2);
  return b.finish();
}

using Runner = std::function<ReproReport(const RunConfig&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> m = {
      {"ex-1.1", ex_1_1},       {"eq-ideal", eq_ideal},     {"inv-quadric-n5", inv_quadric_n5},
      {"ex-3.7", ex_3_7},       {"lemma-3.4", lemma_3_4},   {"tangent-9", tangent_9},
      {"weights-2", weights_2}, {"span-38", span_38},       {"quadrics-1050-380", quadrics_1050_380},
      {"curves-6", curves_6},   {"excess-362", excess_362}};
  return m;
}

}  // namespace

RunConfig RunConfig::from_env() {
  RunConfig c;
  if (const char* s = std::getenv("VPS_SEED"); s && *s) c.seed = std::stoull(s);
  c.primes = configured_primes();
  return c;
}

std::string ReproReport::text() const {
  std::ostringstream os;
  const char* verdict = status == ReproStatus::Pass ? "PASS" : status == ReproStatus::Mismatch ? "MISMATCH" : "UNSTABLE";
  os << id << ": " << verdict << "\n";
  for (const auto& c : checks)
    os << "  [" << (c.pass ? "ok" : "differs") << "] " << c.name << ": computed " << c.computed << ", expected " << c.expected
       << "\n";
  if (!note.empty()) os << "  note: " << note << "\n";
  return os.str();
}

const std::vector<std::string>& reproduce_ids() {
  static const std::vector<std::string> ids = {"ex-1.1",    "eq-ideal",  "inv-quadric-n5",    "ex-3.7",
                                               "lemma-3.4", "tangent-9", "weights-2",         "span-38",
                                               "quadrics-1050-380",      "curves-6",          "excess-362"};
  return ids;
}

ReproReport reproduce(const std::string& id, const RunConfig& config) {
  auto it = runners().find(id);
  if (it == runners().end()) throw DomainError("unknown reproduction target '" + id + "'");
  RunConfig cfg = config;
  if (cfg.primes.empty()) cfg.primes = configured_primes();
  try {
    return it->second(cfg);
  } catch (const Unstable& e) {
    ReproReport r;
    r.id = id;
    r.status = ReproStatus::Unstable;
    r.note = e.what();
    return r;
  }
}

}  // namespace vps
