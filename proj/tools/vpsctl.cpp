#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vps/apolarity.hpp"
#include "vps/errors.hpp"
#include "vps/grassmann.hpp"
#include "vps/grobner.hpp"
#include "vps/ideal.hpp"
#include "vps/limits.hpp"
#include "vps/matrix.hpp"
#include "vps/reproduce.hpp"
#include "vps/tangent.hpp"
#include "vps/vps.hpp"

namespace {

using nlohmann::ordered_json;
using namespace vps;

constexpr int kExitMismatch = 1;
constexpr int kExitUnstable = 2;
constexpr int kExitUsage = 64;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GradedIdeal read_ideal(const std::string& path) { return GradedIdeal::parse(slurp(path)); }

/// A quadric file is an ideal file holding a single quadratic generator.
Quadric read_quadric(const std::string& path) {
  IdealText t = parse_ideal_text(slurp(path));
  if (t.generators.size() != 1) throw ParseError("quadric file must hold exactly one generator", 1, 1);
  if (t.generators.front().degree() != 2) throw ParseError("quadric must have degree 2", 2, 1);
  return Quadric::from_form(t.generators.front());
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t col = 1;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + item + "'", 1, col);
    }
    col += item.size() + 1;
  }
  return out;
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (long p : parse_longs(text)) {
    if (p < 2 || p >= (1L << 31) || !is_prime(static_cast<std::uint64_t>(p)))
      throw ParseError("'" + std::to_string(p) + "' is not a prime below 2^31", 1, 1);
    out.push_back(static_cast<std::uint64_t>(p));
  }
  return out;
}

ordered_json hilbert_json(const HilbFn& h) {
  ordered_json j;
  j["values"] = h.values;
  j["eventual"] = h.eventual ? ordered_json(*h.eventual) : ordered_json(nullptr);
  j["onset"] = h.onset ? ordered_json(*h.onset) : ordered_json(nullptr);
  return j;
}

void print_ideal(const GradedIdeal& ideal, int d_max) {
  std::cout << format_ideal_text({ideal.ring(), ideal.nvars(), ideal.minimal_generators(d_max)});
}

int degree_bound(const GradedIdeal& ideal, std::optional<int> d_max) {
  return d_max.value_or(std::max(2 * ideal.max_generator_degree() + 2, 6));
}

void write_matrix(const std::string& path, const ExactMatrix& m) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << "matrix " << m.rows() << " " << m.cols() << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << to_string(m(r, c));
    out << "\n";
  }
}

struct Options {
  std::string ideal, quadric, weights, torus, preset, primes, model = "syz", dump, id;
  std::optional<int> d_max;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 200;
  int n = 4;
  bool exact = false, stretch = false, json = false;
};

RunConfig config_of(const Options& o) {
  RunConfig c = RunConfig::from_env();
  if (o.seed) c.seed = *o.seed;
  if (!o.primes.empty()) c.primes = parse_primes(o.primes);
  c.d_max = o.d_max;
  c.exact = o.exact;
  c.samples = o.samples;
  return c;
}

int cmd_apolar(const Options& o) {
  Quadric q = read_quadric(o.quadric);
  const int d = o.d_max.value_or(3);
  print_ideal(apolar_ideal(q.form, d), d);
  return 0;
}

int cmd_saturate(const Options& o) {
  GradedIdeal i = read_ideal(o.ideal);
  GradedIdeal s = saturate(i);
  print_ideal(s, degree_bound(s, o.d_max));
  return 0;
}

int cmd_hilbert(const Options& o) {
  GradedIdeal i = read_ideal(o.ideal);
  std::cout << hilbert_json(hilbert_function(i, degree_bound(i, o.d_max))).dump(2) << "\n";
  return 0;
}

int cmd_limit(const Options& o) {
  GradedIdeal i = read_ideal(o.ideal);
  WeightVec w = parse_longs(o.weights);
  const int d = o.d_max.value_or(degree_bound(i, std::nullopt));
  GradedIdeal lim = weight_limit(i, w, d);
  std::cout << "# limit\n";
  print_ideal(lim, d);
  std::cout << "# saturation\n";
  GradedIdeal sat = saturate(lim);
  print_ideal(sat, degree_bound(sat, o.d_max));
  return 0;
}

int cmd_check(const Options& o) {
  VpsVerdict v = check_vps(read_ideal(o.ideal), read_quadric(o.quadric));
  ordered_json j;
  j["in_vps"] = v.in_vps;
  j["saturated"] = v.saturated;
  j["criteria_apply"] = v.criteria_apply;
  j["sbl_necessary"] = v.sbl_necessary ? ordered_json(*v.sbl_necessary) : ordered_json(nullptr);
  j["kri"] = v.kri ? ordered_json(*v.kri) : ordered_json(nullptr);
  j["hilbert"] = hilbert_json(v.hilbert);
  j["details"] = v.details;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_tangent(const Options& o) {
  GradedIdeal i = read_ideal(o.ideal);
  std::optional<WeightVec> w;
  if (!o.torus.empty()) w = parse_longs(o.torus);
  if (o.preset == "sl2-n4") w = sl2_torus_n4();
  TangentReport r;
  if (o.model == "syz") {
    std::optional<Quadric> q;
    if (!o.quadric.empty()) q = read_quadric(o.quadric);
    r = syz_tangent(i.piece(2), q);
  } else {
    r = hilb_tangent(i);
  }
  ordered_json j;
  j["model"] = o.model;
  j["dimension"] = r.dimension;
  j["truncation_degree"] = r.truncation_degree;
  j["weights"] = w ? ordered_json(torus_weights(r, *w)) : ordered_json(nullptr);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_plucker_span(const Options& o) {
  RunConfig c = config_of(o);
  Quadric q = read_quadric(o.quadric);
  if (q.nvars() != o.n) throw DomainError("quadric has " + std::to_string(q.nvars()) + " variables, --n is " + std::to_string(o.n));
  SpanReport s = vps_span(q, c.samples, c.seed, 4, c.primes);
  ordered_json j;
  j["samples"] = s.sample_count;
  j["projective_dimension"] = s.projective_dimension;
  j["stabilized"] = s.stabilized;
  j["primes"] = s.primes;
  j["ranks"] = s.ranks;
  j["exact_confirmed"] = s.exact_confirmed;
  if (o.exact) j["exact_rank"] = rank(s.basis);
  if (o.stretch) {
    const int m = static_cast<int>(plucker_frame(q).dim());
    PluckerQuadricSpace qs = plucker_quadric_space(m + 1 - o.n, m, c.seed, c.primes);
    RestrictionReport r = restrict_quadrics(qs.quadrics, s.basis, c.primes, 24, c.seed);
    ordered_json st;
    st["plucker_quadrics"] = qs.dimension;
    st["restricted_rank"] = r.rank;
    st["target_dimension"] = r.target_dimension;
    st["groebner"] = "not performed";
    j["stretch"] = st;
  }
  if (!o.dump.empty()) write_matrix(o.dump, s.basis);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_sample(const Options& o) {
  RunConfig c = config_of(o);
  Quadric q = read_quadric(o.quadric);
  PolarSimplex ps = polar_simplex_sample(q, c.seed);
  ordered_json j;
  j["certified"] = ps.certify(q);
  ordered_json forms = ordered_json::array(), weights = ordered_json::array(), points = ordered_json::array();
  for (const auto& f : ps.forms) forms.push_back(f.str());
  for (const auto& w : ps.weights) weights.push_back(to_string(w));
  for (const auto& p : ps.points()) {
    ordered_json pt = ordered_json::array();
    for (const auto& x : p) pt.push_back(to_string(x));
    points.push_back(pt);
  }
  j["forms"] = forms;
  j["weights"] = weights;
  j["points"] = points;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_reproduce(const Options& o) {
  ReproReport r = reproduce(o.id, config_of(o));
  if (o.json) {
    ordered_json j;
    j["id"] = r.id;
    j["status"] = r.status == ReproStatus::Pass ? "pass" : r.status == ReproStatus::Mismatch ? "mismatch" : "unstable";
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"computed", c.computed}, {"expected", c.expected}, {"pass", c.pass}});
    j["checks"] = checks;
    j["note"] = r.note;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << r.text();
  }
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact apolarity and VPS(Q,H) computations"};
  app.require_subcommand(1);
  Options o;

  auto seed_opt = [&](CLI::App* s) { s->add_option("--seed", o.seed, "Random seed (default VPS_SEED or 0)"); };
  auto dmax_opt = [&](CLI::App* s) { s->add_option("--dmax", o.d_max, "Largest degree computed"); };

  auto* apolar = app.add_subcommand("apolar", "Generators of q^perp");
  apolar->add_option("--quadric", o.quadric, "Quadric file")->required();
  dmax_opt(apolar);

  auto* sat = app.add_subcommand("saturate", "Saturation of an ideal");
  sat->add_option("--ideal", o.ideal, "Ideal file")->required();
  dmax_opt(sat);

  auto* hilb = app.add_subcommand("hilbert", "Hilbert function of S/I as JSON");
  hilb->add_option("--ideal", o.ideal, "Ideal file")->required();
  dmax_opt(hilb);

  auto* limit = app.add_subcommand("limit", "Flat limit under a one-parameter torus, with its saturation");
  limit->add_option("--ideal", o.ideal, "Ideal file")->required();
  limit->add_option("--weights", o.weights, "Comma-separated integer weights")->required();
  dmax_opt(limit);

  auto* check = app.add_subcommand("check", "VPS membership verdict as JSON");
  check->add_option("--ideal", o.ideal, "Ideal file")->required();
  check->add_option("--quadric", o.quadric, "Quadric file")->required();

  auto* tangent = app.add_subcommand("tangent", "Tangent space dimension and torus weights as JSON");
  tangent->add_option("--model", o.model, "syz or hilb")->check(CLI::IsMember({"syz", "hilb"}));
  tangent->add_option("--ideal", o.ideal, "Ideal file")->required();
  tangent->add_option("--quadric", o.quadric, "Quadric file (syz model target q^perp)");
  auto* torus = tangent->add_option("--torus", o.torus, "Comma-separated torus weights");
  tangent->add_option("--preset", o.preset, "Named torus")->check(CLI::IsMember({"sl2-n4"}))->excludes(torus);

  auto* span = app.add_subcommand("plucker-span", "Span of VPS in the Plücker embedding as JSON");
  span->add_option("--n", o.n, "Number of variables")->check(CLI::Range(2, 8));
  span->add_option("--quadric", o.quadric, "Quadric file")->required();
  span->add_option("--samples", o.samples, "Number of polar simplices");
  seed_opt(span);
  span->add_option("--primes", o.primes, "Comma-separated primes (default VPS_PRIMES)");
  span->add_flag("--exact", o.exact, "Also report the exact rank of the span basis");
  span->add_flag("--stretch", o.stretch, "Also restrict the Plücker quadrics to the span");
  span->add_option("--dump", o.dump, "Write the span basis matrix to this file");

  auto* sample = app.add_subcommand("sample", "A seeded polar simplex of q as JSON");
  sample->add_option("--quadric", o.quadric, "Quadric file")->required();
  seed_opt(sample);

  auto* repro = app.add_subcommand("reproduce", "Run a pinned reproduction target");
  repro->add_option("id", o.id, "Target id")->required()->check(CLI::IsMember(reproduce_ids()));
  repro->add_flag("--json", o.json, "JSON report");
  seed_opt(repro);
  dmax_opt(repro);
  repro->add_option("--primes", o.primes, "Comma-separated primes (default VPS_PRIMES)");
  repro->add_option("--samples", o.samples, "Samples for span targets");
  repro->add_flag("--exact", o.exact, "Exact mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*apolar) return cmd_apolar(o);
    if (*sat) return cmd_saturate(o);
    if (*hilb) return cmd_hilbert(o);
    if (*limit) return cmd_limit(o);
    if (*check) return cmd_check(o);
    if (*tangent) return cmd_tangent(o);
    if (*span) return cmd_plucker_span(o);
    if (*sample) return cmd_sample(o);
    if (*repro) return cmd_reproduce(o);
  } catch (const ParseError& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const Unstable& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return kExitUnstable;
  } catch (const Error& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
