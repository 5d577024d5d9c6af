#include "vps/monomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "vps/errors.hpp"

namespace vps {

Mono Mono::from_exponents(const std::vector<int>& exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars))
    throw DomainError("too many variables (max " + std::to_string(kMaxVars) + ")");
  Mono m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw DomainError("exponent out of range");
    m.e[i] = static_cast<std::uint8_t>(exps[i]);
  }
  return m;
}

std::string Mono::str(char var) const {
  std::string out;
  for (int i = 0; i < kMaxVars; ++i) {
    if (!e[i]) continue;
    if (!out.empty()) out += '*';
    out += var;
    out += std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

MonoOrder MonoOrder::grevlex(int n) {
  MonoOrder o;
  o.kind_ = Kind::Grevlex;
  o.n_ = n;
  o.rank_.resize(n);
  std::iota(o.rank_.begin(), o.rank_.end(), 0);
  return o;
}

MonoOrder MonoOrder::lex(int n) {
  MonoOrder o = grevlex(n);
  o.kind_ = Kind::Lex;
  return o;
}

MonoOrder MonoOrder::weighted(std::vector<long> weights) {
  MonoOrder o = grevlex(static_cast<int>(weights.size()));
  o.kind_ = Kind::Weighted;
  o.weights_ = std::move(weights);
  return o;
}

MonoOrder MonoOrder::grevlex_last(int n, int var) {
  MonoOrder o = grevlex(n);
  o.rank_.erase(o.rank_.begin() + var);
  o.rank_.push_back(var);
  return o;
}

int MonoOrder::cmp(const Mono& a, const Mono& b) const {
  if (kind_ == Kind::Weighted) {
    long wa = 0, wb = 0;
    for (int i = 0; i < n_; ++i) {
      wa += weights_[i] * a.e[i];
      wb += weights_[i] * b.e[i];
    }
    if (wa != wb) return wa > wb ? 1 : -1;
  }
  if (kind_ == Kind::Lex) {
    for (int k = 0; k < n_; ++k) {
      int i = rank_[k];
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
  }
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (int k = n_ - 1; k >= 0; --k) {
    int i = rank_[k];
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

long binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

long num_monomials(int n, int d) {
  if (d < 0) return 0;
  if (n == 0) return d == 0 ? 1 : 0;
  return binomial(n + d - 1, d);
}

namespace {

void enumerate(int n, int d, int i, Mono& cur, std::vector<Mono>& out) {
  if (i == n - 1) {
    cur.e[i] = static_cast<std::uint8_t>(d);
    out.push_back(cur);
    cur.e[i] = 0;
    return;
  }
  for (int k = d; k >= 0; --k) {
    cur.e[i] = static_cast<std::uint8_t>(k);
    enumerate(n, d - k, i + 1, cur, out);
  }
  cur.e[i] = 0;
}

}  // namespace

const std::vector<Mono>& monomials_of_degree(int n, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Mono>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Mono> out;
  if (n > kMaxVars) throw DomainError("too many variables");
  if (d >= 0 && n > 0) {
    Mono cur;
    enumerate(n, d, 0, cur, out);
  } else if (d == 0) {
    out.emplace_back();
  }
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace vps
