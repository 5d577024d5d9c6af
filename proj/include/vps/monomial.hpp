#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace vps {

inline constexpr int kMaxVars = 8;

struct Mono {
  std::array<std::uint8_t, kMaxVars> e{};

  Mono() = default;
  static Mono from_exponents(const std::vector<int>& exps);
  static Mono var(int i) {
    Mono m;
    m.e[i] = 1;
    return m;
  }

  [[nodiscard]] int degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  [[nodiscard]] int operator[](int i) const { return e[i]; }

  friend Mono operator*(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
    return r;
  }
  /// Requires divides(b, a).
  friend Mono operator/(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    return r;
  }
  friend bool operator==(const Mono&, const Mono&) = default;

  /// True when a divides b.
  [[nodiscard]] static bool divides(const Mono& a, const Mono& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] > b.e[i]) return false;
    return true;
  }
  [[nodiscard]] static Mono lcm(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
  }
  [[nodiscard]] static bool coprime(const Mono& a, const Mono& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }

  /// `x1^2*x3` style text; "1" for the unit monomial.
  [[nodiscard]] std::string str(char var) const;
};

struct MonoHash {
  std::size_t operator()(const Mono& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : m.e) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};

/// Degree reverse lexicographic with x1 > x2 > ... ; returns >0 when a > b.
inline int grevlex_cmp(const Mono& a, const Mono& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

/// Strict weak ordering placing grevlex-larger monomials first.
struct GrevlexGreater {
  bool operator()(const Mono& a, const Mono& b) const { return grevlex_cmp(a, b) > 0; }
};

/// A monomial order. Variables are ranked by `rank`: rank[0] is the most
/// significant variable. Weighted orders compare the weight first and break
/// ties with the underlying grevlex/lex on the ranked variables.
class MonoOrder {
 public:
  enum class Kind { Grevlex, Lex, Weighted };

  static MonoOrder grevlex(int n);
  static MonoOrder lex(int n);
  /// Weight order refined by grevlex; weights may be any integers because all
  /// inputs are homogeneous.
  static MonoOrder weighted(std::vector<long> weights);
  /// Grevlex in which variable `var` is the smallest.
  static MonoOrder grevlex_last(int n, int var);

  [[nodiscard]] int cmp(const Mono& a, const Mono& b) const;
  [[nodiscard]] bool greater(const Mono& a, const Mono& b) const { return cmp(a, b) > 0; }
  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] int nvars() const { return n_; }
  [[nodiscard]] const std::vector<int>& rank() const { return rank_; }

 private:
  Kind kind_ = Kind::Grevlex;
  int n_ = 0;
  std::vector<int> rank_;
  std::vector<long> weights_;
};

/// All monomials of degree d in n variables, grevlex-descending.
const std::vector<Mono>& monomials_of_degree(int n, int d);

/// C(n + d - 1, d).
long num_monomials(int n, int d);

/// Binomial coefficient with C(a, b) = 0 when b < 0 or b > a (a >= 0).
long binomial(long a, long b);

}  // namespace vps
