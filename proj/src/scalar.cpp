#include "vps/scalar.hpp"

#include <cctype>

#include "vps/errors.hpp"

namespace vps {

std::string to_string(const Scalar& s) { return s.get_str(); }

Scalar parse_scalar(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw DomainError("empty scalar");
  std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  bool seen_slash = false, digits = false;
  for (std::size_t k = i; k < t.size(); ++k) {
    if (std::isdigit(static_cast<unsigned char>(t[k]))) {
      digits = true;
    } else if (t[k] == '/' && !seen_slash && digits && k + 1 < t.size()) {
      seen_slash = true;
      digits = false;
    } else {
      throw DomainError("malformed scalar '" + std::string(text) + "'");
    }
  }
  if (!digits) throw DomainError("malformed scalar '" + std::string(text) + "'");
  if (t[0] == '+') t.erase(0, 1);
  Scalar s;
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    mpz_class num(t.substr(0, slash)), den(t.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    s = Scalar(num, den);
    s.canonicalize();
  } else {
    s = Scalar(mpz_class(t));
  }
  return s;
}

long ScalarRng::integer(long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(engine_);
}

Scalar ScalarRng::small_int(long bound, bool nonzero) {
  for (;;) {
    long v = integer(-bound, bound);
    if (!nonzero || v != 0) return Scalar(v);
  }
}

Scalar ScalarRng::small_rational(long bound, bool nonzero) {
  for (;;) {
    long num = integer(-bound, bound);
    long den = integer(1, bound);
    if (nonzero && num == 0) continue;
    Scalar s{mpz_class(num), mpz_class(den)};
    s.canonicalize();
    return s;
  }
}

}  // namespace vps
