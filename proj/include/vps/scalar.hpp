#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace vps {

/// Exact rational. GMP keeps every arithmetic result canonical
/// (gcd-normalized, positive denominator, zero is 0/1).
using Scalar = mpq_class;

/// "3/2", "-7", "0".
std::string to_string(const Scalar& s);

/// Accepts "n" or "n/d" with an optional sign. Throws DomainError on a zero
/// denominator or malformed input.
Scalar parse_scalar(std::string_view text);

/// Seeded source of small random rationals used by samplers and property
/// tests. Deterministic for a given seed.
class ScalarRng {
 public:
  explicit ScalarRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  /// Integer in [-bound, bound], never zero when `nonzero`.
  Scalar small_int(long bound, bool nonzero = false);
  /// num/den with |num| <= bound, 1 <= den <= bound.
  Scalar small_rational(long bound, bool nonzero = false);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vps
