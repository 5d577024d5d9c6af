#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vps {

struct RunConfig {
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> primes;
  std::optional<int> d_max;
  bool exact = false;
  std::size_t samples = 200;

  /// Defaults with VPS_SEED and VPS_PRIMES applied.
  static RunConfig from_env();
};

struct ReproCheck {
  std::string name;
  std::string computed;
  std::string expected;
  bool pass = false;
};

enum class ReproStatus { Pass, Mismatch, Unstable };

struct ReproReport {
  std::string id;
  std::vector<ReproCheck> checks;
  ReproStatus status = ReproStatus::Pass;
  std::string note;

  /// 0 pass, 1 mismatch, 2 unstable.
  [[nodiscard]] int exit_code() const { return static_cast<int>(status); }
  [[nodiscard]] std::string text() const;
};

/// Every reproduction target, in a fixed order.
const std::vector<std::string>& reproduce_ids();

/// Runs one target; DomainError for an unknown id. Unstable rank engines
/// are reported through the status, not thrown.
ReproReport reproduce(const std::string& id, const RunConfig& config = RunConfig::from_env());

}  // namespace vps
