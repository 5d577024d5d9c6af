#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vps/scalar.hpp"

namespace vps {

/// Dense row-major rational matrix.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols = 0);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::vector<Scalar> row(std::size_t r) const;
  [[nodiscard]] std::vector<Scalar> col(std::size_t c) const;
  [[nodiscard]] std::vector<std::vector<Scalar>> to_rows() const;
  void append_row(const std::vector<Scalar>& r);

  [[nodiscard]] ExactMatrix transpose() const;
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;
  [[nodiscard]] std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_symmetric() const;

  /// Row-major rational list, e.g. "[[1,0],[0,1/2]]".
  [[nodiscard]] std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  ExactMatrix matrix;  ///< reduced row echelon form, zero rows removed
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
/// Basis of {v : M v = 0} as the rows of the result.
ExactMatrix kernel(const ExactMatrix& m);
/// Basis of {u : u M = 0} as rows.
ExactMatrix left_kernel(const ExactMatrix& m);
Scalar determinant(const ExactMatrix& m);
/// Throws DomainError when singular.
ExactMatrix inverse(const ExactMatrix& m);
/// One solution x of A x = b, or nullopt-like empty vector flag via `ok`.
std::vector<Scalar> solve(const ExactMatrix& a, const std::vector<Scalar>& b, bool& ok);

// ---- modular arithmetic ----------------------------------------------------

inline constexpr std::uint64_t kDefaultPrime = 2147483629ULL;
inline constexpr std::uint64_t kSecondPrime = 2147483587ULL;
inline constexpr std::uint64_t kThirdPrime = 2147483579ULL;

bool is_prime(std::uint64_t p);

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);
/// Image of a rational in Z/p; throws BadReduction if p divides the denominator.
std::uint64_t reduce_mod(const Scalar& s, std::uint64_t p);

/// Dense matrix over Z/p with p < 2^31.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t p) : rows_(rows), cols_(cols), p_(p), data_(rows * cols) {}
  static ModMatrix reduce(const ExactMatrix& m, std::uint64_t p);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::uint64_t prime() const { return p_; }
  std::uint64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// In-place row echelon; returns pivot columns (one per independent row)
  /// and, when `row_order` is given, the original indices of the pivot rows.
  std::vector<std::size_t> echelon(std::vector<std::size_t>* row_order = nullptr);
  [[nodiscard]] std::size_t rank() const;
  /// Rows of a null-space basis of M (M v = 0).
  [[nodiscard]] std::vector<std::vector<std::uint64_t>> kernel() const;

 private:
  std::size_t rows_, cols_;
  std::uint64_t p_;
  std::vector<std::uint64_t> data_;
};

std::size_t modular_rank(const ExactMatrix& m, std::uint64_t p = kDefaultPrime);

/// Ranks on several primes; a BadReduction on one prime moves on to the next
/// candidate in `fallback`. Returns the per-prime ranks actually used.
struct MultiPrimeRank {
  std::vector<std::uint64_t> primes;
  std::vector<std::size_t> ranks;
  [[nodiscard]] bool agree() const;
  [[nodiscard]] std::size_t value() const { return ranks.empty() ? 0 : ranks.front(); }
};
MultiPrimeRank multi_prime_rank(const ExactMatrix& m, const std::vector<std::uint64_t>& primes);

/// Primes from VPS_PRIMES (comma list) or the two defaults.
std::vector<std::uint64_t> configured_primes();

}  // namespace vps
