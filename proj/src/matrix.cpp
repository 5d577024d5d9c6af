#include "vps/matrix.hpp"

#include <cstdlib>
#include <sstream>

#include "vps/errors.hpp"

namespace vps {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Scalar> ExactMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)};
}

std::vector<Scalar> ExactMatrix::col(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<std::vector<Scalar>> ExactMatrix::to_rows() const {
  std::vector<std::vector<Scalar>> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

void ExactMatrix::append_row(const std::vector<Scalar>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw DomainError("append_row: width mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
  ExactMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) r(i, j) += aik * b(k, j);
    }
  return r;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum: shape mismatch");
  ExactMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference: shape mismatch");
  ExactMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

std::vector<Scalar> ExactMatrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw DomainError("matrix-vector: shape mismatch");
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0 && v[c] != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& s : data_)
    if (s != 0) return false;
  return true;
}

bool ExactMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

RrefResult rref(const ExactMatrix& m) {
  ExactMatrix a = m;
  const std::size_t R = a.rows(), C = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = R;
    for (std::size_t i = r; i < R; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(a(piv, j), a(r, j));
    Scalar inv = 1 / a(r, c);
    for (std::size_t j = c; j < C; ++j)
      if (a(r, j) != 0) a(r, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  ExactMatrix out(r, C);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < C; ++j) out(i, j) = a(i, j);
  return {std::move(out), r, std::move(pivots)};
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

ExactMatrix kernel(const ExactMatrix& m) {
  auto res = rref(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : res.pivots) is_pivot[p] = true;
  ExactMatrix k(C - res.rank, C);
  std::size_t row = 0;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    k(row, f) = 1;
    for (std::size_t i = 0; i < res.rank; ++i) k(row, res.pivots[i]) = -res.matrix(i, f);
    ++row;
  }
  return k;
}

ExactMatrix left_kernel(const ExactMatrix& m) { return kernel(m.transpose()); }

Scalar determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  ExactMatrix a = m;
  const std::size_t n = a.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = 1 / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (a(c, j) != 0) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

ExactMatrix inverse(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DomainError("inverse of a non-square matrix");
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto res = rref(aug);
  if (res.rank < n || res.pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = res.matrix(i, n + j);
  return inv;
}

std::vector<Scalar> solve(const ExactMatrix& a, const std::vector<Scalar>& b, bool& ok) {
  const std::size_t R = a.rows(), C = a.cols();
  ExactMatrix aug(R, C + 1);
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) aug(i, j) = a(i, j);
    aug(i, C) = b[i];
  }
  auto res = rref(aug);
  std::vector<Scalar> x(C);
  ok = true;
  for (std::size_t i = 0; i < res.rank; ++i) {
    if (res.pivots[i] == C) {
      ok = false;
      return {};
    }
    x[res.pivots[i]] = res.matrix(i, C);
  }
  return x;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (p == q) return true;
    if (p % q == 0) return false;
  }
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = mod_pow(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mod_mul(x, x, p);
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw BadReduction("inverse of zero modulo " + std::to_string(p));
  return mod_pow(a, p - 2, p);
}

std::uint64_t reduce_mod(const Scalar& s, std::uint64_t p) {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class den = s.get_den() % pz;
  if (den == 0) throw BadReduction("prime " + std::to_string(p) + " divides a denominator");
  mpz_class num = s.get_num() % pz;
  if (num < 0) num += pz;
  std::uint64_t n = num.get_ui(), d = den.get_ui();
  return mod_mul(n, mod_inv(d, p), p);
}

ModMatrix ModMatrix::reduce(const ExactMatrix& m, std::uint64_t p) {
  ModMatrix r(m.rows(), m.cols(), p);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) r(i, j) = reduce_mod(m(i, j), p);
  return r;
}

std::vector<std::size_t> ModMatrix::echelon(std::vector<std::size_t>* row_order) {
  std::vector<std::size_t> order(rows_);
  for (std::size_t i = 0; i < rows_; ++i) order[i] = i;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = rows_;
    for (std::size_t i = r; i < rows_; ++i)
      if ((*this)(i, c)) {
        piv = i;
        break;
      }
    if (piv == rows_) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(r, j));
      std::swap(order[piv], order[r]);
    }
    std::uint64_t inv = mod_inv((*this)(r, c), p_);
    for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = mod_mul((*this)(r, j), inv, p_);
    const std::uint64_t* prow = &data_[r * cols_];
    for (std::size_t i = r + 1; i < rows_; ++i) {
      std::uint64_t f = (*this)(i, c);
      if (!f) continue;
      std::uint64_t nf = p_ - f;
      std::uint64_t* irow = &data_[i * cols_];
      for (std::size_t j = c; j < cols_; ++j)
        if (prow[j]) irow[j] = (irow[j] + nf * prow[j]) % p_;
    }
    pivots.push_back(c);
    ++r;
  }
  if (row_order) row_order->assign(order.begin(), order.begin() + static_cast<long>(r));
  return pivots;
}

std::size_t ModMatrix::rank() const {
  ModMatrix copy = *this;
  return copy.echelon().size();
}

std::vector<std::vector<std::uint64_t>> ModMatrix::kernel() const {
  ModMatrix a = *this;
  auto pivots = a.echelon();
  const std::size_t rk = pivots.size();
  // back-substitute to reduced form
  for (std::size_t k = rk; k-- > 0;) {
    std::size_t c = pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t f = a(i, c);
      if (!f) continue;
      std::uint64_t nf = p_ - f;
      for (std::size_t j = c; j < cols_; ++j)
        if (a(k, j)) a(i, j) = (a(i, j) + mod_mul(nf, a(k, j), p_)) % p_;
    }
  }
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> v(cols_, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = a(i, f) ? p_ - a(i, f) : 0;
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t modular_rank(const ExactMatrix& m, std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) throw DomainError("modulus must be a prime below 2^31");
  return ModMatrix::reduce(m, p).rank();
}

bool MultiPrimeRank::agree() const {
  for (auto r : ranks)
    if (r != ranks.front()) return false;
  return true;
}

MultiPrimeRank multi_prime_rank(const ExactMatrix& m, const std::vector<std::uint64_t>& primes) {
  MultiPrimeRank out;
  for (auto p : primes) {
    try {
      out.ranks.push_back(modular_rank(m, p));
      out.primes.push_back(p);
    } catch (const BadReduction&) {
      continue;
    }
  }
  if (out.primes.empty()) throw BadReduction("every configured prime divides a denominator");
  return out;
}

std::vector<std::uint64_t> configured_primes() {
  if (const char* env = std::getenv("VPS_PRIMES"); env && *env) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(env);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::uint64_t p = std::stoull(tok);
      if (p >= (1ULL << 31) || !is_prime(p)) throw DomainError("VPS_PRIMES entry " + tok + " is not a prime below 2^31");
      out.push_back(p);
    }
    if (!out.empty()) return out;
  }
  return {kDefaultPrime, kSecondPrime};
}

}  // namespace vps
