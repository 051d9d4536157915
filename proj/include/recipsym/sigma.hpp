#pragma once

#include "recipsym/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace recipsym {

// f(index) == 0 inside the scanned range; the reciprocal sequence is undefined.
class ZeroValueError : public std::runtime_error {
 public:
  explicit ZeroValueError(long index);
  long index() const { return index_; }

 private:
  long index_;
};

class RangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExecutionPolicy { Serial, Parallel };

// Streaming column of the elementary symmetric functions sigma_k of
// 1/f(1), ..., 1/f(n). Internally sigma_k(n) = M_k / P where P is the signed
// product f(1)...f(n) and the M_k are integers satisfying
//   M_k(n) = f(n) * M_k(n-1) + M_{k-1}(n-1),   M_0(n) = P(n).
// Entries stay unreduced; gcd reduction happens only on extraction. Memory is
// O(n) big integers (O(max_k) when a cap is set).
class SigmaColumn {
 public:
  // max_k = -1 tracks all k <= n; otherwise only k <= max_k is kept.
  explicit SigmaColumn(Polynomial f, long max_k = -1);

  // Advances n by one. Serial updates in place; Parallel double-buffers and
  // splits the k loop across OpenMP threads. Results are bit-identical.
  void extend(ExecutionPolicy policy = ExecutionPolicy::Serial);
  void extend_to(long n, ExecutionPolicy policy = ExecutionPolicy::Serial);

  long n() const { return n_; }
  long tracked_k() const { return static_cast<long>(nums_.size()) - 1; }
  const Polynomial& poly() const { return f_; }

  Int shared_denominator() const;  // |P|
  int sign() const;                // sign of P, +1 or -1
  // Sign-adjusted numerator: sigma(k) == numerator(k) / shared_denominator().
  Int numerator(long k) const;
  // Canonical reduced value; 0 for k > n (the defining sum is empty).
  Rat sigma(long k) const;
  bool sigma_is_integer(long k) const;

 private:
  const Int& raw(long k) const;

  Polynomial f_;
  long n_ = 0;
  long cap_;
  Int product_;            // signed, 1 at n = 0
  std::vector<Int> nums_;  // M_0 .. M_tracked
  std::vector<Int> scratch_;
};

SigmaColumn sigma_column(const Polynomial& f, long n,
                         ExecutionPolicy policy = ExecutionPolicy::Serial);

struct TableEntry {
  long k;
  long n;
  Rat value;
};

// Materialized triangular table of sigma_{k,f}(n) for 1 <= k <= n <= n_max.
class SigmaTable {
 public:
  SigmaTable(Polynomial f, std::vector<std::vector<Rat>> rows);

  const Polynomial& poly() const { return f_; }
  long n_max() const { return static_cast<long>(rows_.size()); }
  const Rat& at(long k, long n) const;  // 1 <= k <= n <= n_max
  std::vector<TableEntry> entries() const;  // (n, k) lexicographic

 private:
  Polynomial f_;
  std::vector<std::vector<Rat>> rows_;  // rows_[n-1][k-1]
};

SigmaTable sigma_table(const Polynomial& f, long n_max);

// Definitional sum over all k-subsets of {1..n}; test oracle only.
// Guard: n <= 20. Returns 1 for k == 0 and 0 for k > n.
Rat sigma_oracle(const Polynomial& f, long n, long k);

struct IntegerHit {
  long k;
  long n;
  Rat value;

  bool operator==(const IntegerHit& other) const {
    return k == other.k && n == other.n && value == other.value;
  }
};

// All entries with denominator 1, in (n, k) lexicographic order.
std::vector<IntegerHit> integer_hits(const SigmaTable& table);

// Streaming equivalent of integer_hits(sigma_table(f, n_max)) that retains
// only the current column.
std::vector<IntegerHit> scan_integer_hits(const Polynomial& f, long n_max);

}  // namespace recipsym
