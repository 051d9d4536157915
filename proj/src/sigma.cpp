#include "recipsym/sigma.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace recipsym {

ZeroValueError::ZeroValueError(long index)
    : std::runtime_error("f(" + std::to_string(index) + ") = 0"),
      index_(index) {}

SigmaColumn::SigmaColumn(Polynomial f, long max_k)
    : f_(std::move(f)), cap_(max_k), product_(1) {
  if (max_k != -1 && max_k < 1)
    throw std::invalid_argument("max_k must be -1 or >= 1");
  nums_.emplace_back(1);  // M_0(0) = empty product
}

const Int& SigmaColumn::raw(long k) const {
  if (k < 0 || k > tracked_k())
    throw std::out_of_range("sigma index outside tracked column");
  return nums_[k];
}

void SigmaColumn::extend(ExecutionPolicy policy) {
  const long next_n = n_ + 1;
  const Int value = f_(next_n);
  if (value == 0) throw ZeroValueError(next_n);

  const long old_top = tracked_k();
  const bool grow = cap_ == -1 || old_top < cap_;

  if (policy == ExecutionPolicy::Serial) {
    if (grow) nums_.emplace_back(nums_.back());  // M_{n+1} = M_n
    for (long k = old_top; k >= 1; --k) {
      nums_[k] *= value;
      nums_[k] += nums_[k - 1];
    }
    nums_[0] *= value;
  } else {
    const long new_top = grow ? old_top + 1 : old_top;
    scratch_.resize(new_top + 1);
    if (grow) scratch_[new_top] = nums_[old_top];
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long k = 1; k <= old_top; ++k)
      scratch_[k] = value * nums_[k] + nums_[k - 1];
    scratch_[0] = value * nums_[0];
    nums_.swap(scratch_);
  }

  product_ *= value;
  n_ = next_n;
}

void SigmaColumn::extend_to(long n, ExecutionPolicy policy) {
  while (n_ < n) extend(policy);
}

Int SigmaColumn::shared_denominator() const { return abs(product_); }

int SigmaColumn::sign() const { return sgn(product_) >= 0 ? 1 : -1; }

Int SigmaColumn::numerator(long k) const { return sign() * raw(k); }

Rat SigmaColumn::sigma(long k) const {
  if (k > n_) return Rat(0);
  Rat r(raw(k), product_);
  r.canonicalize();
  return r;
}

bool SigmaColumn::sigma_is_integer(long k) const {
  if (k > n_) return true;  // the empty sum is 0
  return mpz_divisible_p(raw(k).get_mpz_t(), product_.get_mpz_t()) != 0;
}

SigmaColumn sigma_column(const Polynomial& f, long n, ExecutionPolicy policy) {
  SigmaColumn column(f);
  column.extend_to(n, policy);
  return column;
}

SigmaTable::SigmaTable(Polynomial f, std::vector<std::vector<Rat>> rows)
    : f_(std::move(f)), rows_(std::move(rows)) {}

const Rat& SigmaTable::at(long k, long n) const {
  if (n < 1 || n > n_max() || k < 1 || k > n)
    throw std::out_of_range("table index outside 1 <= k <= n <= n_max");
  return rows_[n - 1][k - 1];
}

std::vector<TableEntry> SigmaTable::entries() const {
  std::vector<TableEntry> out;
  for (long n = 1; n <= n_max(); ++n)
    for (long k = 1; k <= n; ++k) out.push_back({k, n, rows_[n - 1][k - 1]});
  return out;
}

SigmaTable sigma_table(const Polynomial& f, long n_max) {
  SigmaColumn column(f);
  std::vector<std::vector<Rat>> rows;
  rows.reserve(n_max);
  for (long n = 1; n <= n_max; ++n) {
    column.extend();
    std::vector<Rat> row;
    row.reserve(n);
    for (long k = 1; k <= n; ++k) row.push_back(column.sigma(k));
    rows.push_back(std::move(row));
  }
  return SigmaTable(f, std::move(rows));
}

Rat sigma_oracle(const Polynomial& f, long n, long k) {
  if (n > 20) throw RangeError("oracle limited to n <= 20");
  if (n < 0 || k < 0) throw std::invalid_argument("negative oracle index");
  if (k > n) return Rat(0);
  if (k == 0) return Rat(1);

  std::vector<Rat> inv(n + 1);
  for (long i = 1; i <= n; ++i) {
    Int v = f(i);
    if (v == 0) throw ZeroValueError(i);
    inv[i] = make_rational(1, v);
  }

  // Walk all k-subsets of {1..n} in lexicographic order.
  std::vector<long> idx(k);
  for (long j = 0; j < k; ++j) idx[j] = j + 1;
  Rat total(0);
  for (;;) {
    Rat prod(1);
    for (long j = 0; j < k; ++j) prod *= inv[idx[j]];
    total += prod;

    long j = k - 1;
    while (j >= 0 && idx[j] == n - (k - 1 - j)) --j;
    if (j < 0) break;
    ++idx[j];
    for (long t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return total;
}

std::vector<IntegerHit> integer_hits(const SigmaTable& table) {
  std::vector<IntegerHit> hits;
  for (long n = 1; n <= table.n_max(); ++n)
    for (long k = 1; k <= n; ++k) {
      const Rat& value = table.at(k, n);
      if (is_integer(value)) hits.push_back({k, n, value});
    }
  return hits;
}

std::vector<IntegerHit> scan_integer_hits(const Polynomial& f, long n_max) {
  SigmaColumn column(f);
  std::vector<IntegerHit> hits;
  for (long n = 1; n <= n_max; ++n) {
    column.extend();
    for (long k = 1; k <= n; ++k)
      if (column.sigma_is_integer(k)) hits.push_back({k, n, column.sigma(k)});
  }
  return hits;
}

}  // namespace recipsym
