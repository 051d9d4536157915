#pragma once

#include "recipsym/sigma.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace recipsym {

// f(index) == 0 inside the scanned range: the hypothesis that f never
// vanishes on the positive integers fails for this input.
class HypothesisViolated : public std::runtime_error {
 public:
  explicit HypothesisViolated(long index);
  long index() const { return index_; }

 private:
  long index_;
};

struct SweepHit {
  Polynomial f;
  long k;
  long n;
  Rat value;
  bool expected;  // inside the family's known exception set
};

struct SweepReport {
  std::string family;
  std::map<std::string, long> ranges;
  unsigned long long instances_checked = 0;
  // Sorted by (canonical rendering of f, n, k); identical across runs and
  // worker counts.
  std::vector<SweepHit> hits;
  double wall_seconds = 0.0;

  bool has_unexpected_hit() const;
};

// All f with nonnegative coefficients <= coeff_max, degree in
// [2, max_degree], leading coefficient >= 1, in a fixed enumeration order.
std::vector<Polynomial> theorem_family(int max_degree, long coeff_max);

// Scans every family member for integer sigma values up to n_max. The only
// expected hits are k = n = 1 for the pure powers x^m. jobs <= 0 uses the
// machine default; jobs == 1 runs the serial reference path.
SweepReport theorem_sweep(int max_degree, long coeff_max, long n_max,
                          int jobs = 0);

enum class PriorKind { Harmonic, ChenTang, WangHong };

std::string_view to_string(PriorKind kind);

struct PriorParams {
  long n_max = 0;
  long a_max = 0;  // WangHong only
  long b_max = 0;  // WangHong only
};

// Harmonic: f = x, k = 1, n in [2, n_max]; no hits expected.
// ChenTang: f = x, all k, n in [1, n_max]; expected hits (1,1) and (2,3).
// WangHong: f = ax + b over 1 <= a <= a_max, 1 <= b <= b_max, all k,
//           n in [4, n_max]; no hits expected.
SweepReport prior_results_sweep(PriorKind kind, const PriorParams& params,
                                int jobs = 0);

struct ConjectureReport {
  Polynomial f;
  long n_max;
  unsigned long long instances_checked = 0;
  std::vector<IntegerHit> hits;  // (n, k) lexicographic
  std::optional<long> last_hit_n;
  // Scan-bounded witness only: no integer value occurs with
  // candidate_n <= n <= n_max. Never a claim beyond the scanned range.
  long candidate_n = 1;
  double wall_seconds = 0.0;
};

// Scans all k <= n <= n_max for an arbitrary integer polynomial (negative
// coefficients allowed). Throws HypothesisViolated if f vanishes in range.
ConjectureReport explore_conjecture(const Polynomial& f, long n_max);

}  // namespace recipsym
