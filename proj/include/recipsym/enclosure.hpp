#pragma once

#include "recipsym/polynomial.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace recipsym {

enum class ConstantId {
  Zeta2,
  Zeta4,
  Pi2Over6,    // = zeta(2)
  Pi2Over12,   // = zeta(2) / 2
  Pi4Over90,   // = zeta(4)
  Pi4Over120,  // = (zeta(2)^2 - zeta(4)) / 2
  Zeta2Minus1,
};

std::string_view to_string(ConstantId id);

// Rational interval certified to contain the named constant. Endpoints come
// from an exact partial sum plus integral-test tail bounds, so widening N
// never loses containment and the width shrinks monotonically.
struct Enclosure {
  Rat lo;
  Rat hi;
  ConstantId constant;
  long terms;

  Rat width() const { return hi - lo; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

// Exact sum_{j=1}^{terms} j^{-s} for s in {2, 4}.
Rat zeta_partial_sum(int s, long terms);

// For s=2 the tail lies in [1/(N+1), 1/N]; for s=4 in [1/(3(N+1)^3), 1/(3N^3)].
Enclosure zeta_enclosure(int s, long terms);

// Interval combination of the base zeta enclosures, endpoints exact.
Enclosure derived_enclosure(ConstantId id, long terms);

// Exact sum_{j=a}^{b} 1/(j^2 + c) by divide-and-conquer merging (c = 0 gives
// partial zeta(2) sums over a subrange).
Rat reciprocal_quadratic_sum(long a, long b, long c);

// shift 0 (n >= 1): sum_{j<=n} 1/(j^2+j), checked equal to 1 - 1/(n+1).
// shift 2 (n >= 3): sum_{j<=n} 1/(j^2+2), checked < 1/3 + 1/6 + 1/2 - 1/n.
Rat telescoping_bound(long n, int shift);

enum class Verdict { Holds, Fails, Indeterminate };

std::string_view to_string(Verdict v);

struct InequalityReport {
  std::string claim;
  std::optional<Polynomial> f;
  long k = 0;
  long n = 0;
  Rat lhs;
  // The right-hand side is either rhs_scale * rhs_enclosure or rhs_value.
  std::optional<Enclosure> rhs_enclosure;
  Rat rhs_scale = 1;
  std::optional<Rat> rhs_value;
  Verdict verdict = Verdict::Indeterminate;
  long terms_used = 0;
};

// sigma_{k+1,f}(n) <= hi(zeta(2)-1) * sigma_{k,f}(n-1), the descending step.
// Checked against the certified upper endpoint; Holds or (at the refinement
// cap) Indeterminate, never Fails. Preconditions: f nonnegative, degree >= 2,
// 1 <= k, k + 1 <= n.
InequalityReport check_eq1(const Polynomial& f, long k, long n,
                           long terms = 100);

// sigma_{2,f}(n) < pi^4/120, certified by comparison against the lower
// endpoint. Preconditions: f nonnegative, degree >= 2, n >= 2.
InequalityReport check_eq2(const Polynomial& f, long n, long terms = 100);

// Refinement squares the term count until the verdict is determined or the
// cap is reached. Default 10^6; the RECIPSYM_TERMS_CAP environment variable
// overrides it.
long enclosure_terms_cap();

}  // namespace recipsym
