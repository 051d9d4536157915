#include "recipsym/enclosure.hpp"

#include "recipsym/sigma.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <utility>

namespace recipsym {

namespace {

// Unreduced divide-and-conquer sum of 1/term(j) over [a, b]. Keeps the
// per-merge cost near the size of the operands instead of the size of the
// full denominator, which matters once N reaches 10^5 and beyond.
template <typename TermFn>
void split_sum(long a, long b, const TermFn& term, Int& num, Int& den) {
  if (a == b) {
    num = 1;
    den = term(a);
    return;
  }
  const long mid = a + (b - a) / 2;
  Int n1, d1, n2, d2;
  split_sum(a, mid, term, n1, d1);
  split_sum(mid + 1, b, term, n2, d2);
  num = n1 * d2 + n2 * d1;
  den = d1 * d2;
}

template <typename TermFn>
Rat reciprocal_sum(long a, long b, const TermFn& term) {
  if (b < a) return Rat(0);
  Int num, den;
  split_sum(a, b, term, num, den);
  return make_rational(num, den);
}

Int power_term(long j, int s) {
  Int v(j);
  v *= v;
  if (s == 4) v *= v;
  return v;
}

std::mutex cache_mutex;
std::map<std::pair<int, long>, Enclosure> zeta_cache;

}  // namespace

std::string_view to_string(ConstantId id) {
  switch (id) {
    case ConstantId::Zeta2: return "zeta2";
    case ConstantId::Zeta4: return "zeta4";
    case ConstantId::Pi2Over6: return "pi2_over_6";
    case ConstantId::Pi2Over12: return "pi2_over_12";
    case ConstantId::Pi4Over90: return "pi4_over_90";
    case ConstantId::Pi4Over120: return "pi4_over_120";
    case ConstantId::Zeta2Minus1: return "zeta2_minus_1";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

Rat zeta_partial_sum(int s, long terms) {
  if (s != 2 && s != 4) throw std::invalid_argument("unsupported s");
  if (terms < 1) throw std::invalid_argument("need at least one term");
  return reciprocal_sum(1, terms, [s](long j) { return power_term(j, s); });
}

Rat reciprocal_quadratic_sum(long a, long b, long c) {
  return reciprocal_sum(a, b, [c](long j) {
    Int v(j);
    v *= v;
    v += c;
    return v;
  });
}

Enclosure zeta_enclosure(int s, long terms) {
  if (s != 2 && s != 4) throw std::invalid_argument("unsupported s");
  if (terms < 1) throw std::invalid_argument("need at least one term");

  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = zeta_cache.find({s, terms});
    if (it != zeta_cache.end()) return it->second;
  }

  const Rat partial = zeta_partial_sum(s, terms);
  // Integral-test tail: int_{N+1..inf} x^{-s} dx <= tail <= int_{N..inf}.
  Rat tail_lo, tail_hi;
  if (s == 2) {
    tail_lo = make_rational(1, terms + 1);
    tail_hi = make_rational(1, terms);
  } else {
    tail_lo = make_rational(1, 3 * Int(terms + 1) * (terms + 1) * (terms + 1));
    tail_hi = make_rational(1, 3 * Int(terms) * terms * terms);
  }
  Enclosure enc{partial + tail_lo, partial + tail_hi,
                s == 2 ? ConstantId::Zeta2 : ConstantId::Zeta4, terms};

  std::lock_guard<std::mutex> lock(cache_mutex);
  zeta_cache.emplace(std::make_pair(s, terms), enc);
  return enc;
}

namespace {

struct Interval {
  Rat lo, hi;
};

Interval mul(const Interval& x, const Interval& y) {
  const Rat p1 = x.lo * y.lo, p2 = x.lo * y.hi, p3 = x.hi * y.lo,
            p4 = x.hi * y.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval sub(const Interval& x, const Interval& y) {
  return {x.lo - y.hi, x.hi - y.lo};
}

}  // namespace

Enclosure derived_enclosure(ConstantId id, long terms) {
  switch (id) {
    case ConstantId::Zeta2:
      return zeta_enclosure(2, terms);
    case ConstantId::Zeta4:
      return zeta_enclosure(4, terms);
    case ConstantId::Pi2Over6: {
      Enclosure z = zeta_enclosure(2, terms);
      return {z.lo, z.hi, id, terms};
    }
    case ConstantId::Pi4Over90: {
      Enclosure z = zeta_enclosure(4, terms);
      return {z.lo, z.hi, id, terms};
    }
    case ConstantId::Pi2Over12: {
      Enclosure z = zeta_enclosure(2, terms);
      return {z.lo / 2, z.hi / 2, id, terms};
    }
    case ConstantId::Zeta2Minus1: {
      Enclosure z = zeta_enclosure(2, terms);
      return {z.lo - 1, z.hi - 1, id, terms};
    }
    case ConstantId::Pi4Over120: {
      Enclosure z2 = zeta_enclosure(2, terms);
      Enclosure z4 = zeta_enclosure(4, terms);
      Interval square = mul({z2.lo, z2.hi}, {z2.lo, z2.hi});
      Interval diff = sub(square, {z4.lo, z4.hi});
      return {diff.lo / 2, diff.hi / 2, id, terms};
    }
  }
  throw std::invalid_argument("unsupported constant");
}

long enclosure_terms_cap() {
  static const long cap = [] {
    if (const char* env = std::getenv("RECIPSYM_TERMS_CAP")) {
      char* end = nullptr;
      const long parsed = std::strtol(env, &end, 10);
      if (end && *end == '\0' && parsed >= 1) return parsed;
    }
    return 1000000L;
  }();
  return cap;
}

namespace {

long next_terms(long terms, long cap) {
  if (terms >= cap) return cap;
  if (terms > cap / terms) return cap;  // squaring would overflow the cap
  return terms * terms;
}

}  // namespace

InequalityReport check_eq1(const Polynomial& f, long k, long n, long terms) {
  if (!f.all_coeffs_nonnegative() || f.degree() < 2)
    throw std::invalid_argument(
        "requires nonnegative coefficients and degree >= 2");
  if (k < 1 || k + 1 > n)
    throw std::invalid_argument("requires 1 <= k and k + 1 <= n");
  if (terms < 1) throw std::invalid_argument("need at least one term");

  SigmaColumn column(f, k + 1);
  column.extend_to(n - 1);
  const Rat factor = column.sigma(k);  // sigma_{k,f}(n-1)
  column.extend();
  const Rat lhs = column.sigma(k + 1);  // sigma_{k+1,f}(n)

  InequalityReport report;
  report.claim = "eq1";
  report.f = f;
  report.k = k;
  report.n = n;
  report.lhs = lhs;
  report.rhs_scale = factor;

  const long cap = enclosure_terms_cap();
  for (;;) {
    const Enclosure enc = derived_enclosure(ConstantId::Zeta2Minus1, terms);
    report.rhs_enclosure = enc;
    report.terms_used = terms;
    if (lhs <= enc.hi * factor) {
      report.verdict = Verdict::Holds;
      return report;
    }
    if (terms >= cap) {
      report.verdict = Verdict::Indeterminate;
      return report;
    }
    terms = next_terms(terms, cap);
  }
}

InequalityReport check_eq2(const Polynomial& f, long n, long terms) {
  if (!f.all_coeffs_nonnegative() || f.degree() < 2)
    throw std::invalid_argument(
        "requires nonnegative coefficients and degree >= 2");
  if (n < 2) throw std::invalid_argument("requires n >= 2");
  if (terms < 1) throw std::invalid_argument("need at least one term");

  SigmaColumn column(f, 2);
  column.extend_to(n);
  const Rat lhs = column.sigma(2);

  InequalityReport report;
  report.claim = "eq2";
  report.f = f;
  report.k = 2;
  report.n = n;
  report.lhs = lhs;

  const long cap = enclosure_terms_cap();
  for (;;) {
    const Enclosure enc = derived_enclosure(ConstantId::Pi4Over120, terms);
    report.rhs_enclosure = enc;
    report.terms_used = terms;
    if (lhs < enc.lo) {
      report.verdict = Verdict::Holds;
      return report;
    }
    if (lhs > enc.hi) {
      report.verdict = Verdict::Fails;
      return report;
    }
    if (terms >= cap) {
      report.verdict = Verdict::Indeterminate;
      return report;
    }
    terms = next_terms(terms, cap);
  }
}

Rat telescoping_bound(long n, int shift) {
  switch (shift) {
    case 0: {
      if (n < 1) throw std::invalid_argument("requires n >= 1");
      const Rat sum = reciprocal_sum(
          1, n, [](long j) { return Int(j) * (j + 1); });
      const Rat closed = 1 - make_rational(1, n + 1);
      if (sum != closed)
        throw std::logic_error("telescoping identity failed");
      return sum;
    }
    case 2: {
      if (n < 3) throw std::invalid_argument("requires n >= 3 for shift 2");
      const Rat sum = reciprocal_quadratic_sum(1, n, 2);
      const Rat bound = Rat(1, 3) + Rat(1, 6) + Rat(1, 2) - make_rational(1, n);
      if (!(sum < bound))
        throw std::logic_error("shifted telescoping bound failed");
      return sum;
    }
    default:
      throw std::invalid_argument("shift must be 0 or 2");
  }
}

}  // namespace recipsym
