#include "recipsym/certificate.hpp"

#include "recipsym/sigma.hpp"

#include <utility>

namespace recipsym {

namespace {
// Term count used for endpoint comparisons that hold at any refinement
// level; 100 keeps the endpoints comfortably inside the strict bounds.
constexpr long kAnchorTerms = 100;
}  // namespace

std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Eq: return "=";
    case Relation::Ge: return ">=";
    case Relation::Gt: return ">";
  }
  return "?";
}

bool relation_holds(const Rat& lhs, Relation rel, const Rat& rhs) {
  switch (rel) {
    case Relation::Lt: return lhs < rhs;
    case Relation::Le: return lhs <= rhs;
    case Relation::Eq: return lhs == rhs;
    case Relation::Ge: return lhs >= rhs;
    case Relation::Gt: return lhs > rhs;
  }
  return false;
}

std::string_view to_string(CertificateCase c) {
  switch (c) {
    case CertificateCase::KGe2: return "k-ge-2";
    case CertificateCase::MonomialLeadGe2: return "monomial-lead-ge2";
    case CertificateCase::MonomialLeadOne: return "monomial-lead-one";
    case CertificateCase::CaseOne: return "case-1";
    case CertificateCase::CaseTwo: return "case-2";
    case CertificateCase::CaseThree: return "case-3";
  }
  return "?";
}

std::string_view to_string(Conclusion c) {
  switch (c) {
    case Conclusion::StrictlyBetween0And1: return "strictly-between-0-and-1";
    case Conclusion::StrictlyBetween1And2: return "strictly-between-1-and-2";
    case Conclusion::EqualsOne: return "equals-one";
  }
  return "?";
}

ExceptionalCase::ExceptionalCase(Certificate cert)
    : std::runtime_error("sigma_1(1) = 1 for f = x^m: the exceptional case"),
      cert_(std::move(cert)),
      value_(1) {}

namespace {

BoundStep exact_step(std::string description, Rat lhs, Relation rel, Rat rhs) {
  BoundStep step;
  step.description = std::move(description);
  step.lhs = std::move(lhs);
  step.rel = rel;
  step.rhs = std::move(rhs);
  return step;
}

BoundStep endpoint_step(std::string description, Rat lhs, Relation rel,
                        const Enclosure& enc, bool upper, Rat scale = Rat(1)) {
  BoundStep step;
  step.description = std::move(description);
  step.lhs = std::move(lhs);
  step.rel = rel;
  step.rhs_constant = enc.constant;
  step.rhs_terms = enc.terms;
  step.rhs_upper_endpoint = upper;
  step.rhs_scale = std::move(scale);
  step.rhs = step.rhs_scale * (upper ? enc.hi : enc.lo);
  return step;
}

// sigma_{1,f}(n) via a k<=1 column; O(n) multiply-adds, O(1) big integers.
Rat sigma1(const Polynomial& f, long n) {
  SigmaColumn column(f, 1);
  column.extend_to(n);
  return column.sigma(1);
}

// min over 1 <= j <= n of f(j) - (j^2 + j*linear + constant).
Int min_excess(const Polynomial& f, long n, long linear, long constant) {
  Int best;
  for (long j = 1; j <= n; ++j) {
    Int excess = f(j) - Int(j) * j - Int(j) * linear - constant;
    if (j == 1 || excess < best) best = std::move(excess);
  }
  return best;
}

// sigma_{j,f}(n - k + j) for j = 1..k, collected in one streaming pass.
std::vector<Rat> diagonal_sigmas(const Polynomial& f, long k, long n) {
  SigmaColumn column(f, k);
  std::vector<Rat> out(k + 1);
  const long base = n - k;
  for (long p = 1; p <= n; ++p) {
    column.extend();
    const long j = p - base;
    if (j >= 1 && j <= k) out[j] = column.sigma(j);
  }
  return out;
}

std::string sigma_label(long k, long n) {
  return "sigma_" + std::to_string(k) + "(" + std::to_string(n) + ")";
}

Certificate certify_k_ge2(const Polynomial& f, long k, long n) {
  Certificate cert{f, k, n, CertificateCase::KGe2, {},
                   Conclusion::StrictlyBetween0And1};
  const std::vector<Rat> diag = diagonal_sigmas(f, k, n);

  cert.chain.push_back(
      exact_step(sigma_label(k, n) + " > 0", diag[k], Relation::Gt, Rat(0)));

  if (k >= 3) {
    const Enclosure z2m1 =
        derived_enclosure(ConstantId::Zeta2Minus1, kAnchorTerms);
    for (long j = k; j >= 3; --j) {
      const long m = n - k + j;
      cert.chain.push_back(endpoint_step(
          sigma_label(j, m) + " <= hi(zeta(2)-1) * " + sigma_label(j - 1, m - 1),
          diag[j], Relation::Le, z2m1, /*upper=*/true, diag[j - 1]));
    }
    cert.chain.push_back(endpoint_step("hi(zeta(2)-1) < 1", Rat(1),
                                       Relation::Gt, z2m1, /*upper=*/true));
  }

  const long m2 = n - k + 2;
  const InequalityReport eq2 = check_eq2(f, m2, kAnchorTerms);
  if (eq2.verdict != Verdict::Holds)
    throw std::runtime_error("pi^4/120 enclosure could not separate sigma_2");
  cert.chain.push_back(endpoint_step(
      sigma_label(2, m2) + " < lo(pi^4/120)", eq2.lhs, Relation::Lt,
      *eq2.rhs_enclosure, /*upper=*/false));
  cert.chain.push_back(endpoint_step("lo(pi^4/120) < 1", Rat(1), Relation::Gt,
                                     *eq2.rhs_enclosure, /*upper=*/false));
  return cert;
}

Certificate certify_monomial_lead_ge2(const Polynomial& f, long n) {
  Certificate cert{f, 1, n, CertificateCase::MonomialLeadGe2, {},
                   Conclusion::StrictlyBetween0And1};
  const Rat s1 = sigma1(f, n);
  const Rat half_h2 = reciprocal_quadratic_sum(1, n, 0) / 2;
  const Enclosure half_zeta2 =
      derived_enclosure(ConstantId::Pi2Over12, kAnchorTerms);

  cert.chain.push_back(
      exact_step(sigma_label(1, n) + " > 0", s1, Relation::Gt, Rat(0)));
  cert.chain.push_back(
      exact_step(sigma_label(1, n) + " <= (1/2) sum_{j<=n} 1/j^2", s1,
                 Relation::Le, half_h2));
  cert.chain.push_back(endpoint_step("(1/2) sum_{j<=n} 1/j^2 < hi(pi^2/12)",
                                     half_h2, Relation::Lt, half_zeta2,
                                     /*upper=*/true));
  cert.chain.push_back(endpoint_step("hi(pi^2/12) < 1", Rat(1), Relation::Gt,
                                     half_zeta2, /*upper=*/true));
  return cert;
}

Certificate certify_monomial_lead_one(const Polynomial& f, long n) {
  Certificate cert{f, 1, n, CertificateCase::MonomialLeadOne, {},
                   Conclusion::StrictlyBetween1And2};
  const Rat s1 = sigma1(f, n);
  const Rat h2 = reciprocal_quadratic_sum(1, n, 0);
  const Enclosure zeta2 = derived_enclosure(ConstantId::Zeta2, kAnchorTerms);

  cert.chain.push_back(
      exact_step(sigma_label(1, n) + " > 1", s1, Relation::Gt, Rat(1)));
  cert.chain.push_back(exact_step(sigma_label(1, n) + " <= sum_{j<=n} 1/j^2",
                                  s1, Relation::Le, h2));
  cert.chain.push_back(endpoint_step("sum_{j<=n} 1/j^2 < hi(zeta(2))", h2,
                                     Relation::Lt, zeta2, /*upper=*/true));
  cert.chain.push_back(endpoint_step("hi(zeta(2)) < 2", Rat(2), Relation::Gt,
                                     zeta2, /*upper=*/true));
  return cert;
}

// Threshold pair for f = x^2 + 1, computed once: the crossing sits between
// n = 12 and n = 13.
const std::pair<Rat, Rat>& case_one_anchors() {
  static const std::pair<Rat, Rat> anchors = [] {
    const Polynomial f(std::vector<Int>{1, 0, 1});
    SigmaColumn column(f, 1);
    column.extend_to(12);
    Rat at12 = column.sigma(1);
    column.extend();
    return std::make_pair(std::move(at12), column.sigma(1));
  }();
  return anchors;
}

Certificate certify_case_one(const Polynomial& f, long n) {
  const auto& [s12, s13] = case_one_anchors();
  const Rat s1 = sigma1(f, n);

  if (n <= 12) {
    Certificate cert{f, 1, n, CertificateCase::CaseOne, {},
                     Conclusion::StrictlyBetween0And1};
    cert.chain.push_back(
        exact_step(sigma_label(1, n) + " > 0", s1, Relation::Gt, Rat(0)));
    cert.chain.push_back(exact_step(
        sigma_label(1, n) + " <= sigma_1(12)", s1, Relation::Le, s12));
    cert.chain.push_back(
        exact_step("sigma_1(12) < 1", s12, Relation::Lt, Rat(1)));
    return cert;
  }

  Certificate cert{f, 1, n, CertificateCase::CaseOne, {},
                   Conclusion::StrictlyBetween1And2};
  const Rat h2 = reciprocal_quadratic_sum(1, n, 0);
  const Enclosure zeta2 = derived_enclosure(ConstantId::Zeta2, kAnchorTerms);
  cert.chain.push_back(
      exact_step("1 < sigma_1(13)", s13, Relation::Gt, Rat(1)));
  cert.chain.push_back(exact_step("sigma_1(13) <= " + sigma_label(1, n), s13,
                                  Relation::Le, s1));
  cert.chain.push_back(exact_step(
      sigma_label(1, n) + " < sum_{j<=n} 1/j^2", s1, Relation::Lt, h2));
  cert.chain.push_back(endpoint_step("sum_{j<=n} 1/j^2 < hi(zeta(2))", h2,
                                     Relation::Lt, zeta2, /*upper=*/true));
  cert.chain.push_back(endpoint_step("hi(zeta(2)) < 2", Rat(2), Relation::Gt,
                                     zeta2, /*upper=*/true));
  return cert;
}

Certificate certify_case_two(const Polynomial& f, long n) {
  Certificate cert{f, 1, n, CertificateCase::CaseTwo, {},
                   Conclusion::StrictlyBetween0And1};
  const Rat s1 = sigma1(f, n);
  const Rat shifted = reciprocal_quadratic_sum(1, n, 2);

  cert.chain.push_back(
      exact_step(sigma_label(1, n) + " > 0", s1, Relation::Gt, Rat(0)));
  cert.chain.push_back(exact_step("f(j) >= j^2 + 2 on 1..n",
                                  Rat(min_excess(f, n, 0, 2)), Relation::Ge,
                                  Rat(0)));
  cert.chain.push_back(exact_step(
      sigma_label(1, n) + " <= sum_{j<=n} 1/(j^2+2)", s1, Relation::Le,
      shifted));
  if (n >= 3) {
    const Rat bound = Rat(1, 3) + Rat(1, 6) + Rat(1, 2) - make_rational(1, n);
    cert.chain.push_back(
        exact_step("sum_{j<=n} 1/(j^2+2) < 1/3 + 1/6 + 1/2 - 1/n", shifted,
                   Relation::Lt, bound));
    cert.chain.push_back(
        exact_step("1/3 + 1/6 + 1/2 - 1/n < 1", bound, Relation::Lt, Rat(1)));
  } else {
    cert.chain.push_back(exact_step("sum_{j<=n} 1/(j^2+2) < 1", shifted,
                                    Relation::Lt, Rat(1)));
  }
  return cert;
}

Certificate certify_case_three(const Polynomial& f, long n) {
  Certificate cert{f, 1, n, CertificateCase::CaseThree, {},
                   Conclusion::StrictlyBetween0And1};
  const Rat s1 = sigma1(f, n);
  const Rat telescoped = telescoping_bound(n, 0);
  const Rat closed = 1 - make_rational(1, n + 1);

  cert.chain.push_back(
      exact_step(sigma_label(1, n) + " > 0", s1, Relation::Gt, Rat(0)));
  cert.chain.push_back(exact_step("f(j) >= j^2 + j on 1..n",
                                  Rat(min_excess(f, n, 1, 0)), Relation::Ge,
                                  Rat(0)));
  cert.chain.push_back(exact_step(
      sigma_label(1, n) + " <= sum_{j<=n} 1/(j^2+j)", s1, Relation::Le,
      telescoped));
  cert.chain.push_back(exact_step("sum_{j<=n} 1/(j^2+j) = 1 - 1/(n+1)",
                                  telescoped, Relation::Eq, closed));
  cert.chain.push_back(
      exact_step("1 - 1/(n+1) < 1", closed, Relation::Lt, Rat(1)));
  return cert;
}

}  // namespace

Certificate certify_noninteger(const Polynomial& f, long k, long n) {
  if (!f.all_coeffs_nonnegative())
    throw std::invalid_argument("requires nonnegative coefficients");
  if (f.degree() < 2) throw std::invalid_argument("requires degree >= 2");
  if (k < 1 || k > n) throw std::invalid_argument("requires 1 <= k <= n");

  const PolyClass cls = classify(f);
  if (cls.tag == PolyCase::MonomialLeadOne && k == 1 && n == 1) {
    Certificate cert{f, 1, 1, CertificateCase::MonomialLeadOne, {},
                     Conclusion::EqualsOne};
    cert.chain.push_back(exact_step("sigma_1(1) = 1/f(1) = 1",
                                    make_rational(1, f(1)), Relation::Eq,
                                    Rat(1)));
    throw ExceptionalCase(std::move(cert));
  }

  if (k >= 2) return certify_k_ge2(f, k, n);

  switch (cls.tag) {
    case PolyCase::MonomialLeadGe2: return certify_monomial_lead_ge2(f, n);
    case PolyCase::MonomialLeadOne: return certify_monomial_lead_one(f, n);
    case PolyCase::CaseOne: return certify_case_one(f, n);
    case PolyCase::CaseTwo: return certify_case_two(f, n);
    case PolyCase::CaseThree: return certify_case_three(f, n);
    default:
      throw std::logic_error("unreachable: degree >= 2 nonnegative");
  }
}

bool recheck(const Certificate& cert) {
  for (const BoundStep& step : cert.chain) {
    Rat rhs = step.rhs;
    if (step.rhs_constant) {
      const Enclosure enc =
          derived_enclosure(*step.rhs_constant, step.rhs_terms);
      const Rat endpoint = step.rhs_upper_endpoint ? enc.hi : enc.lo;
      if (step.rhs_scale * endpoint != rhs) return false;
    }
    if (!relation_holds(step.lhs, step.rel, rhs)) return false;
  }
  return true;
}

}  // namespace recipsym
