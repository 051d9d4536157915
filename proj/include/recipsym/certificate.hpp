#pragma once

#include "recipsym/enclosure.hpp"

#include <string>
#include <vector>

namespace recipsym {

enum class Relation { Lt, Le, Eq, Ge, Gt };

std::string_view to_string(Relation rel);
bool relation_holds(const Rat& lhs, Relation rel, const Rat& rhs);

// One replayable comparison between exact rationals. When the right-hand
// side is an enclosure endpoint (optionally scaled), enough provenance is
// kept to re-derive the endpoint during recheck.
struct BoundStep {
  std::string description;
  Rat lhs;
  Relation rel;
  Rat rhs;
  std::optional<ConstantId> rhs_constant;
  long rhs_terms = 0;
  bool rhs_upper_endpoint = false;
  Rat rhs_scale = 1;
};

enum class CertificateCase {
  KGe2,
  MonomialLeadGe2,
  MonomialLeadOne,
  CaseOne,
  CaseTwo,
  CaseThree,
};

std::string_view to_string(CertificateCase c);

enum class Conclusion {
  StrictlyBetween0And1,
  StrictlyBetween1And2,
  EqualsOne,  // only inside an ExceptionalCase
};

std::string_view to_string(Conclusion c);

// Machine-checkable record: the conjunction of the chain steps places
// sigma_{k,f}(n) strictly inside the conclusion interval, hence outside the
// integers whenever the conclusion is not EqualsOne.
struct Certificate {
  Polynomial f;
  long k;
  long n;
  CertificateCase case_tag;
  std::vector<BoundStep> chain;
  Conclusion conclusion;
};

// f = x^m with k = n = 1: sigma equals exactly 1. Carries the EqualsOne
// certificate for that instance.
class ExceptionalCase : public std::runtime_error {
 public:
  explicit ExceptionalCase(Certificate cert);
  const Certificate& certificate() const { return cert_; }
  const Rat& value() const { return value_; }

 private:
  Certificate cert_;
  Rat value_;
};

// Dispatches on classify(f) and k, mirroring the descending-chain argument
// for k >= 2 and the per-shape bounds for k = 1. Preconditions: nonnegative
// coefficients, degree >= 2, 1 <= k <= n.
Certificate certify_noninteger(const Polynomial& f, long k, long n);

// Re-evaluates every chain step with exact arithmetic, re-deriving enclosure
// endpoints from their recorded provenance. True iff every step holds.
bool recheck(const Certificate& cert);

}  // namespace recipsym
