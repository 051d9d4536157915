#pragma once

#include "recipsym/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace recipsym {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}

  // 1-based offset of the offending character in the input text.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ZeroPolynomialError : public std::runtime_error {
 public:
  ZeroPolynomialError()
      : std::runtime_error("the zero polynomial is not representable") {}
};

// Dense integer polynomial a_0 + a_1 x + ... + a_m x^m, stored constant term
// first with a_m != 0. The zero polynomial is rejected at construction.
class Polynomial {
 public:
  explicit Polynomial(std::vector<Int> coeffs);

  // Accepts an optional leading sign and terms `c`, `x`, `x^e`, `c*x^e`,
  // `cx^e` joined by '+'/'-'. Whitespace is ignored, like terms are merged,
  // exponents above 10^6 are rejected.
  static Polynomial parse(std::string_view text);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& coeff(long i) const;  // zero outside [0, degree]
  const Int& leading_coeff() const { return coeffs_.back(); }

  // Exact Horner evaluation.
  Int operator()(const Int& x) const;
  Int operator()(long x) const { return (*this)(Int(x)); }

  bool all_coeffs_nonnegative() const;
  long term_count() const;  // number of nonzero coefficients

  // Canonical text form, highest degree first, zero terms and unit
  // coefficients omitted: parse(render()) reproduces the polynomial.
  std::string render() const;

  bool operator==(const Polynomial& other) const {
    return coeffs_ == other.coeffs_;
  }

 private:
  std::vector<Int> coeffs_;
};

enum class PolyCase {
  MonomialLeadGe2,    // a x^m, m >= 2, a >= 2
  MonomialLeadOne,    // x^m, m >= 2
  CaseOne,            // x^2 + 1
  CaseTwo,            // m = 2, a_1 = 0, >= 2 terms, max(a_0, a_2) >= 2
  CaseThree,          // m = 2 with a_1 >= 1, or m >= 3, >= 2 terms
  LinearNonconstant,  // degree 1, nonnegative coefficients
  Constant,           // degree 0
  HasNegativeCoeff,
};

std::string_view to_string(PolyCase tag);

struct PolyClass {
  PolyCase tag;
  // CaseThree only: smallest l < m with a_l >= 1.
  std::optional<long> lower_term_index;
};

// Total on valid polynomials; exactly one tag applies. Negative coefficients
// are peeled off first, then degree 0/1, then single-term monomials, then
// the three multi-term shapes.
PolyClass classify(const Polynomial& f);

// Smallest i in [1, n_max] with f(i) == 0, if any.
std::optional<long> first_zero_at_positive_arg(const Polynomial& f, long n_max);

}  // namespace recipsym
