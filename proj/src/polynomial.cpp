#include "recipsym/polynomial.hpp"

#include <cctype>

namespace recipsym {

namespace {
const Int kZero = 0;
constexpr long kExponentLimit = 1000000;
}  // namespace

Polynomial::Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) throw ZeroPolynomialError();
}

const Int& Polynomial::coeff(long i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[i];
}

Int Polynomial::operator()(const Int& x) const {
  Int acc = coeffs_.back();
  for (long i = degree() - 1; i >= 0; --i) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

bool Polynomial::all_coeffs_nonnegative() const {
  for (const Int& c : coeffs_)
    if (c < 0) return false;
  return true;
}

long Polynomial::term_count() const {
  long count = 0;
  for (const Int& c : coeffs_)
    if (c != 0) ++count;
  return count;
}

std::string Polynomial::render() const {
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Int a = abs(c);
    if (i == 0 || a != 1) out += a.get_str();
    if (i >= 1) {
      out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  bool at_digit() const {
    return !done() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos + 1);
  }
  std::string digits() {
    std::size_t start = pos;
    while (at_digit()) ++pos;
    return std::string(text.substr(start, pos - start));
  }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
  Scanner sc{text};
  std::vector<Int> acc;
  const auto add_term = [&acc](const Int& c, long e) {
    if (static_cast<std::size_t>(e) >= acc.size()) acc.resize(e + 1, Int(0));
    acc[e] += c;
  };

  sc.skip_ws();
  if (sc.done()) sc.fail("empty polynomial expression");
  int sign = 1;
  if (sc.peek() == '+' || sc.peek() == '-') {
    sign = sc.peek() == '-' ? -1 : 1;
    ++sc.pos;
  }

  for (;;) {
    sc.skip_ws();
    if (sc.done()) sc.fail("expected a term");

    Int coeff = 1;
    bool have_coeff = false;
    if (sc.at_digit()) {
      coeff = Int(sc.digits());
      have_coeff = true;
    }
    sc.skip_ws();
    if (!sc.done() && sc.peek() == '*') {
      if (!have_coeff) sc.fail("unexpected '*'");
      ++sc.pos;
      sc.skip_ws();
      if (sc.done() || sc.peek() != 'x') sc.fail("expected 'x' after '*'");
    }

    long exponent = 0;
    bool have_x = false;
    if (!sc.done() && sc.peek() == 'x') {
      ++sc.pos;
      have_x = true;
      exponent = 1;
      sc.skip_ws();
      if (!sc.done() && sc.peek() == '^') {
        ++sc.pos;
        sc.skip_ws();
        if (!sc.at_digit()) sc.fail("expected exponent digits after '^'");
        const std::size_t at = sc.pos;
        std::string e = sc.digits();
        if (e.size() > 7 || (exponent = std::stol(e)) > kExponentLimit)
          throw ParseError("exponent exceeds limit 10^6", at + 1);
      }
    }
    if (!have_coeff && !have_x) sc.fail("expected a coefficient or 'x'");
    add_term(sign * coeff, have_x ? exponent : 0);

    sc.skip_ws();
    if (sc.done()) break;
    if (sc.peek() == '+')
      sign = 1;
    else if (sc.peek() == '-')
      sign = -1;
    else
      sc.fail(std::string("unexpected character '") + sc.peek() + "'");
    ++sc.pos;
  }
  return Polynomial(std::move(acc));
}

std::string_view to_string(PolyCase tag) {
  switch (tag) {
    case PolyCase::MonomialLeadGe2: return "monomial-lead-ge2";
    case PolyCase::MonomialLeadOne: return "monomial-lead-one";
    case PolyCase::CaseOne: return "case-1";
    case PolyCase::CaseTwo: return "case-2";
    case PolyCase::CaseThree: return "case-3";
    case PolyCase::LinearNonconstant: return "linear";
    case PolyCase::Constant: return "constant";
    case PolyCase::HasNegativeCoeff: return "has-negative-coeff";
  }
  return "?";
}

PolyClass classify(const Polynomial& f) {
  if (!f.all_coeffs_nonnegative()) return {PolyCase::HasNegativeCoeff, {}};
  const long m = f.degree();
  if (m == 0) return {PolyCase::Constant, {}};
  if (m == 1) return {PolyCase::LinearNonconstant, {}};
  if (f.term_count() == 1) {
    return {f.leading_coeff() >= 2 ? PolyCase::MonomialLeadGe2
                                   : PolyCase::MonomialLeadOne,
            {}};
  }
  // At least two terms, nonnegative coefficients, degree >= 2.
  if (m == 2 && f.coeff(1) == 0) {
    if (f.coeff(0) == 1 && f.coeff(2) == 1) return {PolyCase::CaseOne, {}};
    return {PolyCase::CaseTwo, {}};
  }
  long witness = 0;
  while (f.coeff(witness) == 0) ++witness;
  return {PolyCase::CaseThree, witness};
}

std::optional<long> first_zero_at_positive_arg(const Polynomial& f,
                                               long n_max) {
  for (long i = 1; i <= n_max; ++i)
    if (f(i) == 0) return i;
  return std::nullopt;
}

}  // namespace recipsym
