#include "recipsym/rational.hpp"

#include <stdexcept>

namespace recipsym {

Rat make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rational_string(const Rat& r) { return r.get_str(); }

Rat parse_rational_string(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational: " + text);
  r.canonicalize();
  return r;
}

namespace {

long digit_count(const Int& a) {
  // mpz_sizeinbase may overestimate by one; correct exactly.
  std::string s = a.get_str();
  return static_cast<long>(s.size() - (s[0] == '-' ? 1 : 0));
}

Int pow10(long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

std::string decimal_string(const Rat& r, int digits) {
  if (digits < 1) throw std::invalid_argument("need at least one digit");
  if (r == 0) return "0";

  const bool negative = r < 0;
  Int a = abs(r.get_num());
  const Int& q = r.get_den();

  // e10 = floor(log10(a/q)): position of the leading significant digit.
  long e10;
  if (a >= q) {
    e10 = digit_count(Int(a / q)) - 1;
  } else {
    long t = 1;
    Int scaled = a * 10;
    while (scaled < q) {
      scaled *= 10;
      ++t;
    }
    e10 = -t;
  }

  // Scale so that round(a * 10^s / q) has exactly `digits` digits.
  const long s = digits - 1 - e10;
  Int num = a, den = q;
  if (s >= 0)
    num *= pow10(s);
  else
    den *= pow10(-s);

  Int d, rem;
  mpz_fdiv_qr(d.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
              den.get_mpz_t());
  // Round half to even on the discarded remainder.
  const int cmp = sgn(Int(2 * rem - den));
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(d.get_mpz_t()))) d += 1;
  if (d == pow10(digits)) {  // rounding carried into an extra digit
    d /= 10;
    ++e10;
  }

  std::string mant = d.get_str();
  std::string out;
  if (e10 >= -4 && e10 < digits) {
    if (e10 >= 0) {
      out = mant.substr(0, e10 + 1);
      std::string frac = mant.substr(e10 + 1);
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      if (!frac.empty()) out += "." + frac;
    } else {
      std::string frac(-e10 - 1, '0');
      frac += mant;
      while (frac.back() == '0' && frac.size() > 1) frac.pop_back();
      out = "0." + frac;
    }
  } else {
    std::string frac = mant.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = mant.substr(0, 1);
    if (!frac.empty()) out += "." + frac;
    out += "e";
    out += (e10 < 0 ? "-" : "+");
    out += std::to_string(e10 < 0 ? -e10 : e10);
  }
  return negative ? "-" + out : out;
}

}  // namespace recipsym
