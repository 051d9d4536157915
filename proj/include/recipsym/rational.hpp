#pragma once

#include <gmpxx.h>

#include <string>

namespace recipsym {

using Int = mpz_class;
using Rat = mpq_class;

// num/den reduced to lowest terms with a positive denominator.
// Throws std::invalid_argument when den == 0.
Rat make_rational(const Int& num, const Int& den);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// "num/den" in lowest terms, or just "num" when the denominator is 1.
std::string rational_string(const Rat& r);

// Inverse of rational_string; accepts "p" and "p/q".
Rat parse_rational_string(const std::string& text);

// Decimal approximation with `digits` significant digits, round-half-even,
// computed by exact long division. Display only; never used in a comparison.
std::string decimal_string(const Rat& r, int digits = 12);

}  // namespace recipsym
