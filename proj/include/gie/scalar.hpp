#ifndef GIE_SCALAR_HPP
#define GIE_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gie {

// Exact rational; mpq_class keeps numerator/denominator in lowest terms
// with a positive denominator after every arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;

// Parses "p", "p/q" or "-p/q" and canonicalizes. Throws Error(ParseError).
Scalar parse_scalar(std::string_view text);

// "p/q" form, or "p" when the denominator is one.
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

Scalar pow(const Scalar& base, long exponent);

} // namespace gie

#endif
