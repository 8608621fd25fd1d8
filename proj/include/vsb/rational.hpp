#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "vsb/errors.hpp"

namespace vsb {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator once canonicalized; every constructor path below
// canonicalizes, so arithmetic never leaves canonical form.
using Rational = mpq_class;

Rational rat(long num, long den = 1);

// Accepts "p", "-p", "p/q" with arbitrary-precision p, q. Throws
// BadRationalError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace vsb
