#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cdgalab {

/// Exact rational coefficient. Always assign expression results to a named
/// Rational; gmpxx expression templates must not be captured with `auto`.
using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p" or "p/q" with an optional leading sign.
Rational parse_rational(std::string_view text);

}  // namespace cdgalab
