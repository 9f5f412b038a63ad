#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ecm {

/// Arbitrary-precision integers and rationals. GMP keeps mpq_class values in
/// lowest terms with a positive denominator after every arithmetic operation.
using Int = mpz_class;
using Rat = mpq_class;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rat parse_rat(std::string_view text);

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

}  // namespace ecm
