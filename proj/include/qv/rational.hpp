#pragma once

#include <gmpxx.h>

#include <string>

namespace qv {

using Rat = mpq_class;
using Int = mpz_class;

/// Renders a rational as "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& r);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

/// r reduced modulo 1, result in [0, 1).
Rat frac_mod1(const Rat& r);

/// Floor of a rational as an arbitrary-precision integer.
Int rat_floor(const Rat& r);

/// Ceiling of a rational as an arbitrary-precision integer.
Int rat_ceil(const Rat& r);

}  // namespace qv
