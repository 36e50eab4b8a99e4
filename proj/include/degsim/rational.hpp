#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace degsim {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact "p/q" or "p" rendering.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Total bit length of numerator and denominator.
std::size_t bit_size(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace degsim
