#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>

#include <infranil/errors.hpp>

namespace infranil {

using Integer = mpz_class;

// Exact rational scalar. mpq_class keeps values canonical: lowest terms,
// positive denominator, zero stored as 0/1.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (decimal digits only). Rejects everything else.
inline Rational parse_rational(const std::string& text) {
  bool ok = !text.empty();
  bool seen_digit = false;
  bool seen_slash = false;
  for (std::size_t i = 0; ok && i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '-') {
      ok = i == 0 || (seen_slash && text[i - 1] == '/');
    } else if (ch == '/') {
      ok = !seen_slash && seen_digit;
      seen_slash = true;
      seen_digit = false;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      seen_digit = true;
    } else {
      ok = false;
    }
  }
  ok = ok && seen_digit;
  if (!ok) throw ValidationError("malformed rational: \"" + text + "\"");

  Rational value;
  if (value.set_str(text, 10) != 0) throw ValidationError("malformed rational: \"" + text + "\"");
  if (value.get_den() == 0) throw ValidationError("zero denominator in rational: \"" + text + "\"");
  value.canonicalize();
  return value;
}

/// Canonicalizing constructor; raw mpq_class(p, q) would keep p/q unreduced.
inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw ValidationError("zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

inline std::string to_string(const Rational& value) { return value.get_str(); }

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// Exact conversion; the caller promises integrality.
inline Integer to_integer(const Rational& value) {
  if (!is_integer(value))
    throw StructureError("expected integer value, got " + value.get_str());
  return value.get_num();
}

}  // namespace infranil
