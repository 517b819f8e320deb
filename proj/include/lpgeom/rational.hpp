#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lpg {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text: "p" for integers, "p/q" otherwise (q > 0).
std::string to_string(const Rational& q);

/// Accepts "p" or "p/q" with an optional leading sign.
Rational parse_rational(std::string_view text);

inline Rational canonical(Rational q) {
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace lpg
