#pragma once

#include <gmpxx.h>
#include <string>

namespace qhaar {

// Exact rationals; mpq_class keeps gcd(num,den)=1, den>0.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qhaar
