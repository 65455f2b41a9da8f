#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace galedim {

// All asserted arithmetic in this project is exact rational arithmetic.
// Rat is GMP's canonical-form rational; Int its integer.
using Rat = mpq_class;
using Int = mpz_class;

// base^e for integer e (negative allowed when base != 0).
Rat rat_pow(const Rat& base, long e);

// 2^e as an exact rational.
Rat pow2(long e);

// Parses "num/den" or a plain integer. Throws std::invalid_argument on
// malformed input or a zero denominator.
Rat parse_rat(std::string_view s);

// Canonical "num/den" rendering (always includes the denominator).
std::string to_fraction(const Rat& q);

// Exact floor(log2(x)) for x > 0.
long floor_log2(const Rat& x);

// v >= 2^t, with a bit-length prefilter so the common case is O(1).
bool geq_pow2(const Rat& v, long t);

// Exact comparison helper that avoids full cross-multiplication when the
// operands' magnitudes already decide: returns -1/0/+1 for a ? b.
int cmp_rat(const Rat& a, const Rat& b);

}  // namespace galedim
