#pragma once

#include <string>

#include "galedim/rat.hpp"

namespace galedim {

// Closed interval [lo, hi] with exact rational endpoints. Arithmetic on
// intervals is exact; width enters only where a transcendental value
// (log2) is enclosed. Used for every asserted comparison that involves a
// logarithm or entropy; no machine floating point participates.
struct RealInterval {
    Rat lo;
    Rat hi;

    RealInterval() = default;
    RealInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    static RealInterval point(const Rat& v) { return {v, v}; }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }

    RealInterval operator+(const RealInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RealInterval operator-(const RealInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    // Scale by an exact nonnegative rational.
    RealInterval scale(const Rat& c) const { return {lo * c, hi * c}; }
    RealInterval negate() const { return {-hi, -lo}; }

    // Hull of two intervals (for max-accumulation: [max lo, max hi]).
    static RealInterval max(const RealInterval& a, const RealInterval& b) {
        return {a.lo >= b.lo ? a.lo : b.lo, a.hi >= b.hi ? a.hi : b.hi};
    }
};

// Certified enclosure of log2(x) for rational x > 0 with width <= 2^-prec_bits.
// Endpoints are dyadic rationals extracted from directed-rounding evaluations.
RealInterval log2_interval(const Rat& x, unsigned prec_bits);

// Deterministic decimal rendering of an exact rational with `digits`
// fractional digits (round half up, computed exactly over integers).
std::string decimal_string(const Rat& v, int digits);

}  // namespace galedim
