#pragma once

#include <stdexcept>

#include "galedim/dyadic.hpp"
#include "galedim/rat.hpp"

namespace galedim {

// The betting exponent s, carried exclusively through the exact rational
// q = 2^s. Every formula in the library is rewritten in q, e.g.
// 2^((s-1)|v|) = (q/2)^|v| and 2^((1-s)|v|) = (2/q)^|v|, so all checks stay
// exact. s itself is never stored; it is reported on demand as a certified
// dyadic interval.
class SExponent {
public:
    explicit SExponent(Rat q) : q_(std::move(q)) {
        if (q_ <= 0) throw std::invalid_argument("SExponent: q = 2^s must be positive");
    }

    static SExponent martingale() { return SExponent(Rat(2)); }
    static SExponent from_q(const Rat& q) { return SExponent(q); }

    const Rat& q() const { return q_; }

    // s as a certified dyadic interval of width <= 2^-prec_bits.
    RealInterval s_interval(unsigned prec_bits = 24) const { return log2_interval(q_, prec_bits); }

    bool operator==(const SExponent& o) const { return q_ == o.q_; }
    bool operator!=(const SExponent& o) const { return q_ != o.q_; }

private:
    Rat q_;
};

}  // namespace galedim
