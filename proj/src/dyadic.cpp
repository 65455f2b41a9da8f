#include "galedim/dyadic.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace galedim {

namespace {

// Exact value of an mpfr number as a rational: mant * 2^exp.
Rat mpfr_to_rat(const mpfr_t x) {
    if (mpfr_zero_p(x)) return Rat(0);
    Int mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
    Rat r(mant);
    if (e >= 0)
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
    else
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-e));
    r.canonicalize();
    return r;
}

// One directed log2 evaluation at working precision p.
Rat log2_directed(const Rat& x, mpfr_prec_t p, mpfr_rnd_t rnd) {
    mpfr_t v;
    mpfr_init2(v, p);
    mpfr_set_q(v, x.get_mpq_t(), rnd);
    mpfr_log2(v, v, rnd);
    Rat out = mpfr_to_rat(v);
    mpfr_clear(v);
    return out;
}

}  // namespace

RealInterval log2_interval(const Rat& x, unsigned prec_bits) {
    if (x <= 0) throw std::domain_error("log2_interval: nonpositive argument");
    Rat tol = pow2(-static_cast<long>(prec_bits));
    mpfr_prec_t p = static_cast<mpfr_prec_t>(prec_bits) + 32;
    for (int attempt = 0; attempt < 16; ++attempt) {
        RealInterval iv(log2_directed(x, p, MPFR_RNDD), log2_directed(x, p, MPFR_RNDU));
        if (iv.width() <= tol) return iv;
        p *= 2;
    }
    throw std::runtime_error("log2_interval: failed to reach requested width");
}

std::string decimal_string(const Rat& v, int digits) {
    if (digits < 0) throw std::invalid_argument("decimal_string: negative digit count");
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // floor(v * 10^digits + 1/2), exactly.
    Rat scaled = v * Rat(scale);
    Int twice_num = scaled.get_num() * 2;
    Int den = scaled.get_den();
    Int two_den = den * 2;
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), twice_num.get_mpz_t(), two_den.get_mpz_t());
    Int rounded = q;
    if (r >= den) rounded += 1;
    bool neg = rounded < 0;
    Int mag = neg ? Int(-rounded) : rounded;
    std::string s = mag.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    if (neg) s.insert(0, "-");
    return s;
}

}  // namespace galedim
