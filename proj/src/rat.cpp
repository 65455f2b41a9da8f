#include "galedim/rat.hpp"

#include <stdexcept>

namespace galedim {

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (neg && base == 0) throw std::domain_error("rat_pow: 0 to a negative power");
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
    // base is canonical, so num^k/den^k already is; only the sign of an
    // inverted negative needs care.
    if (neg) {
        mpz_swap(r.get_num_mpz_t(), r.get_den_mpz_t());
        r.canonicalize();
    }
    return r;
}

Rat pow2(long e) {
    Rat r(1);
    if (e >= 0)
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
    else
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-e));
    return r;
}

Rat parse_rat(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
    std::string str(s);
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), str.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rat: malformed rational '" + str + "'");
    if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + str + "'");
    r.canonicalize();
    return r;
}

std::string to_fraction(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long floor_log2(const Rat& x) {
    if (x <= 0) throw std::domain_error("floor_log2: nonpositive argument");
    long bn = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2));
    long bd = static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
    // 2^(bn-1) <= num < 2^bn and likewise for den, so floor(log2 x) is
    // bn-bd or bn-bd-1; one shifted comparison decides.
    long e = bn - bd;
    Int shifted;
    if (e >= 0)
        mpz_mul_2exp(shifted.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    else {
        mpz_mul_2exp(shifted.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(-e));
        return mpz_cmp(shifted.get_mpz_t(), x.get_den_mpz_t()) >= 0 ? e : e - 1;
    }
    return mpz_cmp(x.get_num_mpz_t(), shifted.get_mpz_t()) >= 0 ? e : e - 1;
}

bool geq_pow2(const Rat& v, long t) {
    if (v <= 0) return false;
    long bn = static_cast<long>(mpz_sizeinbase(v.get_num_mpz_t(), 2));
    long bd = static_cast<long>(mpz_sizeinbase(v.get_den_mpz_t(), 2));
    if (bn - 1 >= bd + t) return true;   // num >= 2^(bn-1) >= den*2^t
    if (bn < bd + t) return false;       // num < 2^bn <= den*2^t
    Int rhs;
    if (t >= 0)
        mpz_mul_2exp(rhs.get_mpz_t(), v.get_den_mpz_t(), static_cast<unsigned long>(t));
    else {
        Int lhs;
        mpz_mul_2exp(lhs.get_mpz_t(), v.get_num_mpz_t(), static_cast<unsigned long>(-t));
        return mpz_cmp(lhs.get_mpz_t(), v.get_den_mpz_t()) >= 0;
    }
    return mpz_cmp(v.get_num_mpz_t(), rhs.get_mpz_t()) >= 0;
}

int cmp_rat(const Rat& a, const Rat& b) {
    int s = mpq_cmp(a.get_mpq_t(), b.get_mpq_t());
    return s < 0 ? -1 : (s > 0 ? 1 : 0);
}

}  // namespace galedim
