#include "galedim/circuits.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace galedim {

namespace {

constexpr unsigned kMaxInputs = 3;

std::uint32_t mask_of(unsigned n) {
    unsigned width = 1u << n;
    return width >= 32 ? 0xffffffffu : ((1u << width) - 1u);
}

}  // namespace

std::string TruthTable::hex() const {
    unsigned digits = (width() + 3) / 4;
    static const char* hexd = "0123456789abcdef";
    std::string s(digits, '0');
    for (unsigned i = 0; i < digits; ++i)
        s[digits - 1 - i] = hexd[(bits >> (4 * i)) & 0xf];
    return s;
}

BitWord TruthTable::characteristic() const {
    BitWord u;
    for (unsigned j = 0; j < width(); ++j) u.push_back((bits >> j) & 1u);
    return u;
}

TruthTable TruthTable::from_characteristic(unsigned n, const BitWord& u) {
    if (u.size() != (std::size_t{1} << n))
        throw std::invalid_argument("TruthTable: characteristic string has wrong length");
    TruthTable t{n, 0};
    for (unsigned j = 0; j < t.width(); ++j)
        if (u.bit(j)) t.bits |= 1u << j;
    return t;
}

TruthTable TruthTable::input(unsigned n, unsigned i) {
    if (i >= n) throw std::invalid_argument("TruthTable::input: index out of range");
    TruthTable t{n, 0};
    for (unsigned j = 0; j < t.width(); ++j) {
        // assignment j spells x1..xn most-significant-first
        unsigned xi = (j >> (n - 1 - i)) & 1u;
        if (xi) t.bits |= 1u << j;
    }
    return t;
}

TruthTable TruthTable::constant(unsigned n, bool one) {
    return TruthTable{n, one ? mask_of(n) : 0u};
}

TruthTable CircuitProgram::eval() const {
    unsigned width = 1u << n;
    std::vector<std::uint32_t> val;
    val.reserve(2 + n + gates.size());
    val.push_back(0u);
    val.push_back(mask_of(n));
    for (unsigned i = 0; i < n; ++i) val.push_back(TruthTable::input(n, i).bits);
    for (std::size_t g = 0; g < gates.size(); ++g) {
        const Gate& gate = gates[g];
        if (gate.a < 0 || gate.a >= static_cast<int>(val.size()))
            throw std::invalid_argument("CircuitProgram: operand refers forward");
        std::uint32_t a = val[gate.a];
        std::uint32_t out;
        switch (gate.op) {
            case Gate::Op::NOT:
                out = ~a & mask_of(n);
                break;
            case Gate::Op::AND:
            case Gate::Op::OR: {
                if (gate.b < 0 || gate.b >= static_cast<int>(val.size()))
                    throw std::invalid_argument("CircuitProgram: operand refers forward");
                std::uint32_t b = val[gate.b];
                out = gate.op == Gate::Op::AND ? (a & b) : (a | b);
                break;
            }
            default:
                throw std::logic_error("CircuitProgram: bad op");
        }
        val.push_back(out & mask_of(n));
    }
    if (output < 0 || output >= static_cast<int>(val.size()))
        throw std::invalid_argument("CircuitProgram: bad output index");
    (void)width;
    return TruthTable{n, val[output]};
}

// ---------------------------------------------------------------------------

std::string CensusTable::model() const {
    return "basis NOT/AND2/OR2; inputs and constants 0,1 are free wires; size = gate "
           "count under tree composition (operand sizes add); one representative per "
           "truth table";
}

int CensusTable::min_size(const TruthTable& t) const {
    if (t.n != n_) throw std::invalid_argument("CensusTable: wrong input arity");
    return min_size_[t.bits];
}

unsigned long CensusTable::novel_count(unsigned t) const {
    unsigned long c = 0;
    for (int sz : min_size_)
        if (sz >= 0 && static_cast<unsigned>(sz) <= t) ++c;
    return c;
}

unsigned long CensusTable::conditional_count(unsigned t, const BitWord& u) const {
    if (u.size() > (std::size_t{1} << n_))
        throw std::invalid_argument("CensusTable: condition longer than the table");
    unsigned long c = 0;
    for (std::uint32_t tbl = 0; tbl < min_size_.size(); ++tbl) {
        int sz = min_size_[tbl];
        if (sz < 0 || static_cast<unsigned>(sz) > t) continue;
        bool match = true;
        for (std::size_t j = 0; j < u.size(); ++j)
            if (static_cast<int>((tbl >> j) & 1u) != u.bit(j)) {
                match = false;
                break;
            }
        if (match) ++c;
    }
    return c;
}

std::optional<unsigned> CensusTable::saturation() const {
    int worst = -1;
    for (int sz : min_size_) {
        if (sz < 0) return std::nullopt;
        worst = std::max(worst, sz);
    }
    return static_cast<unsigned>(worst);
}

unsigned long CensusTable::count_below(const Rat& gate_budget) const {
    unsigned long c = 0;
    for (int sz : min_size_)
        if (sz >= 0 && Rat(sz) < gate_budget) ++c;
    return c;
}

CircuitProgram CensusTable::witness_program(const TruthTable& t) const {
    if (min_size(t) < 0) throw std::invalid_argument("witness_program: table not reached");
    CircuitProgram prog;
    prog.n = n_;
    // Recursive expansion; reused subterms are listed again, so the gate
    // count equals the tree size recorded by the census.
    std::function<int(std::uint32_t)> emit = [&](std::uint32_t tbl) -> int {
        const Prov& p = prov_[tbl];
        if (p.is_wire) return p.wire_index;
        if (p.op == Gate::Op::NOT) {
            int a = emit(p.a);
            prog.gates.push_back({Gate::Op::NOT, a, 0});
        } else {
            int a = emit(p.a);
            int b = emit(p.b);
            prog.gates.push_back({p.op, a, b});
        }
        return static_cast<int>(n_) + 2 + static_cast<int>(prog.gates.size()) - 1;
    };
    prog.output = emit(t.bits);
    return prog;
}

CensusTable enumerate_circuits(unsigned n, unsigned t_max) {
    if (n > kMaxInputs)
        throw std::invalid_argument("enumerate_circuits: n > 3 is out of range");

    CensusTable census;
    census.n_ = n;
    census.t_max_ = t_max;
    std::size_t universe = std::size_t{1} << (1u << n);
    census.min_size_.assign(universe, -1);
    census.prov_.resize(universe);

    auto set_wire = [&](std::uint32_t tbl, int wire_index) {
        if (census.min_size_[tbl] == -1) {
            census.min_size_[tbl] = 0;
            census.prov_[tbl] = {Gate::Op::NOT, 0, 0, true, wire_index};
        }
    };
    set_wire(0u, 0);
    set_wire(mask_of(n), 1);
    for (unsigned i = 0; i < n; ++i) set_wire(TruthTable::input(n, i).bits, static_cast<int>(i) + 2);

    // layers[t] = tables whose minimal size is exactly t
    std::vector<std::vector<std::uint32_t>> layers(t_max + 1);
    for (std::uint32_t tbl = 0; tbl < universe; ++tbl)
        if (census.min_size_[tbl] == 0) layers[0].push_back(tbl);

    auto try_set = [&](std::uint32_t tbl, unsigned t, Gate::Op op, std::uint32_t a,
                       std::uint32_t b) {
        if (census.min_size_[tbl] == -1) {
            census.min_size_[tbl] = static_cast<int>(t);
            census.prov_[tbl] = {op, a, b, false, 0};
            layers[t].push_back(tbl);
        }
    };

    for (unsigned t = 1; t <= t_max; ++t) {
        for (std::uint32_t a : layers[t - 1]) try_set(~a & mask_of(n), t, Gate::Op::NOT, a, 0);
        for (unsigned i = 0; i + 1 <= t - 1; ++i) {
            unsigned j = t - 1 - i;
            if (j >= layers.size()) continue;
            for (std::uint32_t a : layers[i])
                for (std::uint32_t b : layers[j]) {
                    try_set(a & b, t, Gate::Op::AND, a, b);
                    try_set(a | b, t, Gate::Op::OR, a, b);
                }
        }
    }
    return census;
}

std::vector<int> closure_oracle_sizes(unsigned n) {
    if (n > kMaxInputs) throw std::invalid_argument("closure_oracle_sizes: n > 3");
    std::size_t universe = std::size_t{1} << (1u << n);
    const int INF = 1 << 20;
    std::vector<int> best(universe, INF);
    best[0] = 0;
    best[mask_of(n)] = 0;
    for (unsigned i = 0; i < n; ++i) best[TruthTable::input(n, i).bits] = 0;

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint32_t a = 0; a < universe; ++a) {
            if (best[a] >= INF) continue;
            std::uint32_t na = ~a & mask_of(n);
            if (best[a] + 1 < best[na]) {
                best[na] = best[a] + 1;
                changed = true;
            }
            for (std::uint32_t b = a; b < universe; ++b) {
                if (best[b] >= INF) continue;
                int cost = best[a] + best[b] + 1;
                std::uint32_t land = a & b, lor = a | b;
                if (cost < best[land]) {
                    best[land] = cost;
                    changed = true;
                }
                if (cost < best[lor]) {
                    best[lor] = cost;
                    changed = true;
                }
            }
        }
    }
    return best;
}

int circuit_size(const TruthTable& t, const CensusTable& census) {
    int sz = census.min_size(t);
    if (sz < 0)
        throw std::out_of_range("circuit_size: table not reached within the census range");
    return sz;
}

ShannonBoundResult shannon_bound_check(const CensusTable& census, unsigned t) {
    if (t <= census.n())
        throw std::invalid_argument("shannon_bound_check: requires t > n");
    ShannonBoundResult res;
    res.count = census.novel_count(t);
    // e < 27182818284590453 / 10^16
    static const Rat e_upper(Int("27182818284590453"), Int("10000000000000000"));
    res.bound = rat_pow(Rat(48) * e_upper * Rat(t), static_cast<long>(t));
    res.margin = res.bound - Rat(static_cast<unsigned long>(res.count));
    res.pass = Rat(static_cast<unsigned long>(res.count)) <= res.bound;
    return res;
}

Int ceil_pow2_rational(const Rat& x) {
    if (x < 0) throw std::invalid_argument("ceil_pow2_rational: negative exponent");
    const Int& p = x.get_num();
    const Int& q = x.get_den();
    if (q == 1) {
        Int r(1);
        mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), mpz_get_ui(p.get_mpz_t()));
        return r;
    }
    // smallest T with T^q >= 2^p
    unsigned long pe = mpz_get_ui(p.get_mpz_t());
    unsigned long qe = mpz_get_ui(q.get_mpz_t());
    Int two_p(1);
    mpz_mul_2exp(two_p.get_mpz_t(), two_p.get_mpz_t(), pe);
    Int lo(1), hi(1);
    mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), pe / qe + 1);  // 2^ceil(p/q) suffices
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        Int mp;
        mpz_pow_ui(mp.get_mpz_t(), mid.get_mpz_t(), qe);
        if (mp >= two_p)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

DensityResult density_check(const CensusTable& census, const Rat& alpha, const Rat& beta) {
    if (!(0 < beta && beta < alpha && alpha <= 1))
        throw std::invalid_argument("density_check: requires 0 < beta < alpha <= 1");
    DensityResult res;
    unsigned n = census.n();
    if (n == 0) throw std::invalid_argument("density_check: n must be positive");
    res.budget = alpha * pow2(static_cast<long>(1u << n) * 0 + static_cast<long>(1u << n)) /
                 Rat(0);  // placeholder, replaced below
    res.budget = alpha * Rat(Int(1) << (1u << n)) / Rat(n);
    res.count = census.count_below(res.budget);
    res.threshold = ceil_pow2_rational(beta * Rat(static_cast<unsigned long>(1u << n)));
    res.pass = Int(static_cast<unsigned long>(res.count)) >= res.threshold;
    return res;
}

}  // namespace galedim
