#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galedim/bitword.hpp"
#include "galedim/rat.hpp"

namespace galedim {

// Truth table of an n-input Boolean function, n <= 3. Bit j (of the packed
// integer) is the value on the j-th input assignment, where assignment j
// gives inputs x1..xn the bits of j written most-significant-first. This is
// also the order in which a characteristic string lists the length-n strings.
struct TruthTable {
    unsigned n = 0;
    std::uint32_t bits = 0;

    unsigned width() const { return 1u << n; }
    std::string hex() const;
    // Characteristic string: bit j of the table, j = 0 .. 2^n - 1.
    BitWord characteristic() const;
    static TruthTable from_characteristic(unsigned n, const BitWord& u);
    static TruthTable input(unsigned n, unsigned i);  // projection on x_{i+1}
    static TruthTable constant(unsigned n, bool one);

    bool operator==(const TruthTable& o) const { return n == o.n && bits == o.bits; }
};

// A straight-line program over {NOT, AND2, OR2}. Operands refer to the
// constants 0/1 (indices 0,1), the inputs x1..xn (2..n+1) or earlier gates
// (n+2+i for gate i). Size is the gate count; fanout of a gate is 1 in the
// census model (tree composition), so a reconstructed witness lists each
// reused subterm again.
struct Gate {
    enum class Op { NOT, AND, OR };
    Op op;
    int a = 0;
    int b = 0;  // unused for NOT
};

struct CircuitProgram {
    unsigned n = 0;
    std::vector<Gate> gates;
    int output = 0;

    std::size_t size() const { return gates.size(); }
    TruthTable eval() const;
};

// Census of small Boolean functions by minimal gate count. Enumeration is
// semantic: dynamic programming over the truth tables reachable at each
// size, with constants and inputs available as size-0 wires and gate sizes
// adding under composition. One representative per table stands in for the
// canonically-first ("novel") circuit, which is equivalent for every count
// the library uses.
class CensusTable {
public:
    unsigned n() const { return n_; }
    unsigned t_max() const { return t_max_; }
    std::string model() const;

    // -1 when the table is not reached within t_max.
    int min_size(const TruthTable& t) const;
    // N(n, t): number of distinct tables reachable with at most t gates.
    unsigned long novel_count(unsigned t) const;
    // N(n, t, u): same, restricted to tables whose first |u| decisions are u.
    unsigned long conditional_count(unsigned t, const BitWord& u) const;
    // Least t at which all 2^(2^n) tables are reached, if within t_max.
    std::optional<unsigned> saturation() const;
    // Tables with min_size < gate_budget (exact rational threshold).
    unsigned long count_below(const Rat& gate_budget) const;

    // A program of exactly min_size gates computing the table.
    CircuitProgram witness_program(const TruthTable& t) const;

private:
    friend CensusTable enumerate_circuits(unsigned n, unsigned t_max);
    struct Prov {
        Gate::Op op;
        std::uint32_t a = 0, b = 0;  // operand tables
        bool is_wire = false;
        int wire_index = 0;
    };
    unsigned n_ = 0;
    unsigned t_max_ = 0;
    std::vector<int> min_size_;  // indexed by table bits
    std::vector<Prov> prov_;
};

// Builds the census for n <= 3 up to size t_max.
CensusTable enumerate_circuits(unsigned n, unsigned t_max);

// Independent oracle: fixpoint relaxation over all function pairs
// (best[op(a,b)] <= best[a]+best[b]+1, best[not a] <= best[a]+1). Returns
// minimal sizes indexed by table bits.
std::vector<int> closure_oracle_sizes(unsigned n);

// CS(table): minimal gate count under the census model.
int circuit_size(const TruthTable& t, const CensusTable& census);

struct ShannonBoundResult {
    bool pass = false;
    unsigned long count = 0;  // N(n, t)
    Rat bound;                // certified rational upper bound of (48 e t)^t
    Rat margin;               // bound - count
};

// N(n, t) <= (48 e t)^t for t > n, with e over-approximated by a fixed
// rational so the comparison is one-sided and exact.
ShannonBoundResult shannon_bound_check(const CensusTable& census, unsigned t);

struct DensityResult {
    bool pass = false;
    unsigned long count = 0;  // tables with size < alpha 2^n / n
    Int threshold;            // ceil(2^(beta 2^n))
    Rat budget;               // alpha 2^n / n
};

// At least ceil(2^(beta 2^n)) tables decidable below alpha 2^n / n gates?
// The underlying statement is asymptotic, so a failure at toy n is a
// recorded outcome, not an error. Requires 0 < beta < alpha <= 1.
DensityResult density_check(const CensusTable& census, const Rat& alpha, const Rat& beta);

// Smallest integer >= 2^x for rational x >= 0 (exact integer root/power
// comparisons).
Int ceil_pow2_rational(const Rat& x);

}  // namespace galedim
