#pragma once

#include <vector>

#include "galedim/circuits.hpp"
#include "galedim/gale.hpp"
#include "galedim/prefix_set.hpp"
#include "galedim/source.hpp"

namespace galedim {

// Nonempty set of equal-length blocks S subseteq {0,1}^l. Blocks are kept in
// lexicographic order.
class BlockAlphabet {
public:
    BlockAlphabet(unsigned block_len, std::vector<BitWord> blocks);
    unsigned block_len() const { return l_; }
    const std::vector<BitWord>& blocks() const { return blocks_; }
    std::size_t size() const { return blocks_.size(); }
    // Number of blocks that the word u (|u| <= l) prefixes.
    std::size_t completions(const BitWord& u) const;
    std::size_t completions_extended(const BitWord& u, int b) const;

private:
    unsigned l_;
    std::vector<BitWord> blocks_;
};

// A finite cover (antichain) together with the exponent it is priced at.
struct CoverSpec {
    PrefixSet cover;
    SExponent s;
};

// Betting bias y in (0, 1/2] for the frequency gale.
struct FrequencyBias {
    Rat y;
    SExponent s;
};

// d(w) = (q/2)^{|w|}: the uniform rule; succeeds everywhere when q > 2.
GaleRule trivial_gale(const SExponent& s);

// q^{|w|} along the target sequence, 0 elsewhere; succeeds on the target for
// q > 1.
GaleRule singleton_gale(const SExponent& s, SourcePtr target);

// The cover-priced gale: on or past a cover word w (with cover ancestor v),
// d(w) = (q/2)^{|w|-|v|}; before the cover, d(w) = sum over completions u
// (wu in the cover) of q^{-|u|}. d is exactly a gale, d(lambda) equals the
// cover's Kraft mass, and d = 1 on cover words.
GaleRule cover_gale(const CoverSpec& spec);

// Finite weighted sum 2^r * cover_gale(covers[r]); requires cover r to have
// Kraft mass <= 2^-2^r so the weighted root mass stays below 1. All covers
// must share q.
GaleRule cover_sum_gale(const std::vector<CoverSpec>& covers);

// Multiplicative bias-y betting: d(w0) = (1-y) q d(w), d(w1) = y q d(w);
// closed form y^{#1(w)} (1-y)^{#0(w)} q^{|w|}.
GaleRule frequency_gale(const FrequencyBias& bias);

// Block-structured betting over S: within a block, d(wu) = q^{|u|} rho(u) d(w)
// with rho(u) the fraction of S-blocks that u prefixes.
GaleRule block_gale(const SExponent& s, const BlockAlphabet& alphabet);

// Circuit-census betting. Position p of the sequence decides the p-th string
// in the standard length-ordered enumeration of {0,1}*; the segment for
// input length n spans positions 2^n-1 .. 2^(n+1)-2. Within segment n the
// rule bets proportionally to the census counts N(n, t(n), u); evaluation
// past the last provided segment is rejected.
GaleRule circuit_gale(const SExponent& s, const std::vector<unsigned>& gate_budget_per_n);

// Closed form of the frequency gale (for cross-checks):
// y^{ones} (1-y)^{zeros} q^{ones+zeros}.
Rat frequency_gale_closed_form(const FrequencyBias& bias, std::size_t zeros, std::size_t ones);

}  // namespace galedim
