#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "galedim/bitword.hpp"
#include "galedim/dyadic.hpp"
#include "galedim/prefix_set.hpp"
#include "galedim/rat.hpp"
#include "galedim/sexponent.hpp"

namespace galedim {

enum class GaleKind { gale, supergale };

const char* to_string(GaleKind k);

// Raised when an evaluation exposes a violated input contract (e.g. a
// claimed supergale produces a negative value under the exact conversion
// recurrence).
class GaleContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A betting rule d: {0,1}* -> Q>=0 together with its declared kind and
// exponent. A gale splits capital exactly, q*d(w) = d(w0)+d(w1); a supergale
// may discard, q*d(w) >= d(w0)+d(w1).
//
// The definitional core of every rule is a one-step extension: the value at
// the root plus child(w, b, d(w)) = d(w·b). Deep evaluations along a growing
// prefix therefore cost one extension step per bit; eval() additionally
// memoizes per-word values for point queries and tree walks. Rules are
// immutable; the memo cache is observationally invisible. Concurrent use of
// one rule requires external synchronization of that cache (or per-task
// copies via fork_cache()).
class GaleRule {
public:
    class Impl {
    public:
        virtual ~Impl() = default;
        virtual Rat root() const = 0;
        virtual Rat child(const BitWord& w, int bit, const Rat& value_at_w) const = 0;
        virtual std::string rule_id() const = 0;
        virtual nlohmann::json params() const = 0;
    };

    GaleRule(GaleKind kind, SExponent s, std::shared_ptr<const Impl> impl)
        : kind_(kind),
          s_(std::move(s)),
          impl_(std::move(impl)),
          cache_(std::make_shared<Cache>()) {}

    GaleKind kind() const { return kind_; }
    const SExponent& sexp() const { return s_; }
    const Rat& q() const { return s_.q(); }
    const std::string rule_id() const { return impl_->rule_id(); }

    Rat at_root() const { return impl_->root(); }

    // d(w·b) from d(w); pure, does not touch the cache.
    Rat child_value(const BitWord& w, int bit, const Rat& value_at_w) const {
        return impl_->child(w, bit, value_at_w);
    }

    // Memoized point evaluation (walks from the root, reusing cached
    // prefixes).
    Rat eval(const BitWord& w) const;

    void clear_cache() const { cache_->map.clear(); }
    // A copy sharing the rule but with a fresh, private cache.
    GaleRule fork_cache() const { return GaleRule(kind_, s_, impl_); }

    nlohmann::json describe() const;

private:
    struct Cache {
        std::unordered_map<BitWord, Rat> map;
    };

    GaleKind kind_;
    SExponent s_;
    std::shared_ptr<const Impl> impl_;
    std::shared_ptr<Cache> cache_;
};

// ---------------------------------------------------------------------------
// Validation and the fundamental inequalities. All checks are exact rational
// comparisons; violations are report content, not exceptions.

struct Violation {
    BitWord word;
    Rat budget;    // q * d(w)
    Rat children;  // d(w0) + d(w1)
    std::string what;
};

struct ValidationReport {
    GaleKind kind;
    std::size_t nodes_checked = 0;
    std::optional<Violation> first_violation;
    bool ok() const { return !first_violation.has_value(); }
};

// Checks the defining (in)equality at every w with |w| <= depth.
ValidationReport validate(const GaleRule& d, std::size_t depth);

struct KraftResult {
    Rat sum;     // sum over u in B of q^{-|u|} d(wu)
    Rat budget;  // d(w)
    bool bound_holds;
};

// Capital conservation over an antichain: the discounted mass below w never
// exceeds d(w).
KraftResult kraft_sum(const GaleRule& d, const BitWord& w, const PrefixSet& B);

struct ExceederReport {
    unsigned long count = 0;
    Rat limit;  // 2^l / alpha
    bool bound_holds = false;
    // First u in {0,1}^l (lexicographically) with d(wv) <= (q/2)^{|v|} d(w)
    // for every v prefixing u.
    std::optional<BitWord> witness;
};

// Counts u in {0,1}^l whose path above w has max (2/q)^{|v|} d(wv) > alpha*d(w);
// requires 1 <= q <= 2 and asserts count < 2^l/alpha.
ExceederReport count_exceeders(const GaleRule& d, const BitWord& w, unsigned l, const Rat& alpha);

// d(wu) <= q^{|u|} d(w), exactly.
bool slack_bound_check(const GaleRule& d, const BitWord& w, const BitWord& u);

// Maximum over all antichains below the root (words of length <= depth) of
// the discounted sum; computing the max verifies the Kraft bound against
// every antichain at once.
Rat max_antichain_kraft(const GaleRule& d, unsigned depth);

// ---------------------------------------------------------------------------
// Transformations.

// Pointwise weighted sum. All inputs must share q; the result is a gale iff
// every input is (a sum of supergales is a supergale).
GaleRule combine(const std::vector<GaleRule>& gales, const std::vector<Rat>& coeffs);

// From a martingale d (q = 2) to the s_new-rule w -> (q_new/2)^{|w|} d(w).
GaleRule dilate(const GaleRule& martingale, const SExponent& s_new);

// Exact supergale-to-gale conversion: same root, children rebalanced so the
// budget is split exactly; the result dominates the input pointwise.
GaleRule supergale_to_gale(const GaleRule& d);

// An approximate evaluator with guarantee |eval(r, w) - target(w)| <= 2^-r.
// No monotonicity in r is assumed.
struct ApproxEvaluator {
    std::function<Rat(unsigned r, const BitWord& w)> eval;
};

// Offset a = 1 + ceil(log2(q/(q-1))): the least integer with
// 2^(1-a) <= 1 - 1/q. Requires q > 1.
long exactify_offset(const SExponent& s);

// Builds the exact supergale w -> dhat(|w|+a, w) + 2^-|w| from an
// approximate evaluator of a genuine supergale. Requires q > 1 (for s = 0
// the success set is empty and no conversion is useful).
GaleRule exactify(const ApproxEvaluator& dhat, const SExponent& s);

// Truncated weighted-family evaluation: sum over k <= r+2|w|+1 of
// 2^-k d_k(w), guaranteed within 2^-r of the full series when every member
// is exact, shares q < 4 and has d_k(lambda) <= 1.
Rat union_gale_eval(const std::vector<GaleRule>& family, unsigned r, const BitWord& w);

// ---------------------------------------------------------------------------
// Table-backed rules (explicit values to a finite depth, extended beyond the
// table by the exact even split d(wb) = (q/2) d(w), which satisfies both
// kinds' conditions with equality).

GaleRule table_gale(GaleKind kind, const SExponent& s,
                    const std::vector<std::pair<BitWord, Rat>>& values, unsigned depth);

// Seeded random tables: the root capital is drawn from (0,1], then each
// node's budget q*d(w) is split by rational dice into d(w0) + d(w1) (+ slack
// for supergales). Reproducible across platforms for a fixed seed.
GaleRule random_supergale_table(const SExponent& s, unsigned depth, std::uint64_t seed);
GaleRule random_gale_table(const SExponent& s, unsigned depth, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Value traces.

struct TraceRow {
    std::size_t n;  // prefix length
    int bit;        // bit appended to reach this prefix; -1 on the root row
    Rat value;
    std::optional<RealInterval> log2_value;  // absent when value = 0
};

struct GaleValueTrace {
    std::vector<TraceRow> rows;
};

// Values of d along the length-`depth` prefix of the word supplied bit by
// bit; rows 0..depth.
GaleValueTrace trace_along(const GaleRule& d, const std::function<int(std::size_t)>& bits,
                           std::size_t depth, unsigned log_prec_bits = 24);

}  // namespace galedim
