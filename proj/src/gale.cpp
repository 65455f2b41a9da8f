#include "galedim/gale.hpp"

#include <algorithm>
#include <random>

namespace galedim {

const char* to_string(GaleKind k) { return k == GaleKind::gale ? "gale" : "supergale"; }

Rat GaleRule::eval(const BitWord& w) const {
    auto& memo = cache_->map;
    BitWord pfx;
    Rat v = impl_->root();
    for (std::size_t i = 0; i < w.size(); ++i) {
        int b = w.bit(i);
        pfx.push_back(b);
        auto it = memo.find(pfx);
        if (it != memo.end()) {
            v = it->second;
            continue;
        }
        pfx.pop_back();
        Rat cv = impl_->child(pfx, b, v);
        pfx.push_back(b);
        memo.emplace(pfx, cv);
        v = std::move(cv);
    }
    return v;
}

nlohmann::json GaleRule::describe() const {
    return {{"schema", "galedim-gale/1"},
            {"kind", to_string(kind_)},
            {"q", to_fraction(s_.q())},
            {"rule", impl_->rule_id()},
            {"params", impl_->params()}};
}

// ---------------------------------------------------------------------------

namespace {

void validate_rec(const GaleRule& d, BitWord& w, const Rat& value, std::size_t depth,
                  ValidationReport& rep) {
    if (rep.first_violation) return;
    if (value < 0) {
        rep.first_violation = Violation{w, Rat(0), Rat(0), "negative value"};
        return;
    }
    ++rep.nodes_checked;
    Rat c0 = d.child_value(w, 0, value);
    Rat c1 = d.child_value(w, 1, value);
    Rat budget = d.q() * value;
    Rat children = c0 + c1;
    bool ok = d.kind() == GaleKind::gale ? budget == children : budget >= children;
    if (!ok) {
        rep.first_violation =
            Violation{w, budget, children,
                      d.kind() == GaleKind::gale ? "q*d(w) != d(w0)+d(w1)"
                                                 : "q*d(w) < d(w0)+d(w1)"};
        return;
    }
    if (w.size() < depth) {
        for (int b = 0; b < 2; ++b) {
            w.push_back(b);
            validate_rec(d, w, b == 0 ? c0 : c1, depth, rep);
            w.pop_back();
            if (rep.first_violation) return;
        }
    }
}

}  // namespace

ValidationReport validate(const GaleRule& d, std::size_t depth) {
    ValidationReport rep;
    rep.kind = d.kind();
    BitWord w;
    Rat root = d.at_root();
    validate_rec(d, w, root, depth, rep);
    return rep;
}

KraftResult kraft_sum(const GaleRule& d, const BitWord& w, const PrefixSet& B) {
    KraftResult res;
    res.budget = d.eval(w);
    res.sum = 0;
    for (const BitWord& u : B.words()) {
        BitWord wu = w;
        wu.append(u);
        res.sum += rat_pow(d.q(), -static_cast<long>(u.size())) * d.eval(wu);
    }
    res.bound_holds = res.sum <= res.budget;
    return res;
}

namespace {

struct ExceederSearch {
    const GaleRule* d;
    Rat d0;            // d(w)
    Rat alpha_d0;      // alpha * d(w)
    Rat two_over_q;    // 2/q
    Rat q_over_two;    // q/2
    unsigned l;
    unsigned long count = 0;
    std::optional<BitWord> witness;

    // weight = (2/q)^{|v|}, cap = (q/2)^{|v|} d(w)
    void walk(BitWord& wv, std::size_t base_len, const Rat& value, const Rat& weight,
              const Rat& cap, bool exceeded, bool noninc) {
        bool exceeds_here = exceeded || (weight * value > alpha_d0);
        bool noninc_here = noninc && value <= cap;
        std::size_t depth_here = wv.size() - base_len;
        if (depth_here == l) {
            if (exceeds_here) ++count;
            if (noninc_here && !witness.has_value()) witness = wv;
            return;
        }
        for (int b = 0; b < 2; ++b) {
            Rat cv = d->child_value(wv, b, value);
            wv.push_back(b);
            walk(wv, base_len, cv, weight * two_over_q, cap * q_over_two, exceeds_here,
                 noninc_here);
            wv.pop_back();
        }
    }
};

}  // namespace

ExceederReport count_exceeders(const GaleRule& d, const BitWord& w, unsigned l,
                               const Rat& alpha) {
    if (d.q() < 1 || d.q() > 2)
        throw std::invalid_argument("count_exceeders: requires s in [0,1], i.e. 1 <= q <= 2");
    if (alpha <= 0) throw std::invalid_argument("count_exceeders: alpha must be positive");

    ExceederSearch s;
    s.d = &d;
    s.d0 = d.eval(w);
    s.alpha_d0 = alpha * s.d0;
    s.two_over_q = Rat(2) / d.q();
    s.q_over_two = d.q() / 2;
    s.l = l;

    BitWord wv = w;
    s.walk(wv, w.size(), s.d0, Rat(1), s.d0, false, true);

    ExceederReport rep;
    rep.count = s.count;
    rep.limit = pow2(static_cast<long>(l)) / alpha;
    rep.bound_holds = Rat(static_cast<unsigned long>(s.count)) < rep.limit;
    rep.witness = std::move(s.witness);
    if (rep.witness) {
        // strip the leading w, keep only u
        BitWord u;
        for (std::size_t i = w.size(); i < rep.witness->size(); ++i)
            u.push_back(rep.witness->bit(i));
        rep.witness = std::move(u);
    }
    return rep;
}

bool slack_bound_check(const GaleRule& d, const BitWord& w, const BitWord& u) {
    BitWord wu = w;
    wu.append(u);
    return d.eval(wu) <= rat_pow(d.q(), static_cast<long>(u.size())) * d.eval(w);
}

namespace {

// F(node) = max(q^{-|node|} d(node), F(node0) + F(node1)); the recursion
// ranges over every antichain below the root at once.
Rat kraft_max_rec(const GaleRule& d, BitWord& w, const Rat& value, const Rat& discount,
                  unsigned depth) {
    Rat own = discount * value;
    if (w.size() >= depth) return own;
    Rat split = 0;
    Rat child_discount = discount / d.q();
    for (int b = 0; b < 2; ++b) {
        Rat cv = d.child_value(w, b, value);
        w.push_back(b);
        split += kraft_max_rec(d, w, cv, child_discount, depth);
        w.pop_back();
    }
    return std::max(own, split);
}

}  // namespace

Rat max_antichain_kraft(const GaleRule& d, unsigned depth) {
    BitWord w;
    Rat root = d.at_root();
    // Exclude the trivial antichain {lambda} by starting the max from the
    // children split; including it would make the bound an equality check.
    Rat split = 0;
    for (int b = 0; b < 2; ++b) {
        Rat cv = d.child_value(w, b, root);
        w.push_back(b);
        split += kraft_max_rec(d, w, cv, Rat(1) / d.q(), depth);
        w.pop_back();
    }
    return split;
}

// ---------------------------------------------------------------------------

namespace {

class CombineImpl final : public GaleRule::Impl {
public:
    CombineImpl(std::vector<GaleRule> members, std::vector<Rat> coeffs)
        : members_(std::move(members)), coeffs_(std::move(coeffs)) {}

    Rat root() const override {
        Rat s = 0;
        for (std::size_t i = 0; i < members_.size(); ++i) s += coeffs_[i] * members_[i].at_root();
        return s;
    }

    Rat child(const BitWord& w, int bit, const Rat&) const override {
        BitWord wb = w.child(bit);
        Rat s = 0;
        for (std::size_t i = 0; i < members_.size(); ++i) s += coeffs_[i] * members_[i].eval(wb);
        return s;
    }

    std::string rule_id() const override { return "sum"; }

    nlohmann::json params() const override {
        nlohmann::json members = nlohmann::json::array();
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& m : members_) members.push_back(m.describe());
        for (const auto& c : coeffs_) coeffs.push_back(to_fraction(c));
        return {{"members", members}, {"coeffs", coeffs}};
    }

private:
    std::vector<GaleRule> members_;
    std::vector<Rat> coeffs_;
};

}  // namespace

GaleRule combine(const std::vector<GaleRule>& gales, const std::vector<Rat>& coeffs) {
    if (gales.empty()) throw std::invalid_argument("combine: empty family");
    if (gales.size() != coeffs.size())
        throw std::invalid_argument("combine: coefficient count mismatch");
    const Rat& q = gales.front().q();
    GaleKind kind = GaleKind::gale;
    for (const auto& g : gales) {
        if (g.q() != q) throw std::invalid_argument("combine: members must share q");
        if (g.kind() != GaleKind::gale) kind = GaleKind::supergale;
    }
    for (const auto& c : coeffs)
        if (c < 0) throw std::invalid_argument("combine: coefficients must be nonnegative");
    return GaleRule(kind, gales.front().sexp(),
                    std::make_shared<CombineImpl>(gales, coeffs));
}

namespace {

class DilateImpl final : public GaleRule::Impl {
public:
    DilateImpl(GaleRule inner, Rat q_new) : inner_(std::move(inner)), q_new_(std::move(q_new)) {}

    Rat root() const override { return inner_.at_root(); }

    Rat child(const BitWord& w, int bit, const Rat& v) const override {
        // (q_new/2)^{|wb|} d(wb); incremental when the parent is nonzero.
        BitWord wb = w.child(bit);
        Rat inner_wb = inner_.eval(wb);
        if (inner_wb == 0) return Rat(0);
        if (v != 0) {
            Rat inner_w = inner_.eval(w);
            return v * (q_new_ / 2) * inner_wb / inner_w;
        }
        return rat_pow(q_new_ / 2, static_cast<long>(wb.size())) * inner_wb;
    }

    std::string rule_id() const override { return "dilate"; }
    nlohmann::json params() const override {
        return {{"q_new", to_fraction(q_new_)}, {"inner", inner_.describe()}};
    }

private:
    GaleRule inner_;
    Rat q_new_;
};

}  // namespace

GaleRule dilate(const GaleRule& martingale, const SExponent& s_new) {
    if (martingale.q() != 2)
        throw std::invalid_argument("dilate: input must be a martingale (q = 2)");
    if (martingale.kind() != GaleKind::gale)
        throw std::invalid_argument("dilate: input must be an exact martingale");
    return GaleRule(GaleKind::gale, s_new,
                    std::make_shared<DilateImpl>(martingale, s_new.q()));
}

namespace {

class SupergaleToGaleImpl final : public GaleRule::Impl {
public:
    explicit SupergaleToGaleImpl(GaleRule inner) : inner_(std::move(inner)) {}

    Rat root() const override { return inner_.at_root(); }

    Rat child(const BitWord& w, int bit, const Rat& v) const override {
        // Children split the exact budget q*v, shifted by the inner rule's
        // child imbalance.
        Rat i0 = inner_.eval(w.child(0));
        Rat i1 = inner_.eval(w.child(1));
        Rat delta = bit == 0 ? i0 - i1 : i1 - i0;
        Rat out = (inner_.q() * v + delta) / 2;
        if (out < 0)
            throw GaleContractError(
                "supergale_to_gale: negative value at '" + w.child(bit).str() +
                "'; the input violates its supergale contract");
        return out;
    }

    std::string rule_id() const override { return "exact-gale-of"; }
    nlohmann::json params() const override { return {{"inner", inner_.describe()}}; }

private:
    GaleRule inner_;
};

}  // namespace

GaleRule supergale_to_gale(const GaleRule& d) {
    return GaleRule(GaleKind::gale, d.sexp(), std::make_shared<SupergaleToGaleImpl>(d));
}

long exactify_offset(const SExponent& s) {
    const Rat& q = s.q();
    if (q <= 1) throw std::invalid_argument("exactify: requires s > 0 (q > 1)");
    Rat gap = 1 - Rat(1) / q;  // 1 - 2^-s
    long k = 0;                // least k with 2^-k <= gap
    while (pow2(-k) > gap) ++k;
    return 1 + k;
}

namespace {

class ExactifyImpl final : public GaleRule::Impl {
public:
    ExactifyImpl(ApproxEvaluator dhat, long a) : dhat_(std::move(dhat)), a_(a) {}

    Rat root() const override {
        BitWord lambda;
        return value_at(lambda);
    }

    Rat child(const BitWord& w, int bit, const Rat&) const override {
        BitWord wb = w.child(bit);
        return value_at(wb);
    }

    std::string rule_id() const override { return "exactified"; }
    nlohmann::json params() const override { return {{"offset_a", a_}}; }

private:
    Rat value_at(const BitWord& w) const {
        long n = static_cast<long>(w.size());
        Rat v = dhat_.eval(static_cast<unsigned>(n + a_), w) + pow2(-n);
        if (v < 0)
            throw GaleContractError("exactify: approximate evaluator broke its error guarantee");
        return v;
    }

    ApproxEvaluator dhat_;
    long a_;
};

}  // namespace

GaleRule exactify(const ApproxEvaluator& dhat, const SExponent& s) {
    long a = exactify_offset(s);
    return GaleRule(GaleKind::supergale, s, std::make_shared<ExactifyImpl>(dhat, a));
}

Rat union_gale_eval(const std::vector<GaleRule>& family, unsigned r, const BitWord& w) {
    if (family.empty()) throw std::invalid_argument("union_gale_eval: empty family");
    const Rat& q = family.front().q();
    if (q >= 4) throw std::invalid_argument("union_gale_eval: requires s < 2 (q < 4)");
    for (const auto& d : family) {
        if (d.q() != q) throw std::invalid_argument("union_gale_eval: members must share q");
        if (d.at_root() > 1)
            throw std::invalid_argument("union_gale_eval: requires d_k(lambda) <= 1");
    }
    std::size_t cutoff = static_cast<std::size_t>(r) + 2 * w.size() + 1;
    std::size_t last = std::min(cutoff, family.size() - 1);
    Rat sum = 0;
    for (std::size_t k = 0; k <= last; ++k)
        sum += pow2(-static_cast<long>(k)) * family[k].eval(w);
    return sum;
}

// ---------------------------------------------------------------------------

namespace {

class TableImpl final : public GaleRule::Impl {
public:
    TableImpl(Rat q, std::unordered_map<BitWord, Rat> values, unsigned depth,
              nlohmann::json params)
        : q_(std::move(q)), values_(std::move(values)), depth_(depth), params_(std::move(params)) {}

    Rat root() const override {
        auto it = values_.find(BitWord{});
        return it == values_.end() ? Rat(1) : it->second;
    }

    Rat child(const BitWord& w, int bit, const Rat& v) const override {
        if (w.size() + 1 <= depth_) {
            auto it = values_.find(w.child(bit));
            if (it != values_.end()) return it->second;
        }
        return v * q_ / 2;  // canonical even-split continuation
    }

    std::string rule_id() const override { return "table"; }
    nlohmann::json params() const override { return params_; }

private:
    Rat q_;
    std::unordered_map<BitWord, Rat> values_;
    unsigned depth_;
    nlohmann::json params_;
};

nlohmann::json table_params(const std::unordered_map<BitWord, Rat>& values, unsigned depth) {
    // Deterministic ordering for round-trips.
    std::vector<const BitWord*> keys;
    keys.reserve(values.size());
    for (const auto& [k, v] : values) keys.push_back(&k);
    std::sort(keys.begin(), keys.end(), [](const BitWord* a, const BitWord* b) {
        if (a->size() != b->size()) return a->size() < b->size();
        return BitWord::lex_compare(*a, *b) < 0;
    });
    nlohmann::json vals = nlohmann::json::object();
    for (const BitWord* k : keys) vals[k->str()] = to_fraction(values.at(*k));
    return {{"depth", depth}, {"values", vals}};
}

}  // namespace

GaleRule table_gale(GaleKind kind, const SExponent& s,
                    const std::vector<std::pair<BitWord, Rat>>& values, unsigned depth) {
    std::unordered_map<BitWord, Rat> map;
    for (const auto& [w, v] : values) {
        if (w.size() > depth) throw std::invalid_argument("table_gale: word beyond stated depth");
        if (v < 0) throw std::invalid_argument("table_gale: negative value");
        map[w] = v;
    }
    auto params = table_params(map, depth);
    return GaleRule(kind, s, std::make_shared<TableImpl>(s.q(), std::move(map), depth, params));
}

namespace {

Rat dice_fraction(std::mt19937_64& rng) {
    // k/4096 with k in [0, 4096]
    return Rat(static_cast<unsigned long>(rng() % 4097), 4096ul);
}

GaleRule random_table(GaleKind kind, const SExponent& s, unsigned depth, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::unordered_map<BitWord, Rat> map;
    // root capital in (0, 1]
    map[BitWord{}] = Rat(static_cast<unsigned long>(rng() % 4096) + 1, 4096ul);

    std::vector<BitWord> frontier{BitWord{}};
    for (unsigned lvl = 0; lvl < depth; ++lvl) {
        std::vector<BitWord> next;
        next.reserve(frontier.size() * 2);
        for (const BitWord& w : frontier) {
            Rat budget = s.q() * map.at(w);
            Rat f0, f1;
            if (kind == GaleKind::gale) {
                f0 = dice_fraction(rng);
                f1 = 1 - f0;
            } else {
                // three nonnegative weights; the third is discarded capital
                unsigned long a = rng() % 4096 + 1, b = rng() % 4096 + 1, c = rng() % 4096;
                Rat total(a + b + c);
                f0 = Rat(a) / total;
                f1 = Rat(b) / total;
            }
            for (int bit = 0; bit < 2; ++bit) {
                BitWord wb = w.child(bit);
                map[wb] = budget * (bit == 0 ? f0 : f1);
                next.push_back(std::move(wb));
            }
        }
        frontier = std::move(next);
    }

    nlohmann::json params = {{"depth", depth}, {"seed", seed}};
    return GaleRule(kind, s,
                    std::make_shared<TableImpl>(s.q(), std::move(map), depth, std::move(params)));
}

}  // namespace

GaleRule random_supergale_table(const SExponent& s, unsigned depth, std::uint64_t seed) {
    return random_table(GaleKind::supergale, s, depth, seed);
}

GaleRule random_gale_table(const SExponent& s, unsigned depth, std::uint64_t seed) {
    return random_table(GaleKind::gale, s, depth, seed);
}

// ---------------------------------------------------------------------------

GaleValueTrace trace_along(const GaleRule& d, const std::function<int(std::size_t)>& bits,
                           std::size_t depth, unsigned log_prec_bits) {
    GaleValueTrace tr;
    tr.rows.reserve(depth + 1);
    BitWord w;
    Rat v = d.at_root();
    auto push_row = [&](std::size_t n, int bit, const Rat& value) {
        TraceRow row{n, bit, value, std::nullopt};
        if (value > 0) row.log2_value = log2_interval(value, log_prec_bits);
        tr.rows.push_back(std::move(row));
    };
    push_row(0, -1, v);
    for (std::size_t n = 0; n < depth; ++n) {
        int b = bits(n);
        Rat cv = d.child_value(w, b, v);
        w.push_back(b);
        v = std::move(cv);
        push_row(n + 1, b, v);
    }
    return tr;
}

}  // namespace galedim
