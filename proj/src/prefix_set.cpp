#include "galedim/prefix_set.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace galedim {

PrefixSet::PrefixSet(std::vector<BitWord> words) : words_(std::move(words)) {
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    if (!is_antichain(words_)) throw std::invalid_argument("PrefixSet: not an antichain");
}

bool PrefixSet::is_antichain(const std::vector<BitWord>& words) {
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j)
            if (i != j && words[i].is_prefix_of(words[j]) && words[i].size() < words[j].size())
                return false;
    return true;
}

bool PrefixSet::contains(const BitWord& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

bool PrefixSet::covers(const BitWord& w) const {
    for (const BitWord& v : words_)
        if (v.is_prefix_of(w)) return true;
    return false;
}

bool PrefixSet::covers_extended(const BitWord& w, int b) const {
    for (const BitWord& v : words_)
        if (v.is_prefix_of_extended(w, b)) return true;
    return false;
}

namespace {

void grow(BitWord& cur, unsigned max_depth, unsigned min_word_len, std::mt19937_64& rng,
          std::vector<BitWord>& out) {
    if (cur.size() >= max_depth) {
        if ((rng() & 1u) && cur.size() >= min_word_len) out.push_back(cur);
        return;
    }
    std::uint64_t roll = rng() % 6;
    if (roll == 0 && cur.size() >= min_word_len) {
        out.push_back(cur);  // leaf here
        return;
    }
    if (roll == 1 && !cur.empty()) return;  // abandon this subtree
    for (int b = 0; b < 2; ++b) {
        cur.push_back(b);
        grow(cur, max_depth, min_word_len, rng, out);
        cur.pop_back();
    }
}

}  // namespace

PrefixSet random_antichain(unsigned max_depth, std::uint64_t seed, unsigned min_word_len) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<BitWord> words;
        BitWord cur;
        grow(cur, max_depth, min_word_len, rng, words);
        if (!words.empty()) return PrefixSet(std::move(words));
    }
    // Fall back to a singleton so callers always get a usable set.
    return PrefixSet({BitWord::of_length(std::min<unsigned>(max_depth, 63), 0)});
}

}  // namespace galedim
