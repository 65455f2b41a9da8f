#pragma once

#include <cstdint>
#include <vector>

#include "galedim/bitword.hpp"

namespace galedim {

// A finite antichain under the prefix order: no element is a proper prefix
// of another. Elements are kept sorted lexicographically and deduplicated.
class PrefixSet {
public:
    PrefixSet() = default;
    // Throws std::invalid_argument if the words do not form an antichain.
    explicit PrefixSet(std::vector<BitWord> words);

    static bool is_antichain(const std::vector<BitWord>& words);

    const std::vector<BitWord>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }

    bool contains(const BitWord& w) const;
    // Some element of the set is a prefix of w.
    bool covers(const BitWord& w) const;
    // Some element of the set is a prefix of w·b.
    bool covers_extended(const BitWord& w, int b) const;

private:
    std::vector<BitWord> words_;
};

// Seeded random antichain inside {0,1}^{<= max_depth}, never containing the
// empty word, possibly not covering the whole space. min_word_len pushes the
// leaves deeper (smaller Kraft mass).
PrefixSet random_antichain(unsigned max_depth, std::uint64_t seed, unsigned min_word_len = 1);

}  // namespace galedim
