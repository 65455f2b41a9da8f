#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace galedim {

// Finite binary word. Bit 0 is the first (leftmost) bit; the empty word is
// valid. Bits are packed 64 per block with trailing bits kept zero, so
// equality and hashing can work block-wise.
class BitWord {
public:
    BitWord() = default;

    static BitWord from_string(std::string_view s) {
        BitWord w;
        w.blk_.reserve(s.size() / 64 + 1);
        for (char c : s) {
            if (c == '0')
                w.push_back(0);
            else if (c == '1')
                w.push_back(1);
            else
                throw std::invalid_argument("BitWord: expected only '0'/'1', got '" +
                                            std::string(1, c) + "'");
        }
        return w;
    }

    // The word of length n whose bits, first bit most significant, spell the
    // number `rank`. Enumerates {0,1}^n in lexicographic order as rank runs
    // over 0 .. 2^n-1. Requires n <= 63.
    static BitWord of_length(std::size_t n, std::uint64_t rank) {
        if (n > 63) throw std::invalid_argument("BitWord::of_length: n > 63");
        BitWord w;
        for (std::size_t i = 0; i < n; ++i)
            w.push_back(static_cast<int>((rank >> (n - 1 - i)) & 1u));
        return w;
    }

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    int bit(std::size_t i) const {
        return static_cast<int>((blk_[i >> 6] >> (i & 63)) & 1u);
    }

    void push_back(int b) {
        if ((len_ & 63) == 0) blk_.push_back(0);
        if (b) blk_[len_ >> 6] |= std::uint64_t{1} << (len_ & 63);
        ++len_;
    }

    void pop_back() {
        --len_;
        blk_[len_ >> 6] &= ~(std::uint64_t{1} << (len_ & 63));
        if ((len_ & 63) == 0) blk_.pop_back();
    }

    void truncate(std::size_t n) {
        while (len_ > n) pop_back();
    }

    void append(const BitWord& u) {
        for (std::size_t i = 0; i < u.size(); ++i) push_back(u.bit(i));
    }

    BitWord prefix(std::size_t n) const {
        BitWord w;
        for (std::size_t i = 0; i < n; ++i) w.push_back(bit(i));
        return w;
    }

    BitWord child(int b) const {
        BitWord w(*this);
        w.push_back(b);
        return w;
    }

    bool is_prefix_of(const BitWord& x) const {
        if (len_ > x.len_) return false;
        std::size_t full = len_ >> 6;
        for (std::size_t k = 0; k < full; ++k)
            if (blk_[k] != x.blk_[k]) return false;
        std::size_t rem = len_ & 63;
        if (rem) {
            std::uint64_t mask = (std::uint64_t{1} << rem) - 1;
            if ((blk_[full] & mask) != (x.blk_[full] & mask)) return false;
        }
        return true;
    }

    // Prefix test against x·b without materializing the extension.
    bool is_prefix_of_extended(const BitWord& x, int b) const {
        if (len_ <= x.len_) return is_prefix_of(x);
        if (len_ != x.len_ + 1) return false;
        return x.is_prefix_of(*this) && bit(len_ - 1) == b;
    }

    std::size_t ones() const {
        std::size_t c = 0;
        for (std::uint64_t blk : blk_) c += static_cast<std::size_t>(__builtin_popcountll(blk));
        return c;
    }

    bool operator==(const BitWord& o) const { return len_ == o.len_ && blk_ == o.blk_; }
    bool operator!=(const BitWord& o) const { return !(*this == o); }

    // Lexicographic order with 0 < 1; a proper prefix precedes its extensions.
    static int lex_compare(const BitWord& a, const BitWord& b) {
        std::size_t n = a.len_ < b.len_ ? a.len_ : b.len_;
        for (std::size_t i = 0; i < n; ++i) {
            int d = a.bit(i) - b.bit(i);
            if (d) return d;
        }
        if (a.len_ == b.len_) return 0;
        return a.len_ < b.len_ ? -1 : 1;
    }

    bool operator<(const BitWord& o) const { return lex_compare(*this, o) < 0; }

    std::string str() const {
        std::string s;
        s.reserve(len_);
        for (std::size_t i = 0; i < len_; ++i) s.push_back(bit(i) ? '1' : '0');
        return s;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t blk : blk_) {
            h ^= blk;
            h *= 1099511628211ull;
        }
        h ^= len_;
        h *= 1099511628211ull;
        return h;
    }

private:
    std::vector<std::uint64_t> blk_;
    std::size_t len_ = 0;
};

}  // namespace galedim

template <>
struct std::hash<galedim::BitWord> {
    std::size_t operator()(const galedim::BitWord& w) const noexcept {
        return static_cast<std::size_t>(w.hash());
    }
};
