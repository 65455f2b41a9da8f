#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "json.hpp"

#include "galedim/bitword.hpp"

namespace galedim {

// An infinite binary sequence, pulled one bit at a time. Implementations may
// cache internally; bit(n) for the same n always returns the same value.
class Source {
public:
    virtual ~Source() = default;
    virtual int bit(std::size_t n) const = 0;
    virtual nlohmann::json describe() const = 0;

    BitWord prefix(std::size_t n) const {
        BitWord w;
        for (std::size_t i = 0; i < n; ++i) w.push_back(bit(i));
        return w;
    }
};

using SourcePtr = std::shared_ptr<const Source>;

// Repeats a nonempty '0'/'1' pattern forever.
SourcePtr periodic_source(std::string_view pattern);

// Reads '0'/'1' characters from a file (whitespace ignored); throws when a
// bit beyond the file's content is requested.
SourcePtr file_source(const std::string& path);

}  // namespace galedim
