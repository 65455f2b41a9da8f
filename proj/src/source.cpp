#include "galedim/source.hpp"

#include <fstream>
#include <stdexcept>
#include <vector>

namespace galedim {

namespace {

class PeriodicSource final : public Source {
public:
    explicit PeriodicSource(std::string pattern) : pattern_(std::move(pattern)) {
        if (pattern_.empty()) throw std::invalid_argument("periodic_source: empty pattern");
        for (char c : pattern_)
            if (c != '0' && c != '1')
                throw std::invalid_argument("periodic_source: pattern must be over {0,1}");
    }
    int bit(std::size_t n) const override { return pattern_[n % pattern_.size()] == '1'; }
    nlohmann::json describe() const override {
        return {{"rule", "periodic"}, {"params", {{"pattern", pattern_}}}};
    }

private:
    std::string pattern_;
};

class FileSource final : public Source {
public:
    explicit FileSource(std::string path) : path_(std::move(path)) {
        std::ifstream in(path_);
        if (!in) throw std::runtime_error("file_source: cannot open " + path_);
        char c;
        while (in.get(c)) {
            if (c == '0' || c == '1')
                bits_.push_back(c == '1');
            else if (c != ' ' && c != '\n' && c != '\r' && c != '\t')
                throw std::runtime_error("file_source: unexpected character in " + path_);
        }
    }
    int bit(std::size_t n) const override {
        if (n >= bits_.size())
            throw std::out_of_range("file_source: bit " + std::to_string(n) +
                                    " beyond file content (" + std::to_string(bits_.size()) +
                                    " bits)");
        return bits_[n];
    }
    nlohmann::json describe() const override {
        return {{"rule", "file"}, {"params", {{"path", path_}}}};
    }

private:
    std::string path_;
    std::vector<bool> bits_;
};

}  // namespace

SourcePtr periodic_source(std::string_view pattern) {
    return std::make_shared<PeriodicSource>(std::string(pattern));
}

SourcePtr file_source(const std::string& path) { return std::make_shared<FileSource>(path); }

}  // namespace galedim
