#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace congest {

// Bit string with exact length accounting. Used for message payloads,
// player inputs and transcript serialization, where sizes are counted
// in bits, not bytes.
class BitString {
public:
    BitString() = default;

    static BitString zeros(std::size_t count) {
        BitString b;
        b.bits_.assign(count, false);
        return b;
    }

    // Little helper for literals in tests: "0110" -> bits 0,1,1,0.
    static BitString from_string(const std::string& s) {
        BitString b;
        b.bits_.reserve(s.size());
        for (char c : s) {
            if (c != '0' && c != '1') throw std::invalid_argument("BitString: expected 0/1");
            b.bits_.push_back(c == '1');
        }
        return b;
    }

    static BitString from_uint(std::uint64_t value, int width) {
        BitString b;
        b.append_uint(value, width);
        return b;
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    bool bit(std::size_t i) const { return bits_.at(i); }
    bool operator[](std::size_t i) const { return bits_[i]; }

    void push_back(bool v) { bits_.push_back(v); }

    void append(const BitString& other) {
        bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
    }

    // Appends `width` bits, most significant first.
    void append_uint(std::uint64_t value, int width) {
        if (width < 0 || width > 64) throw std::invalid_argument("BitString: bad width");
        if (width < 64 && (value >> width) != 0)
            throw std::invalid_argument("BitString: value does not fit width");
        for (int i = width - 1; i >= 0; --i) bits_.push_back((value >> i) & 1u);
    }

    std::uint64_t read_uint(std::size_t pos, int width) const {
        if (width < 0 || width > 64 || pos + static_cast<std::size_t>(width) > bits_.size())
            throw std::out_of_range("BitString: read past end");
        std::uint64_t v = 0;
        for (int i = 0; i < width; ++i) v = (v << 1) | (bits_[pos + i] ? 1u : 0u);
        return v;
    }

    BitString slice(std::size_t pos, std::size_t count) const {
        if (pos + count > bits_.size()) throw std::out_of_range("BitString: slice past end");
        BitString out;
        out.bits_.assign(bits_.begin() + pos, bits_.begin() + pos + count);
        return out;
    }

    std::size_t count_ones() const {
        std::size_t c = 0;
        for (bool b : bits_) c += b ? 1 : 0;
        return c;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(bits_.size());
        for (bool b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

    // Hex dump, most significant nibble first, padded to whole nibbles.
    // "." for the empty string so trace lines stay column-aligned.
    std::string to_hex() const {
        if (bits_.empty()) return ".";
        static const char* digits = "0123456789abcdef";
        std::string s;
        std::size_t i = 0;
        std::size_t lead = bits_.size() % 4;
        if (lead != 0) {
            unsigned v = 0;
            for (; i < lead; ++i) v = (v << 1) | (bits_[i] ? 1u : 0u);
            s.push_back(digits[v]);
        }
        for (; i < bits_.size(); i += 4) {
            unsigned v = 0;
            for (std::size_t j = 0; j < 4; ++j) v = (v << 1) | (bits_[i + j] ? 1u : 0u);
            s.push_back(digits[v]);
        }
        return s;
    }

    static BitString from_hex(const std::string& hex, std::size_t bitlen) {
        if (hex == "." && bitlen == 0) return BitString{};
        std::vector<bool> nibbles;
        nibbles.reserve(hex.size() * 4);
        for (char c : hex) {
            unsigned v;
            if (c >= '0' && c <= '9') v = static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f') v = static_cast<unsigned>(c - 'a') + 10;
            else if (c >= 'A' && c <= 'F') v = static_cast<unsigned>(c - 'A') + 10;
            else throw std::invalid_argument("BitString: bad hex digit");
            for (int j = 3; j >= 0; --j) nibbles.push_back((v >> j) & 1u);
        }
        if (nibbles.size() < bitlen) throw std::invalid_argument("BitString: hex shorter than bitlen");
        BitString out;
        out.bits_.assign(nibbles.end() - static_cast<std::ptrdiff_t>(bitlen), nibbles.end());
        return out;
    }

    bool operator==(const BitString& other) const = default;
    auto operator<=>(const BitString& other) const = default;

private:
    std::vector<bool> bits_;
};

// Sequential reader over a BitString.
class BitReader {
public:
    explicit BitReader(const BitString& bits) : bits_(&bits) {}

    std::uint64_t take_uint(int width) {
        std::uint64_t v = bits_->read_uint(pos_, width);
        pos_ += static_cast<std::size_t>(width);
        return v;
    }

    bool take_bit() { return take_uint(1) != 0; }

    BitString take_bits(std::size_t count) {
        BitString b = bits_->slice(pos_, count);
        pos_ += count;
        return b;
    }

    std::size_t remaining() const { return bits_->size() - pos_; }
    bool done() const { return pos_ == bits_->size(); }

private:
    const BitString* bits_;
    std::size_t pos_ = 0;
};

// ceil(log2(n)) for n >= 1; 0 for n = 1.
inline int ceil_log2(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("ceil_log2: n must be >= 1");
    int bits = 0;
    std::uint64_t v = 1;
    while (v < n) {
        v <<= 1;
        ++bits;
    }
    return bits;
}

// Deterministic 64-bit mix (splitmix64 finalizer); used to derive
// per-node seeds from a global seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace congest
