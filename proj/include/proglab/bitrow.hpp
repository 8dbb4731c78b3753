#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace proglab {

// A fixed-width row of bits packed into 64-bit words. Bit x of the row lives
// in word x/64 at position x%64; bits past the width are kept zero.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::uint32_t width)
        : width_(width), words_((width + 63) / 64, 0) {}

    static BitRow from_string(std::string_view s);

    std::uint32_t width() const { return width_; }
    std::size_t word_count() const { return words_.size(); }
    std::uint64_t word(std::size_t i) const { return words_[i]; }
    std::uint64_t& word(std::size_t i) { return words_[i]; }

    bool get(std::uint32_t x) const {
        return (words_[x >> 6] >> (x & 63)) & 1;
    }
    void set(std::uint32_t x, bool v) {
        if (v)
            words_[x >> 6] |= std::uint64_t{1} << (x & 63);
        else
            words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
    }

    std::uint32_t popcount() const;

    // out[x] = in[(x + d) mod width], any d.
    BitRow rotated(std::int64_t d) const;
    // out[x] = in[width - 1 - x].
    BitRow reversed() const;
    // All cells complemented.
    BitRow complemented() const;

    BitRow operator^(const BitRow& other) const;
    bool operator==(const BitRow& other) const = default;

    // Unpacked copy, one byte (0 or 1) per cell.
    std::vector<std::uint8_t> bits() const;
    void append_bits(std::vector<std::uint8_t>& out) const;
    std::string to_string() const;

    // Clear any bits above width; word-level code must call this after
    // writing whole words.
    void mask_tail();

private:
    std::uint32_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace proglab
