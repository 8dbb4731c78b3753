#include "proglab/bitrow.hpp"

#include <bit>

#include "proglab/error.hpp"

namespace proglab {

BitRow BitRow::from_string(std::string_view s) {
    BitRow row(static_cast<std::uint32_t>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            row.set(static_cast<std::uint32_t>(i), true);
        else if (s[i] != '0')
            throw ValidationError("bit string may contain only '0' and '1'");
    }
    return row;
}

std::uint32_t BitRow::popcount() const {
    std::uint32_t n = 0;
    for (auto w : words_) n += static_cast<std::uint32_t>(std::popcount(w));
    return n;
}

void BitRow::mask_tail() {
    const std::uint32_t rem = width_ & 63;
    if (rem != 0 && !words_.empty())
        words_.back() &= (std::uint64_t{1} << rem) - 1;
}

namespace {

// out[x] = in[x + k] for x < w - k, zero above. Shift toward lower indices.
BitRow shift_down(const BitRow& in, std::uint32_t k) {
    BitRow out(in.width());
    const std::size_t nw = in.word_count();
    const std::size_t q = k >> 6;
    const std::uint32_t s = k & 63;
    for (std::size_t i = 0; i + q < nw; ++i) {
        std::uint64_t w = in.word(i + q) >> s;
        if (s != 0 && i + q + 1 < nw) w |= in.word(i + q + 1) << (64 - s);
        out.word(i) = w;
    }
    out.mask_tail();
    return out;
}

// out[x] = in[x - k] for x >= k, zero below.
BitRow shift_up(const BitRow& in, std::uint32_t k) {
    BitRow out(in.width());
    const std::size_t nw = in.word_count();
    const std::size_t q = k >> 6;
    const std::uint32_t s = k & 63;
    for (std::size_t i = nw; i-- > q;) {
        std::uint64_t w = in.word(i - q) << s;
        if (s != 0 && i - q >= 1) w |= in.word(i - q - 1) >> (64 - s);
        out.word(i) = w;
    }
    out.mask_tail();
    return out;
}

} // namespace

BitRow BitRow::rotated(std::int64_t d) const {
    if (width_ == 0) return *this;
    const std::uint32_t k =
        static_cast<std::uint32_t>(((d % width_) + width_) % width_);
    if (k == 0) return *this;
    BitRow out = shift_down(*this, k);
    const BitRow high = shift_up(*this, width_ - k);
    for (std::size_t i = 0; i < words_.size(); ++i) out.word(i) |= high.word(i);
    out.mask_tail();
    return out;
}

BitRow BitRow::reversed() const {
    BitRow out(width_);
    for (std::uint32_t x = 0; x < width_; ++x)
        if (get(x)) out.set(width_ - 1 - x, true);
    return out;
}

BitRow BitRow::complemented() const {
    BitRow out(width_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.word(i) = ~words_[i];
    out.mask_tail();
    return out;
}

BitRow BitRow::operator^(const BitRow& other) const {
    if (width_ != other.width_)
        throw ValidationError("XOR of rows with different widths");
    BitRow out(width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        out.word(i) = words_[i] ^ other.words_[i];
    return out;
}

std::vector<std::uint8_t> BitRow::bits() const {
    std::vector<std::uint8_t> out;
    out.reserve(width_);
    append_bits(out);
    return out;
}

void BitRow::append_bits(std::vector<std::uint8_t>& out) const {
    for (std::uint32_t x = 0; x < width_; ++x)
        out.push_back(get(x) ? 1 : 0);
}

std::string BitRow::to_string() const {
    std::string s(width_, '0');
    for (std::uint32_t x = 0; x < width_; ++x)
        if (get(x)) s[x] = '1';
    return s;
}

} // namespace proglab
