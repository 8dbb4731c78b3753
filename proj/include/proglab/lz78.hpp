#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace proglab {

// One emitted codeword. Codeword j (1-based) references phrase index < j,
// with 0 the empty phrase. A stream may end with a codeword that names an
// existing phrase and carries an end flag instead of a symbol.
struct Codeword {
    std::uint32_t index = 0;
    std::uint8_t symbol = 0;
    bool has_symbol = true;
};

struct CodewordStream {
    std::vector<Codeword> codewords;
    std::uint64_t bit_length = 0;
};

// Greedy LZ78 parse over the alphabet {0,1}. Cost model: codeword j costs
// ceil(log2(j)) + 1 bits (index field plus symbol or end flag).
CodewordStream lz78_compress(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> lz78_decompress(const CodewordStream& stream);

struct CompressionReport {
    std::uint64_t raw_bits = 0;
    std::uint64_t compressed_bits = 0;
    double ratio = 0.0;  // compressed / raw, 0 for empty input
};

CompressionReport compression_ratio(std::span<const std::uint8_t> bits);

// Shannon entropy of the empirical distribution of overlapping k-blocks,
// in bits per symbol.
double block_entropy(std::span<const std::uint8_t> bits, std::uint32_t k);

} // namespace proglab
