#include "proglab/lz78.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <unordered_map>

#include "proglab/error.hpp"

namespace proglab {

namespace {

// ceil(log2(j)) with ceil(log2(1)) = 0.
std::uint32_t index_bits(std::uint64_t j) {
    if (j <= 1) return 0;
    return 64 - std::countl_zero(j - 1);
}

struct TrieNode {
    std::uint32_t child[2] = {0, 0};  // 0 = absent (root never a child)
};

} // namespace

CodewordStream lz78_compress(std::span<const std::uint8_t> bits) {
    CodewordStream stream;
    std::vector<TrieNode> trie(1);  // node 0 = empty phrase
    std::uint32_t cur = 0;

    for (std::size_t i = 0; i < bits.size(); ++i) {
        const int b = bits[i] ? 1 : 0;
        const std::uint32_t next = trie[cur].child[b];
        if (next != 0) {
            cur = next;
            continue;
        }
        // New phrase: extend phrase `cur` by symbol b.
        const auto id = static_cast<std::uint32_t>(trie.size());
        trie.push_back(TrieNode{});
        trie[cur].child[b] = id;
        stream.codewords.push_back(
            {cur, static_cast<std::uint8_t>(b), true});
        stream.bit_length += index_bits(stream.codewords.size()) + 1;
        cur = 0;
    }
    if (cur != 0) {
        // Trailing input exactly matches an existing phrase.
        stream.codewords.push_back({cur, 0, false});
        stream.bit_length += index_bits(stream.codewords.size()) + 1;
    }
    return stream;
}

std::vector<std::uint8_t> lz78_decompress(const CodewordStream& stream) {
    // parent[j] / sym[j] reconstruct phrase j back to the root.
    std::vector<std::uint32_t> parent(1, 0);
    std::vector<std::uint8_t> sym(1, 0);
    std::vector<std::uint32_t> length(1, 0);
    std::vector<std::uint8_t> out;

    for (std::size_t j = 0; j < stream.codewords.size(); ++j) {
        const Codeword& cw = stream.codewords[j];
        if (cw.index >= parent.size())
            throw CorruptStreamError("codeword " + std::to_string(j + 1) +
                                     " references phrase " +
                                     std::to_string(cw.index) +
                                     " before it exists");
        if (!cw.has_symbol && j + 1 != stream.codewords.size())
            throw CorruptStreamError("end flag before the last codeword");

        const std::uint32_t len = length[cw.index] + (cw.has_symbol ? 1 : 0);
        const std::size_t base = out.size();
        out.resize(base + len);
        std::size_t pos = base + len;
        if (cw.has_symbol) out[--pos] = cw.symbol;
        for (std::uint32_t p = cw.index; p != 0; p = parent[p])
            out[--pos] = sym[p];

        if (cw.has_symbol) {
            parent.push_back(cw.index);
            sym.push_back(cw.symbol);
            length.push_back(len);
        }
    }
    return out;
}

CompressionReport compression_ratio(std::span<const std::uint8_t> bits) {
    CompressionReport report;
    report.raw_bits = bits.size();
    report.compressed_bits = lz78_compress(bits).bit_length;
    report.ratio = bits.empty()
                       ? 0.0
                       : static_cast<double>(report.compressed_bits) /
                             static_cast<double>(report.raw_bits);
    return report;
}

double block_entropy(std::span<const std::uint8_t> bits, std::uint32_t k) {
    if (k < 1) throw ValidationError("block size must be >= 1");
    if (k > bits.size())
        throw ValidationError("block size " + std::to_string(k) +
                              " exceeds input length " +
                              std::to_string(bits.size()));
    if (k > 60) throw ValidationError("block size too large");

    std::unordered_map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t block = 0;
    const std::uint64_t mask =
        (k == 60) ? ((std::uint64_t{1} << 60) - 1)
                  : ((std::uint64_t{1} << k) - 1);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        block = ((block << 1) | (bits[i] ? 1 : 0)) & mask;
        if (i + 1 >= k) ++counts[block];
    }
    const double total = static_cast<double>(bits.size() - k + 1);
    double entropy = 0.0;
    for (const auto& [value, count] : counts) {
        const double p = static_cast<double>(count) / total;
        entropy -= p * std::log2(p);
    }
    return entropy / k;
}

} // namespace proglab
