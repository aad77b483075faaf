#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace blocklie {

// The interior word w of an iterated-integral symbol I(0; w; 1), letters
// in {0,1}. Weight is the length, depth the number of 1s. All block
// statistics are taken on the extended word 0·w·1.
struct Word {
    std::vector<uint8_t> letters;

    int weight() const { return static_cast<int>(letters.size()); }
    int depth() const;
    bool operator==(const Word&) const = default;
};

// Alternating-block lengths (l_0,...,l_r) of 0·w·1. Weight = sum - 2,
// block degree = r.
struct BlockTuple {
    std::vector<int> lengths;

    int block_degree() const { return static_cast<int>(lengths.size()) - 1; }
    int weight() const;
    bool operator==(const BlockTuple&) const = default;
};

// Zeta-style index: leading regularization subscript l plus entries
// (k_1,...,k_d). Entries equal to 1 are legal; everything here is a
// formal symbol, no period is ever evaluated.
struct ZetaIndex {
    int leading = 0;
    std::vector<int> entries;

    int depth() const { return static_cast<int>(entries.size()); }
    int weight() const;
    bool totally_odd() const;
    bool operator==(const ZetaIndex&) const = default;
};

// Unique minimal factorisation of 0·w·1 into maximal alternating runs.
BlockTuple block_decompose(const Word& w);

// Number of blocks minus one; equals the count of adjacent equal letters
// in 0·w·1.
int block_degree(const Word& w);

// Inverse of block_decompose. Rejects tuples whose reconstruction does
// not end in 1 (those do not encode an I(0;w;1) symbol) and tuples with
// total length < 2 or a non-positive block.
Word blocks_to_word(const BlockTuple& b);
bool is_valid_block_tuple(const BlockTuple& b);

// w = {0}^l, 1, {0}^{k_1-1}, ..., 1, {0}^{k_d-1}; sign = (-1)^d.
std::pair<Word, int> zeta_to_word(const ZetaIndex& z);

// Inverse of zeta_to_word; only the empty word is rejected.
std::pair<ZetaIndex, int> word_to_zeta(const Word& w);

// Text syntax used by the CLI and the JSON formats:
//   zeta index  "z:{l=1;2,2}"   (l= part omitted when zero: "z:{3,5}")
//   block tuple "b:{1,3,8}"
//   word        "w:10010"
// Round-trip parsing is bit-exact.
std::string to_text(const Word& w);
std::string to_text(const BlockTuple& b);
std::string to_text(const ZetaIndex& z);

Word parse_word(const std::string& s);
BlockTuple parse_block_tuple(const std::string& s);
ZetaIndex parse_zeta(const std::string& s);

} // namespace blocklie
