#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blocklie/words.hpp"

#include <random>

using namespace blocklie;

namespace {

Word W(std::initializer_list<int> letters) {
    Word w;
    for (int c : letters) w.letters.push_back(static_cast<uint8_t>(c));
    return w;
}

ZetaIndex Zl(int leading, std::initializer_list<int> entries) {
    ZetaIndex z;
    z.leading = leading;
    z.entries = entries;
    return z;
}

std::mt19937 rng(987654321);

Word random_word(int max_len) {
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w.letters.push_back(static_cast<uint8_t>(bit(rng)));
    return w;
}

} // namespace

TEST_CASE("block decomposition of the zeta(3) word") {
    // 0 w 1 = 01001 has one adjacent repeat, blocks 010|01
    CHECK(block_decompose(W({1, 0, 0})).lengths == std::vector<int>{3, 2});
    CHECK(block_degree(W({1, 0, 0})) == 1);
}

TEST_CASE("the zeta(2) word is a single alternating block") {
    CHECK(block_decompose(W({1, 0})).lengths == std::vector<int>{4});
    CHECK(block_degree(W({1, 0})) == 0);
}

TEST_CASE("the empty word decomposes as (2)") {
    CHECK(block_decompose(Word{}).lengths == std::vector<int>{2});
}

TEST_CASE("zeta({2}^k,6,{2}^{n-k}) words are homogeneous of block degree 4") {
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) {
            ZetaIndex z;
            z.entries.assign(k, 2);
            z.entries.push_back(6);
            z.entries.insert(z.entries.end(), n - k, 2);
            CHECK(block_degree(zeta_to_word(z).first) == 4);
        }
    }
}

TEST_CASE("blocks_to_word inverts block_decompose on the examples") {
    CHECK(blocks_to_word({{3, 2}}) == W({1, 0, 0}));
    CHECK(blocks_to_word({{2}}) == Word{});
}

TEST_CASE("invalid block tuples are rejected") {
    CHECK_FALSE(is_valid_block_tuple({{3, 3}}));   // reconstruction ends in 0
    CHECK_FALSE(is_valid_block_tuple({{1}}));      // too short
    CHECK_FALSE(is_valid_block_tuple({{2, 0}}));   // non-positive block
    CHECK_THROWS_AS(blocks_to_word({{3, 3}}), std::invalid_argument);
}

TEST_CASE("tuple (1, 2k_1+1, ..., 2k_{r-1}+1, 2k_r+2) is the almost-Hoffman word") {
    // I(0; 0,{1,0}^{k_1}, 0,{1,0}^{k_2}, ..., 0,{1,0}^{k_r}; 1)
    std::vector<std::vector<int>> ks = {{1}, {2}, {1, 2}, {2, 1, 3}};
    for (const auto& k : ks) {
        BlockTuple b;
        b.lengths.push_back(1);
        for (size_t i = 0; i + 1 < k.size(); ++i) b.lengths.push_back(2 * k[i] + 1);
        b.lengths.push_back(2 * k.back() + 2);
        Word expect;
        for (size_t i = 0; i < k.size(); ++i) {
            expect.letters.push_back(0);
            for (int j = 0; j < k[i]; ++j) {
                expect.letters.push_back(1);
                expect.letters.push_back(0);
            }
        }
        CHECK(blocks_to_word(b) == expect);
        CHECK(block_decompose(expect) == b);
    }
}

TEST_CASE("round trips between words and block tuples") {
    for (int trial = 0; trial < 1000; ++trial) {
        Word w = random_word(14);
        BlockTuple b = block_decompose(w);
        CHECK(blocks_to_word(b) == w);
        CHECK(is_valid_block_tuple(b));
        CHECK(block_degree(w) == b.block_degree());
        CHECK(b.weight() == w.weight());
    }
}

TEST_CASE("block degree equals the adjacent-equal count in 0w1") {
    for (int trial = 0; trial < 200; ++trial) {
        Word w = random_word(12);
        std::vector<uint8_t> e;
        e.push_back(0);
        e.insert(e.end(), w.letters.begin(), w.letters.end());
        e.push_back(1);
        int pairs = 0;
        for (size_t i = 1; i < e.size(); ++i) pairs += e[i] == e[i - 1];
        CHECK(block_degree(w) == pairs);
        CHECK(block_degree(w) == static_cast<int>(block_decompose(w).lengths.size()) - 1);
    }
}

TEST_CASE("zeta(3) converts to (100, -1)") {
    auto [w, sign] = zeta_to_word(Zl(0, {3}));
    CHECK(w == W({1, 0, 0}));
    CHECK(sign == -1);
}

TEST_CASE("zeta(2,6) converts to (10100000, +1)") {
    auto [w, sign] = zeta_to_word(Zl(0, {2, 6}));
    CHECK(w == W({1, 0, 1, 0, 0, 0, 0, 0}));
    CHECK(sign == 1);
}

TEST_CASE("zeta_1(2,2) converts to (01010, +1)") {
    auto [w, sign] = zeta_to_word(Zl(1, {2, 2}));
    CHECK(w == W({0, 1, 0, 1, 0}));
    CHECK(sign == 1);
}

TEST_CASE("word_to_zeta on 100 and 010") {
    auto [z1, s1] = word_to_zeta(W({1, 0, 0}));
    CHECK(z1 == Zl(0, {3}));
    CHECK(s1 == -1);
    auto [z2, s2] = word_to_zeta(W({0, 1, 0}));
    CHECK(z2 == Zl(1, {2}));
    CHECK(s2 == -1);
    CHECK_THROWS_AS(word_to_zeta(Word{}), std::invalid_argument);
}

TEST_CASE("zeta <-> word round trip on 1000 random words") {
    for (int trial = 0; trial < 1000; ++trial) {
        Word w = random_word(16);
        auto [z, sign] = word_to_zeta(w);
        auto [back, sign2] = zeta_to_word(z);
        CHECK(back == w);
        CHECK(sign == sign2);
        CHECK(z.weight() == w.weight());
        CHECK(z.depth() == w.depth());
    }
}

TEST_CASE("weight and depth bookkeeping through conversions") {
    ZetaIndex z = Zl(2, {1, 3, 7});
    CHECK(z.weight() == 13);
    CHECK(z.depth() == 3);
    auto [w, sign] = zeta_to_word(z);
    CHECK(w.weight() == 13);
    CHECK(w.depth() == 3);
    CHECK(block_decompose(w).weight() == 13);
}

TEST_CASE("text syntax round trips bit-exactly") {
    std::vector<std::string> cases = {"w:10010", "w:", "b:{1,3,8}", "z:{l=1;2,2}", "z:{3,5}",
                                      "z:{l=3;}"};
    CHECK(to_text(parse_word(cases[0])) == cases[0]);
    CHECK(to_text(parse_word(cases[1])) == cases[1]);
    CHECK(to_text(parse_block_tuple(cases[2])) == cases[2]);
    CHECK(to_text(parse_zeta(cases[3])) == cases[3]);
    CHECK(to_text(parse_zeta(cases[4])) == cases[4]);
    CHECK(to_text(parse_zeta(cases[5])) == cases[5]);

    CHECK_THROWS_AS(parse_word("w:102"), std::invalid_argument);
    CHECK_THROWS_AS(parse_zeta("z:{a}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_block_tuple("b:{}"), std::invalid_argument);
}

TEST_CASE("totally odd detection") {
    CHECK(Zl(0, {3, 5}).totally_odd());
    CHECK(Zl(0, {1, 1, 5, 1}).totally_odd());
    CHECK_FALSE(Zl(0, {2, 3}).totally_odd());
    CHECK_FALSE(Zl(1, {3, 5}).totally_odd());
    CHECK_FALSE(Zl(0, {}).totally_odd());
}
