#pragma once

#include "blocklie/functional.hpp"
#include "blocklie/words.hpp"

#include <string>
#include <utility>
#include <vector>

namespace blocklie {

using TupleCombo = std::vector<std::pair<Rat, BlockTuple>>;
using ZetaCombo = std::vector<std::pair<Rat, ZetaIndex>>;

// Zeta terms destined for the block side: converted through their word
// form (picking up the sign (-1)^depth) and block-decomposed.
TupleCombo block_side_from_zetas(const ZetaCombo& zetas);

// Machine-checkable record that a block-side and a depth-side
// combination define equal totally even functionals on the relevant
// graded components, hence satisfy R_B = 2^r R_D modulo products and
// terms of lower block degree.
struct RelationCertificate {
    bool verified = false;
    std::string status;          // "verified" or a failure description
    int lie_degree = 0;
    int weight = 0;
    Rat scale;                   // 2^r
    TupleCombo block_side;
    ZetaCombo depth_side;
    std::vector<std::string> bracket_words;
    std::vector<Rat> pairing_values; // per word: (R_B,xi) - 2^r (R_D,xi)
    std::string parity_note;     // strengthened drop to block degree r-2

    std::string to_json() const;
};

// Checks the transfer-theorem hypotheses exactly as its proof uses them:
// both functionals even on their own Lie-degree-r components, and equal
// on the even component. The certificate lists every bracket word used
// together with the pairing value of R_B - 2^r R_D against it.
RelationCertificate verify_relation(const TupleCombo& block_side, const ZetaCombo& depth_side,
                                    int lie_degree, int weight);

// Solves for a totally odd depth-r combination whose depth functional
// matches the given block functional on the even component. A
// no-solution outcome would falsify surjectivity at this cutoff and is
// reported as a hard error.
struct SynthesisResult {
    ZetaCombo depth_side;
    RelationCertificate certificate;
};
SynthesisResult synthesize_depth_side(const TupleCombo& block_side, int lie_degree, int weight);

// The totally odd -> almost-Hoffman dictionary:
//   zeta(2k_1+1,...,2k_r+1)
//     = (-1)^{k_1+...+k_r+r+1}/2^r * zeta_1({2}^{k_1-1},3,...,3,{2}^{k_r})
// modulo terms of lower block degree, with indices containing entries
// equal to 1 legalized by the formal reduction rules
//   (1) zeta_m({2}^{-1},3,{2}^n,...) -> zeta_{m+1}({2}^n,...)
//   (2) zeta_m(...,3+a,{2}^{-1},3+b,...) -> zeta_m(...,4+a+b,...).
struct HoffmanImage {
    ZetaIndex target;
    Rat scale;
    bool reduced = true;      // false when the rules could not legalize
    std::string note;         // description of any unreduced leftover
};
HoffmanImage odd_to_hoffman(const ZetaIndex& z);

// The (2,6,2) corollary family: for 0 <= 2a <= n, verifies
//   (-1)^{n+1} sum_{k=a}^{n-a} zeta({2}^k,6,{2}^{n-k})
//     = 16 zeta(1,1,2n-2a+3,2a+1)
// modulo products and block degree 3, through verify_relation at Lie
// degree 4.
RelationCertificate corollary_262(int n, int a);

// Every relation of the fixed regression corpus in one report.
struct RegressionReport {
    struct Item {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Item> items;
    bool all_pass() const;
};
RegressionReport regression_suite();

// Relation file payload for the CLI and tests.
struct RelationInput {
    TupleCombo block_side;
    ZetaCombo depth_side;
    int lie_degree = 0;
    int weight = 0;
};
RelationInput parse_relation_json(const std::string& text);

} // namespace blocklie
