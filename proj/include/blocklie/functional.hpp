#pragma once

#include "blocklie/block_algebra.hpp"
#include "blocklie/poly.hpp"
#include "blocklie/words.hpp"

#include <string>
#include <utility>
#include <vector>

namespace blocklie {

// Finite rational combination of monomial-coefficient extractors, the
// concrete form of the depth and block pairing functionals. Patterns
// with a negative entry are extractors of nonexistent monomials and are
// dropped at construction.
class Functional {
public:
    Functional() = default;
    explicit Functional(int arity) : arity_(arity) {}

    int arity() const { return arity_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    // Adds coeff * [z^pattern]^v; silently drops negative-entry patterns.
    void add_extractor(const std::vector<int>& pattern, const Rat& coeff);

    // Retains only the all-even patterns; eval(even_part(L), p) equals
    // eval(L, pi_even(p)) for every p.
    Functional even_part() const;

    bool operator==(const Functional&) const = default;

    std::string to_json() const;

private:
    int arity_ = 0;
    std::map<std::vector<int>, Rat> terms_;
};

// L^D of a signed combination of depth-r words: the word
// {0}^{k_0} 1 {0}^{k_1} ... 1 {0}^{k_r} contributes its coefficient on
// the extractor of z_0^{k_0}...z_r^{k_r}. All words must share one depth.
Functional depth_functional(const std::vector<std::pair<Rat, Word>>& combo);

// Same, with zeta-index inputs converted through zeta_to_word so each
// term picks up the sign (-1)^depth.
Functional depth_functional_zeta(const std::vector<std::pair<Rat, ZetaIndex>>& combo);

// L^B of a signed combination of block tuples: (l_0,...,l_r) contributes
//   extractor(l_0-2, l_1-1, ..., l_r-1) - extractor(l_0-1, ..., l_r-2),
// negative-entry patterns vanishing. All tuples must share one degree.
Functional block_functional(const std::vector<std::pair<Rat, BlockTuple>>& combo);

// Zeta inputs for the block side: converted to words (with sign), then
// block-decomposed.
Functional block_functional_zeta(const std::vector<std::pair<Rat, ZetaIndex>>& combo);

// Syntactic criterion: every retained pattern has all entries even.
// Equivalent to L = L o pi_e as functionals on all polynomials.
bool is_totally_even(const Functional& l);

Rat eval(const Functional& l, const Poly& p);

// True iff the two functionals agree on every enumerated bracket-word
// polynomial of the component. This is the working notion of functional
// equality; the component's dihedral symmetries identify syntactically
// distinct extractors.
bool equal_on_component(const Functional& a, const Functional& b, AlgebraKind algebra,
                        int weight, int degree);

// L = L o pi_e as functionals on the component: the weakest form of
// "totally even" the transfer theorem needs, reachable through the
// component's dihedral symmetries even when some raw patterns are odd.
bool totally_even_on_component(const Functional& l, AlgebraKind algebra, int weight, int degree);

} // namespace blocklie
