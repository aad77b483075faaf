#pragma once

#include <memory>
#include <string>
#include <vector>

namespace blocklie {

// Formal Lie monomial over abstract odd generators: a binary tree whose
// leaves are odd labels 2k+1 >= 3. Text syntax "[3,[5,7]]". Leaf count is
// the Lie degree, leaf-label sum the weight.
class BracketWord {
public:
    static BracketWord leaf(int label);
    static BracketWord bracket(BracketWord left, BracketWord right);
    // [[...[a_1,a_2],a_3],...,a_r]
    static BracketWord left_normed(const std::vector<int>& leaves);

    bool is_leaf() const { return node_->label != 0; }
    int label() const { return node_->label; }
    const BracketWord& left() const { return *node_->left; }
    const BracketWord& right() const { return *node_->right; }

    int lie_degree() const;
    int weight() const;
    std::vector<int> leaves() const;

    std::string to_string() const;

    bool operator==(const BracketWord& o) const;

private:
    struct Node {
        int label = 0; // nonzero = leaf
        std::shared_ptr<const BracketWord> left, right;
    };
    std::shared_ptr<const Node> node_;
};

BracketWord parse_bracket_word(const std::string& s);

// Leaf tuples of the left-normed spanning set for the (weight, degree)
// component: all tuples of odd labels >= 3 summing to the weight, in
// lexicographic order, subject to
//   degree 1: the single label,
//   degree 2: a_1 < a_2 (equal pairs are identically zero),
//   degree >= 3: a_1 <= a_2, the rest unconstrained.
// Left-normed words over these tuples span each component; linear
// independence is decided downstream by exact rank.
std::vector<std::vector<int>> spanning_leaf_tuples(int weight, int degree);

} // namespace blocklie
