#include "blocklie/bracket_word.hpp"

#include <sstream>
#include <stdexcept>

namespace blocklie {

BracketWord BracketWord::leaf(int label) {
    if (label < 3 || label % 2 == 0) throw std::invalid_argument("generator labels are odd and >= 3");
    BracketWord w;
    auto n = std::make_shared<Node>();
    n->label = label;
    w.node_ = std::move(n);
    return w;
}

BracketWord BracketWord::bracket(BracketWord left, BracketWord right) {
    BracketWord w;
    auto n = std::make_shared<Node>();
    n->left = std::make_shared<const BracketWord>(std::move(left));
    n->right = std::make_shared<const BracketWord>(std::move(right));
    w.node_ = std::move(n);
    return w;
}

BracketWord BracketWord::left_normed(const std::vector<int>& leaves) {
    if (leaves.empty()) throw std::invalid_argument("empty bracket word");
    BracketWord w = leaf(leaves[0]);
    for (size_t i = 1; i < leaves.size(); ++i) w = bracket(std::move(w), leaf(leaves[i]));
    return w;
}

int BracketWord::lie_degree() const {
    return is_leaf() ? 1 : left().lie_degree() + right().lie_degree();
}

int BracketWord::weight() const {
    return is_leaf() ? label() : left().weight() + right().weight();
}

std::vector<int> BracketWord::leaves() const {
    std::vector<int> out;
    if (is_leaf()) {
        out.push_back(label());
    } else {
        auto l = left().leaves();
        auto r = right().leaves();
        out.insert(out.end(), l.begin(), l.end());
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

std::string BracketWord::to_string() const {
    if (is_leaf()) return std::to_string(label());
    return "[" + left().to_string() + "," + right().to_string() + "]";
}

bool BracketWord::operator==(const BracketWord& o) const {
    if (is_leaf() != o.is_leaf()) return false;
    if (is_leaf()) return label() == o.label();
    return left() == o.left() && right() == o.right();
}

namespace {

BracketWord parse_at(const std::string& s, size_t& pos) {
    auto fail = [&](const char* msg) -> void {
        throw std::invalid_argument("bracket word parse error at position " + std::to_string(pos) +
                                    " in \"" + s + "\": " + msg);
    };
    if (pos >= s.size()) fail("unexpected end");
    if (s[pos] == '[') {
        ++pos;
        BracketWord l = parse_at(s, pos);
        if (pos >= s.size() || s[pos] != ',') fail("expected ','");
        ++pos;
        BracketWord r = parse_at(s, pos);
        if (pos >= s.size() || s[pos] != ']') fail("expected ']'");
        ++pos;
        return BracketWord::bracket(std::move(l), std::move(r));
    }
    if (!isdigit(static_cast<unsigned char>(s[pos]))) fail("expected digit or '['");
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    int label = std::stoi(s.substr(start, pos - start));
    if (label < 3 || label % 2 == 0) fail("generator labels are odd and >= 3");
    return BracketWord::leaf(label);
}

void tuples_rec(int remaining, int parts, int degree, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (int a = 3; a <= remaining - 3 * (parts - 1); a += 2) {
        // second position: never below the first (strictly above for degree 2)
        if (cur.size() == 1) {
            if (degree == 2 && a <= cur[0]) continue;
            if (degree >= 3 && a < cur[0]) continue;
        }
        cur.push_back(a);
        tuples_rec(remaining - a, parts - 1, degree, cur, out);
        cur.pop_back();
    }
}

} // namespace

BracketWord parse_bracket_word(const std::string& s) {
    size_t pos = 0;
    BracketWord w = parse_at(s, pos);
    if (pos != s.size())
        throw std::invalid_argument("bracket word parse error at position " + std::to_string(pos) +
                                    " in \"" + s + "\": trailing characters");
    return w;
}

std::vector<std::vector<int>> spanning_leaf_tuples(int weight, int degree) {
    std::vector<std::vector<int>> out;
    if (degree < 1 || weight < 3 * degree) return out;
    std::vector<int> cur;
    tuples_rec(weight, degree, degree, cur, out);
    return out;
}

} // namespace blocklie
