#include "blocklie/functional.hpp"

#include <json.hpp>

#include <stdexcept>

namespace blocklie {

void Functional::add_extractor(const std::vector<int>& pattern, const Rat& coeff) {
    if (static_cast<int>(pattern.size()) != arity_)
        throw std::invalid_argument("extractor pattern length does not match arity");
    for (int e : pattern)
        if (e < 0) return; // extractor of a nonexistent monomial
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(pattern, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Functional Functional::even_part() const {
    Functional out(arity_);
    for (const auto& [pattern, c] : terms_) {
        bool even = true;
        for (int e : pattern)
            if (e & 1) { even = false; break; }
        if (even) out.terms_.emplace(pattern, c);
    }
    return out;
}

std::string Functional::to_json() const {
    nlohmann::json j;
    j["arity"] = arity_;
    j["terms"] = nlohmann::json::array();
    for (const auto& [pattern, c] : terms_) {
        nlohmann::json t;
        t["pattern"] = pattern;
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        j["terms"].push_back(std::move(t));
    }
    return j.dump();
}

Functional depth_functional(const std::vector<std::pair<Rat, Word>>& combo) {
    if (combo.empty()) return Functional(0);
    const int r = combo.front().second.depth();
    Functional out(r + 1);
    for (const auto& [c, w] : combo) {
        if (w.depth() != r)
            throw std::invalid_argument("depth functional: mixed depths in combination");
        // zero-run read-off: {0}^{k_0} 1 {0}^{k_1} ... 1 {0}^{k_r}
        std::vector<int> pattern(r + 1, 0);
        int slot = 0;
        for (uint8_t letter : w.letters) {
            if (letter == 1)
                ++slot;
            else
                ++pattern[slot];
        }
        out.add_extractor(pattern, c);
    }
    return out;
}

Functional depth_functional_zeta(const std::vector<std::pair<Rat, ZetaIndex>>& combo) {
    std::vector<std::pair<Rat, Word>> words;
    words.reserve(combo.size());
    for (const auto& [c, z] : combo) {
        auto [w, sign] = zeta_to_word(z);
        words.emplace_back(c * sign, std::move(w));
    }
    return depth_functional(words);
}

Functional block_functional(const std::vector<std::pair<Rat, BlockTuple>>& combo) {
    if (combo.empty()) return Functional(0);
    const int r = combo.front().second.block_degree();
    Functional out(r + 1);
    for (const auto& [c, b] : combo) {
        if (b.block_degree() != r)
            throw std::invalid_argument("block functional: mixed block degrees in combination");
        std::vector<int> first(r + 1), second(r + 1);
        for (int i = 0; i <= r; ++i) {
            first[i] = b.lengths[i] - 1;
            second[i] = b.lengths[i] - 1;
        }
        first[0] -= 1;   // (l_0-2, l_1-1, ..., l_r-1)
        second[r] -= 1;  // (l_0-1, ..., l_{r-1}-1, l_r-2)
        out.add_extractor(first, c);
        out.add_extractor(second, -c);
    }
    return out;
}

Functional block_functional_zeta(const std::vector<std::pair<Rat, ZetaIndex>>& combo) {
    std::vector<std::pair<Rat, BlockTuple>> tuples;
    tuples.reserve(combo.size());
    for (const auto& [c, z] : combo) {
        auto [w, sign] = zeta_to_word(z);
        tuples.emplace_back(c * sign, block_decompose(w));
    }
    return block_functional(tuples);
}

bool is_totally_even(const Functional& l) {
    for (const auto& [pattern, c] : l.terms())
        for (int e : pattern)
            if (e & 1) return false;
    return true;
}

Rat eval(const Functional& l, const Poly& p) {
    if (l.arity() != p.nvars())
        throw std::invalid_argument("functional arity does not match polynomial variable count");
    Rat acc(0);
    for (const auto& [pattern, c] : l.terms()) acc += c * p.coeff(pattern);
    return acc;
}

bool equal_on_component(const Functional& a, const Functional& b, AlgebraKind algebra,
                        int weight, int degree) {
    if (a.arity() != degree + 1 || b.arity() != degree + 1)
        throw std::invalid_argument("functional arity does not match component degree");
    const GradedComponent& c = graded_component_cached(algebra, weight, degree);
    for (const Poly& p : c.polys)
        if (eval(a, p) != eval(b, p)) return false;
    return true;
}

bool totally_even_on_component(const Functional& l, AlgebraKind algebra, int weight, int degree) {
    if (l.arity() != degree + 1)
        throw std::invalid_argument("functional arity does not match component degree");
    Functional even = l.even_part();
    const GradedComponent& c = graded_component_cached(algebra, weight, degree);
    for (const Poly& p : c.polys)
        if (eval(l, p) != eval(even, p)) return false;
    return true;
}

} // namespace blocklie
