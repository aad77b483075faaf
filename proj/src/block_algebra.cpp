#include "blocklie/block_algebra.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace blocklie {

namespace {

// a*(z_0+z_1)^{2k} + b*(z_0-z_1)^{2k}, divided by 2^{2k}
Poly even_binomial_mix(int k, const Int& a, const Int& b) {
    Poly p(2);
    const Rat scale = pow2(-2 * k);
    for (int j = 0; j <= 2 * k; ++j) {
        Int c = binomial(2 * k, j);
        Int alternating = b * c;
        if (j % 2 == 1) alternating = -alternating;
        Int coef = a * c + alternating;
        p.add_term({2 * k - j, j}, Rat(coef) * scale);
    }
    return p;
}

} // namespace

BlockElem p_gen(int k) {
    if (k < 1) throw std::invalid_argument("p_gen requires k >= 1");
    Int a;
    mpz_ui_pow_ui(a.get_mpz_t(), 2, static_cast<unsigned long>(2 * k + 1));
    a -= 1; // 2^{2k+1} - 1
    return {1, even_binomial_mix(k, a, Int(1))};
}

Poly s_gen(int k) {
    Poly z0z1diff(2);
    z0z1diff.add_term({2, 1}, Rat(1));
    z0z1diff.add_term({1, 2}, Rat(-1)); // z_0 z_1 (z_0 - z_1)
    return z0z1diff * p_gen(k).poly;
}

BlockElem e_gen(int k) {
    if (k < 1) throw std::invalid_argument("e_gen requires k >= 1");
    Poly p(2);
    for (int j = 0; j <= 2 * k; j += 2) p.add_term({2 * k - j, j}, Rat(2 * binomial(2 * k, j)));
    return {1, std::move(p)};
}

BlockElem bbracket(const BlockElem& r, const BlockElem& q) {
    if (r.bdeg != 1 || r.poly.nvars() != 2)
        throw std::invalid_argument("bbracket: left argument must be a block degree 1 bivariate");
    if (q.poly.nvars() != q.bdeg + 1)
        throw std::invalid_argument("bbracket: right argument variable count does not match block degree");
    return {r.bdeg + q.bdeg, wraparound_bracket(r.poly, q.poly)};
}

AlgebraKind parse_algebra(const std::string& name) {
    if (name == "depth") return AlgebraKind::depth;
    if (name == "block") return AlgebraKind::block;
    if (name == "even") return AlgebraKind::even;
    throw std::invalid_argument("unknown algebra \"" + name + "\" (expected depth, block or even)");
}

std::string algebra_name(AlgebraKind a) {
    switch (a) {
        case AlgebraKind::depth: return "depth";
        case AlgebraKind::block: return "block";
        case AlgebraKind::even: return "even";
    }
    throw std::logic_error("unreachable");
}

namespace {

Poly generator_poly(int label, AlgebraKind algebra) {
    const int k = (label - 1) / 2;
    switch (algebra) {
        case AlgebraKind::depth: return phi(k).poly;
        case AlgebraKind::block: return p_gen(k).poly;
        case AlgebraKind::even: return e_gen(k).poly;
    }
    throw std::logic_error("unreachable");
}

Poly eval_wrap(const BracketWord& w, AlgebraKind algebra) {
    if (w.is_leaf()) return generator_poly(w.label(), algebra);
    const BracketWord& u = w.left();
    const BracketWord& v = w.right();
    if (u.is_leaf()) return wraparound_bracket(generator_poly(u.label(), algebra), eval_wrap(v, algebra));
    if (v.is_leaf()) return -wraparound_bracket(generator_poly(v.label(), algebra), eval_wrap(u, algebra));
    // [u,[v1,v2]] = [[u,v1],v2] - [[u,v2],v1]
    BracketWord a = BracketWord::bracket(BracketWord::bracket(u, v.left()), v.right());
    BracketWord b = BracketWord::bracket(BracketWord::bracket(u, v.right()), v.left());
    return eval_wrap(a, algebra) - eval_wrap(b, algebra);
}

DepthElem eval_depth(const BracketWord& w) {
    if (w.is_leaf()) return phi((w.label() - 1) / 2);
    return dbracket(eval_depth(w.left()), eval_depth(w.right()));
}

} // namespace

Poly eval_bracket_word(const BracketWord& w, AlgebraKind algebra) {
    if (algebra == AlgebraKind::depth) return eval_depth(w).poly;
    return eval_wrap(w, algebra);
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    // grlex within one degree = plain lexicographic on exponent vectors
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    if (nvars <= 0) return out;
    rec(rec, 0, degree);
    return out;
}

GradedComponent graded_component(AlgebraKind algebra, int weight, int degree) {
    GradedComponent c;
    c.algebra = algebra;
    c.weight = weight;
    c.degree = degree;
    const int poly_degree = weight - degree;
    c.columns = monomials_of_degree(degree + 1, poly_degree);

    std::map<Monomial, int, GrlexLess> column_index;
    for (size_t j = 0; j < c.columns.size(); ++j) column_index.emplace(c.columns[j], static_cast<int>(j));

    auto tuples = spanning_leaf_tuples(weight, degree);
    c.matrix = QMatrix(static_cast<int>(tuples.size()), static_cast<int>(c.columns.size()));
    for (size_t i = 0; i < tuples.size(); ++i) {
        BracketWord w = BracketWord::left_normed(tuples[i]);
        Poly p = eval_bracket_word(w, algebra);
        for (const auto& [m, v] : p.terms()) c.matrix.set(static_cast<int>(i), column_index.at(m), v);
        c.words.push_back(std::move(w));
        c.polys.push_back(std::move(p));
    }
    return c;
}

const GradedComponent& graded_component_cached(AlgebraKind algebra, int weight, int degree) {
    static std::mutex mu;
    static std::map<std::tuple<AlgebraKind, int, int>, GradedComponent> store;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(algebra, weight, degree);
    auto it = store.find(key);
    if (it == store.end()) it = store.emplace(key, graded_component(algebra, weight, degree)).first;
    return it->second;
}

} // namespace blocklie
