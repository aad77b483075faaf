#pragma once

#include "blocklie/bracket_word.hpp"
#include "blocklie/depth_algebra.hpp"
#include "blocklie/poly.hpp"
#include "blocklie/qmatrix.hpp"

#include <string>
#include <vector>

namespace blocklie {

// Element of the reduced block graded model: a polynomial in z_0..z_n
// where n is the block degree. Weight = total degree + block degree, so
// p_gen(k) has weight 2k+1 and weight is additive under the bracket.
// Division by z_0...z_n(z_0-z_n) never happens at runtime; the reduced
// model is generated directly from p_gen.
struct BlockElem {
    int bdeg = 0;
    Poly poly;

    int weight() const { return poly.total_degree() + bdeg; }
};

// p_{2k+1}(z_0,z_1) = ((2^{2k+1}-1)(z_0+z_1)^{2k} + (z_0-z_1)^{2k}) / 2^{2k}
BlockElem p_gen(int k);

// s_{2k+1} = z_0 z_1 (z_0-z_1) p_{2k+1}; the undivided block image of the
// generator, used only by the pairing oracle and tests.
Poly s_gen(int k);

// e_{2k+1} = pi_e(p_{2k+1}) = (z_0+z_1)^{2k} + (z_0-z_1)^{2k}
BlockElem e_gen(int k);

// Reduced block bracket: wraparound form, left argument bivariate. The
// full bracket on arbitrary pairs is obtained through left-normed
// evaluation plus antisymmetry, never by extending this formula.
BlockElem bbracket(const BlockElem& r, const BlockElem& q);

enum class AlgebraKind { depth, block, even };

AlgebraKind parse_algebra(const std::string& name);
std::string algebra_name(AlgebraKind a);

// Evaluates a bracket word with leaves phi / p / e and the matching
// bracket. Composite-right brackets reduce through antisymmetry and the
// Jacobi rewrite [u,[v,w]] = [[u,v],w] - [[u,w],v].
Poly eval_bracket_word(const BracketWord& w, AlgebraKind algebra);

// Spanning matrix of a graded component: one row per enumerated bracket
// word, one column per monomial of the component's total degree in the
// fixed graded-lex order. Deterministic row and column order.
struct GradedComponent {
    AlgebraKind algebra;
    int weight = 0;
    int degree = 0;
    std::vector<BracketWord> words;
    std::vector<Poly> polys;
    std::vector<Monomial> columns;
    QMatrix matrix;
};

GradedComponent graded_component(AlgebraKind algebra, int weight, int degree);

// Process-wide memo over graded_component; the returned reference stays
// valid for the life of the process. Thread-safe.
const GradedComponent& graded_component_cached(AlgebraKind algebra, int weight, int degree);

// All monomials of the given total degree on nvars variables, grlex
// order (the column index space of graded components).
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

} // namespace blocklie
