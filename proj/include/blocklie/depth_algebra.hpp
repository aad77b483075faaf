#pragma once

#include "blocklie/bracket_word.hpp"
#include "blocklie/poly.hpp"

#include <utility>
#include <vector>

namespace blocklie {

// Element of the polynomial model of the depth graded Lie algebra: a
// polynomial in z_0..z_r where r is the depth. Weight bookkeeping is
// total degree + depth, so the generator phi(k) has weight 2k+1.
struct DepthElem {
    int depth = 0;
    Poly poly;

    int weight() const { return poly.total_degree() + depth; }
};

// phi_{2k+1} = (z_0 - z_1)^{2k}, depth 1.
DepthElem phi(int k);

// The pre-Lie product whose antisymmetrization is the depth graded Ihara
// bracket: for f of depth r and g of depth s,
//
//   (f o g)(z_0..z_{r+s}) =  sum_{i=0}^{s} f(z_i,..,z_{i+r})
//                                * g(z_0,..,z_i, z_{i+r+1},..,z_{r+s})
//     + (-1)^{deg f + r} * sum_{i=1}^{s} f(z_{i+r},..,z_i)
//                                * g(z_0,..,z_{i-1}, z_{i+r},..,z_{r+s})
DepthElem circ(const DepthElem& f, const DepthElem& g);

// {f,g} = f o g - g o f. Antisymmetric; weight and depth are additive.
DepthElem dbracket(const DepthElem& f, const DepthElem& g);

// (reversal, cyclic): whether f(z_0..z_r) = (-1)^{r+1} f(z_r..z_0) and
// f(z_0..z_r) = f(z_1..z_r,z_0) hold exactly.
std::pair<bool, bool> dihedral_check(const DepthElem& f);

// Simplified bracket for depth-1 f against g satisfying both dihedral
// symmetries; identical in form to the reduced block bracket. Checks the
// precondition and that the result equals dbracket(f,g); a mismatch is
// an error because the agreement is itself part of the contract.
DepthElem dbracket_via_dihedral(const DepthElem& f, const DepthElem& g);

// Left-normed spanning set of the (weight, degree) component, each word
// evaluated through dbracket. Empty when no leaf tuple exists.
std::vector<std::pair<BracketWord, DepthElem>> sdg_span(int weight, int degree);

// Shared wraparound bracket form on raw polynomials:
//   out(z_0..z_n) = sum_{i=0}^{n} r(z_i, z_{i+1 mod n+1})
//                     * (q(omit z_{i+1 mod n+1}) - q(omit z_i))
// with r bivariate and q on n variables. Used by the reduced block and
// even algebras, and by dbracket_via_dihedral.
Poly wraparound_bracket(const Poly& r, const Poly& q);

} // namespace blocklie
