#pragma once

#include "blocklie/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace blocklie {

// Exponent vector, dense, length = nvars of the owning polynomial. The
// workloads here never exceed ~8 variables, so dense beats a sparse map.
using Monomial = std::vector<int>;

// Graded lexicographic: total degree first, then lexicographic left to
// right. This is the one fixed order used for serialization and for
// column indexing in the linear algebra, so it must never change.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

int monomial_degree(const Monomial& m);

// Sparse multivariate polynomial over Rat in variables z_0..z_{nvars-1}.
// Invariants: no stored coefficient is zero, every exponent vector has
// length nvars. Equality is structural, which is well defined because
// the term map is kept canonical after every operation.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexLess>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, const Rat& c);
    static Poly variable(int nvars, int index);
    // c * z_0^{m[0]} ... (m must have length nvars)
    static Poly monomial(int nvars, const Monomial& m, const Rat& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Total degree of the highest term, -1 for the zero polynomial.
    int total_degree() const;
    // All terms share one total degree (vacuously true for zero).
    bool is_homogeneous() const;

    const Rat& coeff(const Monomial& m) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Exact composition p(images[0], ..., images[nvars-1]). All images
    // must share one variable count.
    Poly substitute(const std::vector<Poly>& images) const;

    // Relabels variable j as z_{idx[j]} in a polynomial on out_nvars
    // variables. Collisions add exponents, so idx need not be injective.
    Poly rename(std::span<const int> idx, int out_nvars) const;

    // Multiplies each term by (-1)^(sum of exponents at flipped indices),
    // i.e. substitutes z_i -> -z_i for flagged i.
    Poly flip_signs(const std::vector<bool>& flip) const;

    std::string to_string() const;   // human-readable, grlex term order
    std::string to_json() const;     // integers as decimal strings

    void add_term(const Monomial& m, const Rat& c);

private:
    int nvars_;
    TermMap terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

// Keeps exactly the monomials in which every variable appears with even
// exponent. Idempotent and linear; agrees with the 1/2^{n+1} sign-average
// over all sign flips (the averaged form is exercised in the tests).
Poly pi_even(const Poly& p);

Poly poly_from_json(const std::string& json);

} // namespace blocklie
