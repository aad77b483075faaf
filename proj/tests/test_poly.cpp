#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blocklie/poly.hpp"

#include <random>

using namespace blocklie;

namespace {

Poly Z(int nvars, int i) { return Poly::variable(nvars, i); }

std::mt19937 rng(20240817);

Poly random_poly(int nvars, int max_degree, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(0, max_degree);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    Poly p(nvars);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars);
        for (int i = 0; i < nvars; ++i) m[i] = expo(rng);
        p.add_term(m, ratio(num(rng), den(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("additive inverse gives the zero polynomial") {
    Poly sq = Z(2, 0) * Z(2, 0);
    CHECK((sq + (-sq)).is_zero());
    CHECK((sq + (-sq)).term_count() == 0);
}

TEST_CASE("(z0-z1)^2 + (z0+z1)^2 = 2 z0^2 + 2 z1^2") {
    Poly d = Z(2, 0) - Z(2, 1);
    Poly s = Z(2, 0) + Z(2, 1);
    Poly expect(2);
    expect.add_term({2, 0}, Rat(2));
    expect.add_term({0, 2}, Rat(2));
    CHECK(d * d + s * s == expect);
}

TEST_CASE("additive and multiplicative identities") {
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = random_poly(3, 4, 6);
        CHECK(p + Poly::zero(3) == p);
        CHECK(p * Poly::constant(3, Rat(1)) == p);
    }
}

TEST_CASE("difference of squares") {
    Poly prod = (Z(2, 0) - Z(2, 1)) * (Z(2, 0) + Z(2, 1));
    Poly expect(2);
    expect.add_term({2, 0}, Rat(1));
    expect.add_term({0, 2}, Rat(-1));
    CHECK(prod == expect);
}

TEST_CASE("variable count mismatch is rejected") {
    CHECK_THROWS_AS(Poly::zero(2) + Poly::zero(3), std::invalid_argument);
    CHECK_THROWS_AS(Poly::zero(2) * Poly::zero(3), std::invalid_argument);
    CHECK_THROWS_AS((void)Poly::zero(2).coeff({1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS((void)Poly::zero(2).substitute({Poly::zero(2)}), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials, exactly") {
    for (int trial = 0; trial < 60; ++trial) {
        Poly a = random_poly(2, 3, 5), b = random_poly(2, 3, 5), c = random_poly(2, 3, 5);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("substitution: swap is symmetric on z0 z1") {
    Poly p = Z(2, 0) * Z(2, 1);
    CHECK(p.substitute({Z(2, 1), Z(2, 0)}) == p);
}

TEST_CASE("substitution: (z0-z1)^2 with z0 -> -z0 gives (z0+z1)^2") {
    Poly d = Z(2, 0) - Z(2, 1);
    Poly s = Z(2, 0) + Z(2, 1);
    CHECK((d * d).substitute({-Z(2, 0), Z(2, 1)}) == s * s);
}

TEST_CASE("substitution by the identity list is the identity") {
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = random_poly(3, 4, 6);
        CHECK(p.substitute({Z(3, 0), Z(3, 1), Z(3, 2)}) == p);
    }
}

TEST_CASE("substitute respects composition") {
    // substitute(substitute(p, A), B) = substitute(p, A o B)
    std::vector<Poly> a = {Z(2, 0) + Z(2, 1), Z(2, 0) * Z(2, 1)};
    std::vector<Poly> b = {Z(2, 1), Z(2, 0) - Z(2, 1)};
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = random_poly(2, 3, 5);
        std::vector<Poly> ab = {a[0].substitute(b), a[1].substitute(b)};
        CHECK(p.substitute(a).substitute(b) == p.substitute(ab));
    }
}

TEST_CASE("coefficient extraction") {
    Poly p(2);
    p.add_term({2, 0}, Rat(2));
    p.add_term({1, 1}, Rat(3));
    p.add_term({0, 2}, Rat(2));
    CHECK(p.coeff({1, 1}) == Rat(3));
    CHECK(p.coeff({5, 5}) == Rat(0));
}

TEST_CASE("coeff((z0-z1)^8, (4,4)) = 70") {
    Poly d = Z(2, 0) - Z(2, 1);
    Poly p = Poly::constant(2, Rat(1));
    for (int i = 0; i < 8; ++i) p = p * d;
    CHECK(p.coeff({4, 4}) == Rat(70));
}

TEST_CASE("coeff is additive over the union of supports") {
    for (int trial = 0; trial < 20; ++trial) {
        Poly a = random_poly(2, 3, 5), b = random_poly(2, 3, 5);
        Poly sum = a + b;
        for (const auto& [m, v] : a.terms()) CHECK(sum.coeff(m) == a.coeff(m) + b.coeff(m));
        for (const auto& [m, v] : b.terms()) CHECK(sum.coeff(m) == a.coeff(m) + b.coeff(m));
    }
}

TEST_CASE("pi_even keeps exactly the all-even monomials") {
    Poly p = Z(2, 0) * Z(2, 1);
    CHECK(pi_even(p).is_zero());

    Poly q(2);
    q.add_term({2, 0}, Rat(2));
    q.add_term({1, 1}, Rat(3));
    q.add_term({0, 2}, Rat(2));
    Poly expect(2);
    expect.add_term({2, 0}, Rat(2));
    expect.add_term({0, 2}, Rat(2));
    CHECK(pi_even(q) == expect);
}

TEST_CASE("pi_even agrees with the sign-average formula and is an idempotent linear map") {
    for (int trial = 0; trial < 30; ++trial) {
        int nvars = 1 + trial % 3;
        Poly p = random_poly(nvars, 4, 8);

        // 1/2^{n+1}-style average over all sign flips (here n+1 = nvars)
        Poly avg(nvars);
        for (int mask = 0; mask < (1 << nvars); ++mask) {
            std::vector<bool> flip(nvars);
            for (int i = 0; i < nvars; ++i) flip[i] = (mask >> i) & 1;
            avg += p.flip_signs(flip);
        }
        avg = avg * ratio(1, 1 << nvars);
        CHECK(avg == pi_even(p));

        CHECK(pi_even(pi_even(p)) == pi_even(p));
        Poly q = random_poly(nvars, 4, 8);
        CHECK(pi_even(p + q) == pi_even(p) + pi_even(q));
    }
}

TEST_CASE("JSON round trip is exact and sorted by the fixed monomial order") {
    Poly p(2);
    p.add_term({2, 0}, ratio(Int("123456789123456789123456789"), Int(7)));
    p.add_term({1, 1}, Rat(-3));
    CHECK(poly_from_json(p.to_json()) == p);
    // grlex: (1,1) before (2,0)
    CHECK(p.to_json().find("[1,1]") < p.to_json().find("[2,0]"));
}
