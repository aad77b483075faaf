#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blocklie/depth_algebra.hpp"

#include <map>
#include <random>

using namespace blocklie;

namespace {

std::mt19937 rng(431);

// Homogeneous random depth elements of even polynomial degree; the depth
// graded bracket is only ever used on such elements.
DepthElem random_elem(int depth, int degree) {
    std::uniform_int_distribution<int> num(-4, 4);
    Poly p(depth + 1);
    Monomial m(depth + 1, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == depth) {
            m[pos] = remaining;
            p.add_term(m, Rat(num(rng)));
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            m[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, degree);
    return {depth, std::move(p)};
}

// Independent direct-summation oracle for the pre-Lie product: expands
// every pair of terms by hand with plain exponent maps, never calling
// the production rename/mul path.
DepthElem circ_oracle(const DepthElem& f, const DepthElem& g) {
    const int r = f.depth, s = g.depth;
    const int n = r + s + 1;
    std::map<std::vector<int>, Rat> acc;

    auto emit = [&](const std::vector<int>& fidx, const std::vector<int>& gidx, const Rat& sign) {
        for (const auto& [fm, fc] : f.poly.terms()) {
            for (const auto& [gm, gc] : g.poly.terms()) {
                std::vector<int> m(n, 0);
                for (int j = 0; j <= r; ++j) m[fidx[j]] += fm[j];
                for (int j = 0; j <= s; ++j) m[gidx[j]] += gm[j];
                acc[m] += sign * fc * gc;
            }
        }
    };

    const Rat plus(1);
    const Rat flip((f.poly.total_degree() + r) % 2 == 0 ? 1 : -1);
    for (int i = 0; i <= s; ++i) {
        std::vector<int> fidx, gidx;
        for (int j = 0; j <= r; ++j) fidx.push_back(i + j);
        for (int j = 0; j <= i; ++j) gidx.push_back(j);
        for (int j = i + r + 1; j <= r + s; ++j) gidx.push_back(j);
        emit(fidx, gidx, plus);
    }
    for (int i = 1; i <= s; ++i) {
        std::vector<int> fidx, gidx;
        for (int j = 0; j <= r; ++j) fidx.push_back(i + r - j);
        for (int j = 0; j < i; ++j) gidx.push_back(j);
        for (int j = i + r; j <= r + s; ++j) gidx.push_back(j);
        emit(fidx, gidx, flip);
    }

    Poly out(n);
    for (const auto& [m, c] : acc) out.add_term(m, c);
    return {r + s, std::move(out)};
}

} // namespace

TEST_CASE("phi(1) = z0^2 - 2 z0 z1 + z1^2") {
    Poly expect(2);
    expect.add_term({2, 0}, Rat(1));
    expect.add_term({1, 1}, Rat(-2));
    expect.add_term({0, 2}, Rat(1));
    CHECK(phi(1).poly == expect);
    CHECK(phi(1).depth == 1);
    CHECK(phi(1).weight() == 3);
}

TEST_CASE("phi(2) is the 5-term binomial expansion of (z0-z1)^4") {
    Poly expect(2);
    expect.add_term({4, 0}, Rat(1));
    expect.add_term({3, 1}, Rat(-4));
    expect.add_term({2, 2}, Rat(6));
    expect.add_term({1, 3}, Rat(-4));
    expect.add_term({0, 4}, Rat(1));
    CHECK(phi(2).poly == expect);
    CHECK(phi(2).poly.term_count() == 5);
}

TEST_CASE("phi(k) is symmetric under swapping its variables; phi(0) rejected") {
    for (int k = 1; k <= 5; ++k) {
        std::vector<int> swap_idx = {1, 0};
        CHECK(phi(k).poly.rename(swap_idx, 2) == phi(k).poly);
    }
    CHECK_THROWS_AS(phi(0), std::invalid_argument);
}

TEST_CASE("circ agrees with the independent direct-summation oracle") {
    CHECK(circ(phi(1), phi(2)).poly == circ_oracle(phi(1), phi(2)).poly);
    CHECK(circ(phi(2), phi(1)).poly == circ_oracle(phi(2), phi(1)).poly);
    DepthElem b35 = dbracket(phi(1), phi(2));
    CHECK(circ(phi(1), b35).poly == circ_oracle(phi(1), b35).poly);
    CHECK(circ(b35, phi(1)).poly == circ_oracle(b35, phi(1)).poly);
    for (int trial = 0; trial < 10; ++trial) {
        DepthElem f = random_elem(1 + trial % 2, 2);
        DepthElem g = random_elem(1 + (trial / 2) % 3, 4);
        CHECK(circ(f, g).poly == circ_oracle(f, g).poly);
    }
}

TEST_CASE("circ respects homogeneity: degree and depth add") {
    DepthElem c = circ(phi(1), phi(2));
    CHECK(c.depth == 2);
    CHECK(c.poly.is_homogeneous());
    CHECK(c.poly.total_degree() == 2 + 4);
}

TEST_CASE("dbracket(phi_3, phi_3) = 0") {
    CHECK(dbracket(phi(1), phi(1)).poly.is_zero());
}

TEST_CASE("weight 12 cusp relation: {phi_3,phi_9} - 3 {phi_5,phi_7} = 0") {
    Poly lhs = dbracket(phi(1), phi(4)).poly - Rat(3) * dbracket(phi(2), phi(3)).poly;
    CHECK(lhs.is_zero());
}

TEST_CASE("dbracket(phi_3, phi_5) is nonzero of even total degree 6") {
    DepthElem b = dbracket(phi(1), phi(2));
    CHECK_FALSE(b.poly.is_zero());
    CHECK(b.poly.total_degree() == 6);
    CHECK(b.depth == 2);
    CHECK(b.weight() == 8);
}

TEST_CASE("antisymmetry of dbracket on random pairs") {
    for (int trial = 0; trial < 40; ++trial) {
        DepthElem f = random_elem(1 + trial % 2, 2);
        DepthElem g = random_elem(1 + (trial / 2) % 2, 4);
        CHECK(dbracket(f, g).poly == -dbracket(g, f).poly);
    }
}

TEST_CASE("Jacobi identity on sampled triples") {
    auto jacobi = [](const DepthElem& a, const DepthElem& b, const DepthElem& c) {
        Poly sum = dbracket(a, dbracket(b, c)).poly;
        sum += dbracket(b, dbracket(c, a)).poly;
        sum += dbracket(c, dbracket(a, b)).poly;
        return sum;
    };
    CHECK(jacobi(phi(1), phi(2), phi(3)).is_zero());
    CHECK(jacobi(phi(1), phi(1), phi(4)).is_zero());
    for (int trial = 0; trial < 25; ++trial) {
        DepthElem a = random_elem(1, 2);
        DepthElem b = random_elem(1 + trial % 2, 2);
        DepthElem c = random_elem(1, 4);
        CHECK(jacobi(a, b, c).is_zero());
    }
}

TEST_CASE("dihedral symmetries of the generators and their brackets") {
    for (int k = 1; k <= 4; ++k) {
        auto [rev, cyc] = dihedral_check(phi(k));
        CHECK(rev);
        CHECK(cyc);
    }
    auto [rev, cyc] = dihedral_check(dbracket(phi(1), phi(2)));
    CHECK(rev);
    CHECK(cyc);
    auto [rev3, cyc3] = dihedral_check(dbracket(phi(1), dbracket(phi(1), phi(2))));
    CHECK(rev3);
    CHECK(cyc3);
}

TEST_CASE("z0^2 at depth 1 fails the reversal symmetry") {
    Poly p(2);
    p.add_term({2, 0}, Rat(1));
    auto [rev, cyc] = dihedral_check({1, p});
    CHECK_FALSE(rev);
    CHECK_FALSE(cyc);
}

TEST_CASE("dbracket_via_dihedral agrees with the general bracket") {
    CHECK(dbracket_via_dihedral(phi(1), phi(4)).poly == dbracket(phi(1), phi(4)).poly);
    DepthElem inner = dbracket(phi(1), phi(2));
    CHECK(dbracket_via_dihedral(phi(1), inner).poly == dbracket(phi(1), inner).poly);
}

TEST_CASE("dbracket_via_dihedral rejects a right argument without the symmetry") {
    Poly p(3);
    p.add_term({2, 0, 0}, Rat(1));
    p.add_term({0, 2, 0}, Rat(1));
    p.add_term({0, 0, 2}, Rat(1));
    // symmetric under reversal with the wrong sign ((-1)^{r+1} = -1 at r=2)
    CHECK_THROWS_AS(dbracket_via_dihedral(phi(1), {2, p}), std::invalid_argument);
}

TEST_CASE("sdg_span(12,2) enumerates [3,9] and [5,7]") {
    auto span = sdg_span(12, 2);
    REQUIRE(span.size() == 2);
    CHECK(span[0].first.to_string() == "[3,9]");
    CHECK(span[1].first.to_string() == "[5,7]");
    CHECK(span[0].second.poly == dbracket(phi(1), phi(4)).poly);
    CHECK(span[1].second.poly == dbracket(phi(2), phi(3)).poly);
}

TEST_CASE("sdg_span(9,3) is the single zero word [[3,3],3]") {
    auto span = sdg_span(9, 3);
    REQUIRE(span.size() == 1);
    CHECK(span[0].first.to_string() == "[[3,3],3]");
    CHECK(span[0].second.poly.is_zero());
}

TEST_CASE("sdg_span(33,3) runs over the expected compositions") {
    auto span = sdg_span(33, 3);
    // tuples (a1,a2,a3), odd >= 3, a1 <= a2, sum 33
    size_t expected = 0;
    for (int a1 = 3; a1 <= 33; a1 += 2)
        for (int a2 = a1; a1 + a2 <= 30; a2 += 2) {
            int a3 = 33 - a1 - a2;
            if (a3 >= 3 && a3 % 2 == 1) ++expected;
        }
    CHECK(span.size() == expected);
    CHECK(span.size() > 0);
    for (const auto& [word, elem] : span) {
        CHECK(word.weight() == 33);
        CHECK(word.lie_degree() == 3);
        CHECK(elem.depth == 3);
        if (!elem.poly.is_zero()) {
            CHECK(elem.weight() == 33);
            auto [rev, cyc] = dihedral_check(elem);
            CHECK(rev);
            CHECK(cyc);
        }
    }
    CHECK(sdg_span(7, 2).empty()); // two odd parts cannot sum to an odd weight
}
