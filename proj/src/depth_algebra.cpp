#include "blocklie/depth_algebra.hpp"

#include <numeric>
#include <stdexcept>

namespace blocklie {

DepthElem phi(int k) {
    if (k < 1) throw std::invalid_argument("phi requires k >= 1");
    // (z_0 - z_1)^{2k} expanded by binomials
    Poly p(2);
    for (int j = 0; j <= 2 * k; ++j) {
        Rat c(binomial(2 * k, j));
        if (j % 2 == 1) c = -c;
        p.add_term({2 * k - j, j}, c);
    }
    return {1, std::move(p)};
}

namespace {

// f mapped through the variable list idx, as a polynomial on out_nvars
// variables.
Poly at(const Poly& f, const std::vector<int>& idx, int out_nvars) {
    return f.rename(idx, out_nvars);
}

} // namespace

DepthElem circ(const DepthElem& f, const DepthElem& g) {
    const int r = f.depth, s = g.depth;
    if (r < 1 || s < 1) throw std::invalid_argument("circ requires positive depths");
    if (f.poly.nvars() != r + 1 || g.poly.nvars() != s + 1)
        throw std::invalid_argument("circ: polynomial variable count does not match depth");
    const int n = r + s + 1;
    const int degf = f.poly.total_degree();
    const Rat sign((degf + r) % 2 == 0 ? 1 : -1);

    Poly out(n);
    std::vector<int> fidx(r + 1), gidx(s + 1);
    for (int i = 0; i <= s; ++i) {
        // f(z_i,...,z_{i+r}) * g(z_0,...,z_i, z_{i+r+1},...,z_{r+s})
        for (int j = 0; j <= r; ++j) fidx[j] = i + j;
        int t = 0;
        for (int j = 0; j <= i; ++j) gidx[t++] = j;
        for (int j = i + r + 1; j <= r + s; ++j) gidx[t++] = j;
        out += at(f.poly, fidx, n) * at(g.poly, gidx, n);
    }
    for (int i = 1; i <= s; ++i) {
        // (-1)^{deg f + r} f(z_{i+r},...,z_i) * g(z_0,...,z_{i-1}, z_{i+r},...,z_{r+s})
        for (int j = 0; j <= r; ++j) fidx[j] = i + r - j;
        int t = 0;
        for (int j = 0; j < i; ++j) gidx[t++] = j;
        for (int j = i + r; j <= r + s; ++j) gidx[t++] = j;
        out += at(f.poly, fidx, n) * at(g.poly, gidx, n) * sign;
    }
    return {r + s, std::move(out)};
}

DepthElem dbracket(const DepthElem& f, const DepthElem& g) {
    DepthElem fg = circ(f, g);
    DepthElem gf = circ(g, f);
    return {f.depth + g.depth, fg.poly - gf.poly};
}

std::pair<bool, bool> dihedral_check(const DepthElem& f) {
    const int r = f.depth;
    const int n = r + 1;
    std::vector<int> rev(n), cyc(n);
    for (int i = 0; i < n; ++i) {
        rev[i] = n - 1 - i;
        cyc[i] = (i + n - 1) % n; // z_0 -> z_r, z_i -> z_{i-1}: f(z_1,..,z_r,z_0)
    }
    Poly reversed = f.poly.rename(rev, n);
    if (r % 2 == 1) { /* (-1)^{r+1} = +1 */ } else { reversed = -reversed; }
    bool rev_ok = reversed == f.poly;
    bool cyc_ok = f.poly.rename(cyc, n) == f.poly;
    return {rev_ok, cyc_ok};
}

Poly wraparound_bracket(const Poly& r, const Poly& q) {
    if (r.nvars() != 2) throw std::invalid_argument("wraparound bracket: left argument must be bivariate");
    const int n = q.nvars(); // output has n+1 variables z_0..z_n
    if (n < 2) throw std::invalid_argument("wraparound bracket: right argument needs >= 2 variables");
    Poly out(n + 1);
    std::vector<int> ridx(2), qidx(n);
    for (int i = 0; i <= n; ++i) {
        const int ip1 = (i + 1) % (n + 1);
        ridx[0] = i;
        ridx[1] = ip1;
        Poly rpart = r.rename(ridx, n + 1);
        int t = 0;
        for (int j = 0; j <= n; ++j)
            if (j != ip1) qidx[t++] = j;
        Poly qa = q.rename(qidx, n + 1); // omit z_{i+1}
        t = 0;
        for (int j = 0; j <= n; ++j)
            if (j != i) qidx[t++] = j;
        Poly qb = q.rename(qidx, n + 1); // omit z_i
        out += rpart * (qa - qb);
    }
    return out;
}

DepthElem dbracket_via_dihedral(const DepthElem& f, const DepthElem& g) {
    if (f.depth != 1) throw std::invalid_argument("dbracket_via_dihedral: left argument must have depth 1");
    auto [rev_ok, cyc_ok] = dihedral_check(g);
    if (!rev_ok || !cyc_ok)
        throw std::invalid_argument("dbracket_via_dihedral: right argument fails the dihedral symmetries");
    DepthElem out{f.depth + g.depth, wraparound_bracket(f.poly, g.poly)};
    DepthElem general = dbracket(f, g);
    if (out.poly != general.poly)
        throw std::logic_error("dbracket_via_dihedral: simplified form disagrees with the general bracket");
    return out;
}

std::vector<std::pair<BracketWord, DepthElem>> sdg_span(int weight, int degree) {
    std::vector<std::pair<BracketWord, DepthElem>> out;
    for (const auto& tuple : spanning_leaf_tuples(weight, degree)) {
        BracketWord w = BracketWord::left_normed(tuple);
        DepthElem e = phi((tuple[0] - 1) / 2);
        for (size_t i = 1; i < tuple.size(); ++i) e = dbracket(e, phi((tuple[i] - 1) / 2));
        out.emplace_back(std::move(w), std::move(e));
    }
    return out;
}

} // namespace blocklie
