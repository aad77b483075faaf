#pragma once

#include "blocklie/block_algebra.hpp"
#include "blocklie/rational.hpp"

#include <string>
#include <vector>

namespace blocklie {

// Truncated bivariate power series in (s, t): coefficients c[N][r] for
// N <= s_max, r <= t_max. Arithmetic is exact within the truncation box.
class Series2 {
public:
    Series2() = default;
    Series2(int s_max, int t_max);

    int s_max() const { return s_max_; }
    int t_max() const { return t_max_; }
    const Rat& coeff(int n, int r) const;
    void set_coeff(int n, int r, const Rat& value);

    Series2 operator+(const Series2& o) const;
    Series2 operator-(const Series2& o) const;
    Series2 operator*(const Series2& o) const;
    bool operator==(const Series2&) const = default;

    // 1/this; requires constant term 1 (non-unit constant is an error).
    Series2 reciprocal() const;

    static Series2 one(int s_max, int t_max);

private:
    int s_max_ = 0, t_max_ = 0;
    std::vector<std::vector<Rat>> c_; // c_[n][r]
};

// Univariate series in s, exact, truncated at s_max.
using Series1 = std::vector<Rat>;

// O(s) = s^3/(1-s^2): one generator in every odd weight >= 3.
Series1 odd_generator_series(int s_max);
// S(s) = s^12/((1-s^4)(1-s^6)): cusp-form dimensions.
Series1 cusp_form_series(int s_max);

// Embeds a(s) * t^k into the bivariate box.
Series2 times_t_power(const Series1& a, int k, int s_max, int t_max);

// Coefficient table of 1/(1 - O(s) t + S(s) t^2).
Series2 uneven_bk_table(int s_max, int t_max);

// Coefficient table of 1/(1 - A(s) t + sum_r B_r(s) t^r) for a
// presentation with generator series A and relation series B_r (B_r
// enters at t^r, r >= 1, starting at B_1). A(0) = B_r(0) = 0 required.
Series2 general_bk_table(const Series1& a, const std::vector<Series1>& b, int s_max, int t_max);

// Number of Lyndon words of the given length and weight over the
// alphabet with one letter in every odd weight >= 3 (Witt-style count
// by Moebius inversion; the free-Lie dimension oracle).
Int lyndon_count(int weight, int length);

// Bigraded Lie dimensions extracted from a UEA-type table by the
// Poincare-Birkhoff-Witt product formula
//   prod_{N,r} (1-s^N t^r)^{-l_{N,r}} = table.
std::vector<std::vector<Int>> lie_dimensions_from_table(const Series2& table);

// Per-cell comparison of computed spanning ranks against the series
// predictions (free Lyndon counts for the block algebra, the
// presentation with generators O and quadratic relations S for the depth
// and even algebras).
struct DimensionComparison {
    struct Cell {
        int weight = 0;
        int degree = 0;
        Int computed;
        Int predicted;
        bool match = false;
    };
    AlgebraKind algebra;
    std::vector<Cell> cells;
    bool all_match() const;
    std::string to_csv() const; // weight,degree,computed,predicted,mismatch
};

class ComponentCache;

// Independent (weight, degree) cells may run in parallel (jobs > 1); the
// cell order of the report is fixed by the loop order regardless of the
// schedule. A cache, when given, feeds the component matrices.
DimensionComparison compare_dimensions(AlgebraKind algebra, int weight_max, int degree_max,
                                       const ComponentCache* cache = nullptr, int jobs = 1);

// CSV of a bivariate table: header row t=0..t_max, one row per N.
std::string table_to_csv(const Series2& table);

} // namespace blocklie
