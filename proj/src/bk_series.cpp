#include "blocklie/bk_series.hpp"

#include "blocklie/cache.hpp"
#include "blocklie/qmatrix.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace blocklie {

Series2::Series2(int s_max, int t_max)
    : s_max_(s_max), t_max_(t_max),
      c_(s_max + 1, std::vector<Rat>(t_max + 1, Rat(0))) {
    if (s_max < 0 || t_max < 0) throw std::invalid_argument("negative truncation order");
}

const Rat& Series2::coeff(int n, int r) const {
    static const Rat kZero(0);
    if (n < 0 || r < 0) throw std::out_of_range("negative series index");
    if (n > s_max_ || r > t_max_) return kZero;
    return c_[n][r];
}

void Series2::set_coeff(int n, int r, const Rat& value) {
    if (n < 0 || n > s_max_ || r < 0 || r > t_max_) throw std::out_of_range("series index out of range");
    c_[n][r] = value;
}

Series2 Series2::one(int s_max, int t_max) {
    Series2 s(s_max, t_max);
    s.c_[0][0] = Rat(1);
    return s;
}

namespace {

void require_same_box(const Series2& a, const Series2& b) {
    if (a.s_max() != b.s_max() || a.t_max() != b.t_max())
        throw std::invalid_argument("series truncation boxes differ");
}

} // namespace

Series2 Series2::operator+(const Series2& o) const {
    require_same_box(*this, o);
    Series2 r(s_max_, t_max_);
    for (int n = 0; n <= s_max_; ++n)
        for (int t = 0; t <= t_max_; ++t) r.c_[n][t] = c_[n][t] + o.c_[n][t];
    return r;
}

Series2 Series2::operator-(const Series2& o) const {
    require_same_box(*this, o);
    Series2 r(s_max_, t_max_);
    for (int n = 0; n <= s_max_; ++n)
        for (int t = 0; t <= t_max_; ++t) r.c_[n][t] = c_[n][t] - o.c_[n][t];
    return r;
}

Series2 Series2::operator*(const Series2& o) const {
    require_same_box(*this, o);
    Series2 r(s_max_, t_max_);
    for (int n1 = 0; n1 <= s_max_; ++n1)
        for (int t1 = 0; t1 <= t_max_; ++t1) {
            if (c_[n1][t1] == 0) continue;
            for (int n2 = 0; n1 + n2 <= s_max_; ++n2)
                for (int t2 = 0; t1 + t2 <= t_max_; ++t2) {
                    if (o.c_[n2][t2] == 0) continue;
                    r.c_[n1 + n2][t1 + t2] += c_[n1][t1] * o.c_[n2][t2];
                }
        }
    return r;
}

Series2 Series2::reciprocal() const {
    if (c_[0][0] != 1)
        throw std::invalid_argument("reciprocal requires constant term 1");
    // b = 1 - (this - 1) * b, filled in increasing total order; every
    // product term of (this-1) raises n+t, so the recursion is well
    // founded on n+t.
    Series2 b(s_max_, t_max_);
    b.c_[0][0] = Rat(1);
    for (int total = 1; total <= s_max_ + t_max_; ++total) {
        for (int n = 0; n <= s_max_; ++n) {
            int t = total - n;
            if (t < 0 || t > t_max_) continue;
            Rat acc(0);
            for (int n1 = 0; n1 <= n; ++n1)
                for (int t1 = 0; t1 <= t; ++t1) {
                    if (n1 == 0 && t1 == 0) continue; // (this-1) has no constant term
                    acc += c_[n1][t1] * b.c_[n - n1][t - t1];
                }
            b.c_[n][t] = -acc;
        }
    }
    return b;
}

Series1 odd_generator_series(int s_max) {
    Series1 a(s_max + 1, Rat(0));
    for (int n = 3; n <= s_max; n += 2) a[n] = Rat(1);
    return a;
}

Series1 cusp_form_series(int s_max) {
    Series1 s(s_max + 1, Rat(0));
    for (int i = 12; i <= s_max; i += 4)
        for (int j = 0; i + j <= s_max; j += 6) s[i + j] += Rat(1);
    return s;
}

Series2 times_t_power(const Series1& a, int k, int s_max, int t_max) {
    Series2 r(s_max, t_max);
    if (k > t_max) return r;
    for (int n = 0; n <= s_max && n < static_cast<int>(a.size()); ++n) r.set_coeff(n, k, a[n]);
    return r;
}

Series2 uneven_bk_table(int s_max, int t_max) {
    return general_bk_table(odd_generator_series(s_max),
                            {Series1(s_max + 1, Rat(0)), cusp_form_series(s_max)}, s_max, t_max);
}

Series2 general_bk_table(const Series1& a, const std::vector<Series1>& b, int s_max, int t_max) {
    if (!a.empty() && a[0] != 0) throw std::invalid_argument("generator series must vanish at s=0");
    for (const auto& br : b)
        if (!br.empty() && br[0] != 0) throw std::invalid_argument("relation series must vanish at s=0");
    Series2 denom = Series2::one(s_max, t_max) - times_t_power(a, 1, s_max, t_max);
    for (size_t r = 0; r < b.size(); ++r)
        denom = denom + times_t_power(b[r], static_cast<int>(r) + 1, s_max, t_max);
    return denom.reciprocal();
}

namespace {

// Moebius function of n, n small.
int moebius(int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

// Number of words of the given length and weight over the odd alphabet:
// [s^weight] O(s)^length.
Int word_count(int weight, int length) {
    if (length == 0) return Int(weight == 0 ? 1 : 0);
    std::vector<Int> cur(weight + 1, 0);
    cur[0] = 1;
    for (int step = 0; step < length; ++step) {
        std::vector<Int> next(weight + 1, 0);
        for (int n = 0; n <= weight; ++n) {
            if (cur[n] == 0) continue;
            for (int a = 3; n + a <= weight; a += 2) next[n + a] += cur[n];
        }
        cur = std::move(next);
    }
    return cur[weight];
}

} // namespace

Int lyndon_count(int weight, int length) {
    if (length <= 0) return Int(0);
    Int total(0);
    for (int d = 1; d <= length; ++d) {
        if (length % d != 0 || weight % d != 0) continue;
        total += moebius(d) * word_count(weight / d, length / d);
    }
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), total.get_mpz_t(), Int(length).get_mpz_t());
    if (r != 0) throw std::logic_error("Lyndon count is not integral");
    return q;
}

std::vector<std::vector<Int>> lie_dimensions_from_table(const Series2& table) {
    const int s_max = table.s_max(), t_max = table.t_max();
    std::vector<std::vector<Int>> dims(s_max + 1, std::vector<Int>(t_max + 1, Int(0)));
    // Peel off one t-degree at a time: within degree r, only the (N, r)
    // factor itself contributes at first order, so l_{N,r} is the defect
    // of the partial product against the table.
    Series2 partial = Series2::one(s_max, t_max);
    for (int r = 1; r <= t_max; ++r) {
        for (int n = 0; n <= s_max; ++n) {
            Rat defect = table.coeff(n, r) - partial.coeff(n, r);
            if (defect.get_den() != 1)
                throw std::logic_error("non-integral Lie dimension extracted");
            dims[n][r] = defect.get_num();
            if (defect == 0) continue;
            // multiply partial by (1 - s^n t^r)^{-l} =
            //   sum_m binom(l+m-1, m) s^{nm} t^{rm}
            Series2 factor(s_max, t_max);
            factor.set_coeff(0, 0, Rat(1));
            if (dims[n][r] < 0)
                throw std::logic_error("negative Lie dimension extracted at weight " +
                                       std::to_string(n) + ", degree " + std::to_string(r));
            unsigned long l = dims[n][r].get_ui();
            Int binom(1);
            for (int m = 1; n * m <= s_max && r * m <= t_max; ++m) {
                binom = binom * (l + m - 1) / m; // exact: running binomial
                factor.set_coeff(n * m, r * m, Rat(binom));
            }
            partial = partial * factor;
        }
    }
    return dims;
}

bool DimensionComparison::all_match() const {
    for (const auto& cell : cells)
        if (!cell.match) return false;
    return true;
}

std::string DimensionComparison::to_csv() const {
    std::ostringstream os;
    os << "algebra,weight,degree,computed,predicted,mismatch\n";
    for (const auto& cell : cells)
        os << algebra_name(algebra) << "," << cell.weight << "," << cell.degree << ","
           << cell.computed.get_str() << "," << cell.predicted.get_str() << ","
           << (cell.match ? 0 : 1) << "\n";
    return os.str();
}

DimensionComparison compare_dimensions(AlgebraKind algebra, int weight_max, int degree_max,
                                       const ComponentCache* cache, int jobs) {
    DimensionComparison cmp;
    cmp.algebra = algebra;

    std::vector<std::vector<Int>> predicted;
    if (algebra != AlgebraKind::block)
        predicted = lie_dimensions_from_table(uneven_bk_table(weight_max, degree_max));

    for (int r = 1; r <= degree_max; ++r) {
        for (int w = 3 * r; w <= weight_max; ++w) {
            if ((w - r) % 2 != 0) continue; // odd-generator parity
            DimensionComparison::Cell cell;
            cell.weight = w;
            cell.degree = r;
            cell.predicted = algebra == AlgebraKind::block ? lyndon_count(w, r) : predicted[w][r];
            cmp.cells.push_back(std::move(cell));
        }
    }

    auto compute = [&](DimensionComparison::Cell& cell) {
        int computed;
        if (cache && cache->enabled()) {
            computed = rank(cache->get(algebra, cell.weight, cell.degree).matrix);
        } else if (jobs > 1) {
            // keep workers independent of the process-wide memo
            computed = rank(graded_component(algebra, cell.weight, cell.degree).matrix);
        } else {
            computed = rank(graded_component_cached(algebra, cell.weight, cell.degree).matrix);
        }
        cell.computed = Int(computed);
        cell.match = cell.computed == cell.predicted;
    };

    if (jobs <= 1) {
        for (auto& cell : cmp.cells) compute(cell);
        return cmp;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < cmp.cells.size(); i = next.fetch_add(1))
                compute(cmp.cells[i]);
        });
    }
    for (auto& worker : workers) worker.join();
    return cmp;
}

std::string table_to_csv(const Series2& table) {
    std::ostringstream os;
    os << "N";
    for (int t = 0; t <= table.t_max(); ++t) os << ",t" << t;
    os << "\n";
    for (int n = 0; n <= table.s_max(); ++n) {
        os << n;
        for (int t = 0; t <= table.t_max(); ++t) os << "," << rat_to_string(table.coeff(n, t));
        os << "\n";
    }
    return os.str();
}

} // namespace blocklie
