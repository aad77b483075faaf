#include "blocklie/qmatrix.hpp"

#include <stdexcept>

namespace blocklie {

QMatrix::QMatrix(int nrows, int ncols) : ncols_(ncols), rows_(nrows) {
    if (nrows < 0 || ncols < 0) throw std::invalid_argument("negative matrix dimension");
}

void QMatrix::set(int row, int col, const Rat& value) {
    if (row < 0 || row >= nrows() || col < 0 || col >= ncols_)
        throw std::out_of_range("matrix index out of range");
    if (value == 0)
        rows_[row].erase(col);
    else
        rows_[row][col] = value;
}

Rat QMatrix::get(int row, int col) const {
    if (row < 0 || row >= nrows() || col < 0 || col >= ncols_)
        throw std::out_of_range("matrix index out of range");
    auto it = rows_[row].find(col);
    return it == rows_[row].end() ? Rat(0) : it->second;
}

namespace {

// Row echelon pass shared by rank/nullspace/solve. Work rows are dense
// in a map; `track` carries the row-operation history (starts as the
// identity) so zero rows certify left-nullspace vectors.
struct Elimination {
    std::vector<std::map<int, Rat>> rows;
    std::vector<std::vector<Rat>> track;
    std::vector<int> pivot_col; // per eliminated row, -1 if zero row
    int rank = 0;

    explicit Elimination(const QMatrix& m, bool with_track) {
        const int n = m.nrows();
        rows.reserve(n);
        for (int i = 0; i < n; ++i) rows.push_back(m.row(i));
        if (with_track) {
            track.assign(n, std::vector<Rat>(n, Rat(0)));
            for (int i = 0; i < n; ++i) track[i][i] = Rat(1);
        }
        run();
    }

    void add_multiple(int dst, int src, const Rat& factor) {
        if (factor == 0) return;
        for (const auto& [c, v] : rows[src]) {
            auto it = rows[dst].find(c);
            if (it == rows[dst].end()) {
                rows[dst].emplace(c, v * factor);
            } else {
                it->second += v * factor;
                if (it->second == 0) rows[dst].erase(it);
            }
        }
        if (!track.empty()) {
            for (size_t j = 0; j < track[src].size(); ++j) track[dst][j] += track[src][j] * factor;
        }
    }

    void run() {
        const int n = static_cast<int>(rows.size());
        std::vector<bool> used(n, false);
        pivot_col.assign(n, -1);
        while (true) {
            // deterministic pivot: smallest column with a nonzero entry in
            // an unused row, then the smallest such row
            int pc = -1, pr = -1;
            for (int i = 0; i < n; ++i) {
                if (used[i] || rows[i].empty()) continue;
                int c = rows[i].begin()->first;
                if (pc == -1 || c < pc || (c == pc && i < pr)) {
                    pc = c;
                    pr = i;
                }
            }
            if (pc == -1) break;
            used[pr] = true;
            pivot_col[pr] = pc;
            ++rank;
            const Rat pivot = rows[pr].at(pc);
            for (int i = 0; i < n; ++i) {
                if (i == pr) continue;
                auto it = rows[i].find(pc);
                if (it == rows[i].end()) continue;
                add_multiple(i, pr, -(it->second / pivot));
            }
        }
    }
};

} // namespace

int rank(const QMatrix& m) {
    return Elimination(m, /*with_track=*/false).rank;
}

std::vector<std::vector<Rat>> nullspace(const QMatrix& m) {
    Elimination e(m, /*with_track=*/true);
    std::vector<std::vector<Rat>> basis;
    for (int i = 0; i < m.nrows(); ++i) {
        if (!e.rows[i].empty()) continue;
        std::vector<Rat> v = e.track[i];
        // normalize: first nonzero coordinate = 1
        for (auto& x : v) {
            if (x != 0) {
                Rat lead = x;
                for (auto& y : v) y /= lead;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(const QMatrix& m, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != m.nrows()) throw std::invalid_argument("solve: dimension mismatch");
    // Eliminate on [M | b] with the same deterministic pivot rule.
    const int n = m.nrows();
    std::vector<std::map<int, Rat>> rows(n);
    std::vector<Rat> rhs = b;
    for (int i = 0; i < n; ++i) rows[i] = m.row(i);

    std::vector<bool> used(n, false);
    std::vector<std::pair<int, int>> pivots; // (row, col)
    while (true) {
        int pc = -1, pr = -1;
        for (int i = 0; i < n; ++i) {
            if (used[i] || rows[i].empty()) continue;
            int c = rows[i].begin()->first;
            if (pc == -1 || c < pc || (c == pc && i < pr)) {
                pc = c;
                pr = i;
            }
        }
        if (pc == -1) break;
        used[pr] = true;
        pivots.emplace_back(pr, pc);
        const Rat pivot = rows[pr].at(pc);
        for (int i = 0; i < n; ++i) {
            if (i == pr) continue;
            auto it = rows[i].find(pc);
            if (it == rows[i].end()) continue;
            Rat factor = -(it->second / pivot);
            for (const auto& [c, v] : rows[pr]) {
                auto jt = rows[i].find(c);
                if (jt == rows[i].end()) {
                    rows[i].emplace(c, v * factor);
                } else {
                    jt->second += v * factor;
                    if (jt->second == 0) rows[i].erase(jt);
                }
            }
            rhs[i] += rhs[pr] * factor;
        }
    }
    for (int i = 0; i < n; ++i)
        if (rows[i].empty() && rhs[i] != 0) return std::nullopt;

    std::vector<Rat> x(m.ncols(), Rat(0));
    for (const auto& [r, c] : pivots) {
        // row r is c-leading and fully reduced against other pivots
        Rat acc = rhs[r];
        for (const auto& [col, v] : rows[r]) {
            if (col == c) continue;
            acc -= v * x[col]; // non-pivot columns stay zero
        }
        x[c] = acc / rows[r].at(c);
    }
    return x;
}

} // namespace blocklie
