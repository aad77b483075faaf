#pragma once

#include "blocklie/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace blocklie {

// Sparse exact rational matrix. Rows are stored as ordered column->value
// maps with no explicit zeros.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int nrows, int ncols);

    int nrows() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }

    void set(int row, int col, const Rat& value);
    Rat get(int row, int col) const;
    const std::map<int, Rat>& row(int r) const { return rows_.at(r); }

    bool operator==(const QMatrix&) const = default;

private:
    int ncols_ = 0;
    std::vector<std::map<int, Rat>> rows_;
};

// Exact rank via rational Gaussian elimination with deterministic
// pivoting (smallest column index, then smallest row index).
int rank(const QMatrix& m);

// Basis of the left nullspace {x : x M = 0}, each vector normalized so
// its first nonzero coordinate is 1. Deterministic. rank + size = nrows.
std::vector<std::vector<Rat>> nullspace(const QMatrix& m);

// One exact solution of M x = b (right solve) with non-pivot variables
// set to zero, or nullopt when the system is inconsistent.
std::optional<std::vector<Rat>> solve(const QMatrix& m, const std::vector<Rat>& b);

} // namespace blocklie
