#pragma once

#include <optional>
#include <vector>

#include "pvlab/rat.hpp"

namespace pvlab {

// Dense matrix of exact rationals. Small sizes only; everything here is
// O(n^3) exact elimination.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

    RatMatrix transposed() const;
    RatMatrix multiplied(const RatMatrix& other) const;
    std::vector<Rat> multiplied(const std::vector<Rat>& v) const;
    RatMatrix submatrix(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const;

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

// Exact Gaussian elimination, pivoting on the first nonzero candidate.
// Returns nothing when A is singular.
std::optional<std::vector<Rat>> solve_linear(RatMatrix a, std::vector<Rat> b);

int rank(RatMatrix a);

struct RankProfile {
    int rank = 0;
    std::vector<int> pivot_rows;  // original row indices, one per pivot
    std::vector<int> pivot_cols;  // echelon columns, increasing
};

// Row echelon pass that remembers which rows/columns carried pivots; the
// selected pivot_rows x pivot_cols submatrix is nonsingular.
RankProfile rank_profile(RatMatrix a);

Rat determinant(RatMatrix a);

}  // namespace pvlab
