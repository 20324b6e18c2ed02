#include "pvlab/matrix.hpp"

#include <stdexcept>

namespace pvlab {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RatMatrix RatMatrix::multiplied(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in product");
    RatMatrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(r, k);
            if (x.is_zero()) continue;
            for (int c = 0; c < other.cols_; ++c) out.at(r, c) += x * other.at(k, c);
        }
    return out;
}

std::vector<Rat> RatMatrix::multiplied(const std::vector<Rat>& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("RatMatrix: shape mismatch in mat-vec");
    std::vector<Rat> out(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

RatMatrix RatMatrix::submatrix(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const {
    RatMatrix out(int(row_ids.size()), int(col_ids.size()));
    for (std::size_t r = 0; r < row_ids.size(); ++r)
        for (std::size_t c = 0; c < col_ids.size(); ++c) out.at(int(r), int(c)) = at(row_ids[r], col_ids[c]);
    return out;
}

std::optional<std::vector<Rat>> solve_linear(RatMatrix a, std::vector<Rat> b) {
    const int n = a.rows();
    if (a.cols() != n || int(b.size()) != n) throw std::invalid_argument("solve_linear: not a square system");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a.at(col, c), a.at(pivot, c));
            std::swap(b[col], b[pivot]);
        }
        const Rat inv = a.at(col, col).reciprocal();
        for (int r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            const Rat f = a.at(r, col) * inv;
            a.at(r, col) = Rat(0);
            for (int c = col + 1; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
            b[r] -= f * b[col];
        }
    }

    std::vector<Rat> x(n);
    for (int r = n - 1; r >= 0; --r) {
        Rat s = b[r];
        for (int c = r + 1; c < n; ++c) s -= a.at(r, c) * x[c];
        x[r] = s / a.at(r, r);
    }
    return x;
}

RankProfile rank_profile(RatMatrix a) {
    RankProfile p;
    const int rows = a.rows(), cols = a.cols();
    std::vector<int> origin(rows);
    for (int i = 0; i < rows; ++i) origin[i] = i;

    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r)
            if (!a.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int c = 0; c < cols; ++c) std::swap(a.at(row, c), a.at(pivot, c));
            std::swap(origin[row], origin[pivot]);
        }
        const Rat inv = a.at(row, col).reciprocal();
        for (int r = row + 1; r < rows; ++r) {
            if (a.at(r, col).is_zero()) continue;
            const Rat f = a.at(r, col) * inv;
            for (int c = col; c < cols; ++c) a.at(r, c) -= f * a.at(row, c);
        }
        p.pivot_rows.push_back(origin[row]);
        p.pivot_cols.push_back(col);
        ++row;
    }
    p.rank = int(p.pivot_cols.size());
    return p;
}

int rank(RatMatrix a) { return rank_profile(std::move(a)).rank; }

Rat determinant(RatMatrix a) {
    const int n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("determinant: matrix not square");
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a.at(col, c), a.at(pivot, c));
            det = -det;
        }
        det *= a.at(col, col);
        const Rat inv = a.at(col, col).reciprocal();
        for (int r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            const Rat f = a.at(r, col) * inv;
            for (int c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
        }
    }
    return det;
}

}  // namespace pvlab
