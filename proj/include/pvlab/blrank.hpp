#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pvlab/lattice.hpp"
#include "pvlab/matrix.hpp"
#include "pvlab/rat.hpp"
#include "pvlab/report.hpp"

namespace pvlab {

// Canonical monomial index order of the level-k simplex (degree ascending,
// first-coordinate-heavy within a degree). Row i of every jet matrix is the
// monomial with exponent tuple exponents[i].
struct MonomialMap {
    int d = 0;
    int k = 0;
    std::vector<Point> exponents;
};
MonomialMap monomial_map(int d, int k);

// Matrix of all partial derivatives d^a (monomial_i) evaluated at t, with
// derivative orders a running over the level-l simplex in the same
// canonical order: shape n_d(k) x n_d(l).
RatMatrix jet_matrix(const MonomialMap& map, int l, const std::vector<Rat>& t);

// floor(H * n_d(l) / n_d(k)) + 1. Throws DegenerateError when H = n_d(k)
// (the required order would exceed the column count; the rank statement
// assumes a proper subspace).
int required_minor_order(int h, int d, int k, int l);

// Subspace of the ambient coefficient space, given by H independent basis
// columns. Independence is verified by exact rank on construction.
struct Subspace {
    int ambient = 0;
    RatMatrix basis;  // ambient x H
    static Subspace make(RatMatrix basis);
    int dim() const { return basis.cols(); }
};

struct RankCertificate {
    std::vector<Rat> point;
    int order = 0;
    std::vector<int> rows, cols;  // index sets of the nonvanishing minor
    Rat minor_value;
    int trials_used = 0;
};

// Deterministic rational point stream in (0,1)^d with denominators bounded
// by max_den (default 2^16). The underlying generator is fixed so streams
// reproduce bit-for-bit across platforms.
class RationalPointSource {
public:
    RationalPointSource(int d, std::uint64_t seed, long max_den = 65536)
        : d_(d), max_den_(max_den), state_(seed) {}
    std::vector<Rat> next();

private:
    std::uint64_t next_u64();
    int d_;
    long max_den_;
    std::uint64_t state_;
};

// Hunts for a rational point where the compressed jet matrix reaches the
// required minor order, returning the explicit nonzero minor. Empty when
// the trial budget is exhausted (a counterexample candidate, never silently
// dropped by callers).
std::optional<RankCertificate> certify_rank(const MonomialMap& map, const Subspace& v, int l,
                                            int trials, std::uint64_t seed);

// The power matrix of an exponent set: entry(b, h) = prod_i a[h][i]^{b_i}
// over derivative tuples b in the level-l simplex, with 0^0 = 1.
RatMatrix power_matrix(int d, int l, const std::vector<Point>& points);

// Exhaustive sweep over nonempty proper exponent subsets of the level-k
// simplex: rank(power_matrix) * n_d(k) > |subset| * n_d(l) must hold for
// every subset. Guarded when n_d(k) exceeds the budget.
CheckReport monomial_rank_report(int d, int k, int l, int max_ambient = 14);

}  // namespace pvlab
