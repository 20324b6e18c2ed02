#pragma once

#include <map>
#include <vector>

#include "pvlab/rat.hpp"
#include "pvlab/report.hpp"

namespace pvlab {

// Moment vector of a point x in [1,N]^d: the powers x^i over all exponent
// tuples 1 <= |i| <= k in the canonical monomial order.
std::vector<Int> moment_vector(int d, int k, const std::vector<long>& x);

struct CountLimits {
    // Rejects a run whose level-1 table alone (N^d keys) would exceed this.
    long max_table = 20'000'000;
    // Brute-force tuple budget.
    double max_brute_tuples = 1e8;
};

// Number of ordered solutions with s points on each side, all coordinates
// in [1, N]: builds the level-1 moment table, folds it s-1 times by sparse
// convolution, and returns the sum of squared counts. The fold is
// partitioned across `threads` workers; the merged result is identical for
// every worker count.
Int j_count(int s, int d, int k, long N, int threads = 1, const CountLimits& limits = {});

// Independent oracle: enumerates every pair of s-tuples directly and
// compares moment sums. Guarded at N^{2sd} tuples.
Int j_brute(int s, int d, int k, long N, const CountLimits& limits = {});

struct GrowthRow {
    long n = 0;
    Int j;
    double slope = 0.0;  // log2(J(N)/J(N/2)); 0 for the first row
};

struct GrowthReport {
    int s = 0, d = 0, k = 0;
    Rat ell;  // reference exponent from the lower-bound formula
    std::vector<GrowthRow> rows;
};

// J at N = 2, 4, ..., Nmax with dyadic slopes. Throws std::logic_error if
// any J(N) < N^{sd} (impossible: diagonal solutions alone reach that).
GrowthReport growth_report(int s, int d, int k, long nmax, int threads = 1,
                           const CountLimits& limits = {});

double log2_int(const Int& v);

}  // namespace pvlab
