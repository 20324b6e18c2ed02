#pragma once

#include <optional>
#include <vector>

#include "pvlab/rat.hpp"

namespace pvlab {

// C(n, r); zero when r > n.
Int binomial(long n, long r);

// Number of monomials t_1^{i_1}...t_d^{i_d} with 1 <= i_1+...+i_d <= l,
// i.e. C(d+l, l) - 1. Accepts every d >= 1, l >= 1.
Int monomial_count(int d, int l);

// The exponent weight j*k/(j+1) * C(k+j, j).
Rat kappa_weight(int j, int k);

// Sharp decoupling exponent: the max of the volume branch (1/2 - 1/p)d and
// the d lower-dimensional branches (1 - 1/p)j - kappa_weight(j,k)/p.
Rat gamma_exponent(int d, int k, const Rat& p);

// Critical Lebesgue exponent 2*kappa_weight(d,l)/d; equals 2 at l = 1.
Rat critical_p(int d, int l);

// max{2, p * critical_p(d,l) / critical_p(d,k)} for 1 <= l <= k-1.
Rat q_index(int d, int k, const Rat& p, int l);

// Interpolation weights of the two Hoelder splittings. alpha[l] is defined
// for 1 <= l <= k-1 and beta[l] for 2 <= l <= k-1; index 0 (and 1 for beta)
// is unused padding.
struct AlphaBeta {
    std::vector<Rat> alpha;
    std::vector<Rat> beta;
};
AlphaBeta interpolation_weights(int d, int k);

// max(s*d, max_j (2s-1)j + d - kappa_weight(j,k)).
Rat lower_exponent(int s, int d, int k);

// All scalar indices for a fixed (d, k) and optionally a Lebesgue exponent p.
// Construction verifies the exact invariants each downstream computation
// relies on and throws std::logic_error on any violation.
struct ExponentTable {
    int d = 0;
    int k = 0;
    std::optional<Rat> p;

    std::vector<Int> n;         // n[l], 1 <= l <= k
    std::vector<Rat> kappa;     // kappa[j], 1 <= j <= d
    std::vector<Int> s_partial; // s_partial[j] = n[1]+...+n[j], 0 <= j <= k
    std::vector<Rat> p_crit;    // p_crit[l], 1 <= l <= k
    std::vector<Rat> q_idx;     // q_idx[l], 1 <= l <= k-1; empty unless p given
    std::vector<Rat> alpha;     // alpha[l], 1 <= l <= k-1
    std::vector<Rat> beta;      // beta[l], 2 <= l <= k-1
    std::optional<Rat> gamma;   // gamma_exponent(d, k, p) when p given

    static ExponentTable make(int d, int k, std::optional<Rat> p = std::nullopt);
};

}  // namespace pvlab
