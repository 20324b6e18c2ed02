#pragma once

#include <optional>
#include <vector>

#include "pvlab/exponents.hpp"
#include "pvlab/matrix.hpp"
#include "pvlab/report.hpp"

namespace pvlab {

// The recurrence systems of the ball-inflation bookkeeping all share one
// homogeneous part over the variable vector
//   (w_1, w_2, eta_2, w_3, eta_3, ..., w_{k-1}, eta_{k-1})
// of dimension 2k-3; eta_1 and w_k are boundary constants of each system.
// For k = 2 the system degenerates to the single variable w_1 and the
// matrix is the 1x1 zero matrix.

// Homogeneous coefficient matrix derived from the recurrences. Entries are
// products of alpha, beta, 1-alpha, 1-beta in (0,1) and factors (l+1)/l,
// so the matrix is entrywise nonnegative. Independent of p.
RatMatrix iteration_matrix(int d, int k);

// The same matrix transcribed literally from its published coefficient
// table, which swaps the beta columns of the eta rows. Kept only to report
// the structural diff against iteration_matrix.
RatMatrix transcribed_matrix(int d, int k);

struct MatrixDiff {
    int row = 0, col = 0;  // 0-based
    Rat from_recurrence;
    Rat from_table;
};
std::vector<MatrixDiff> matrix_transcription_diff(int d, int k);

// Solves (I - M)x = 1 exactly and verifies x > 0 and Mx < x entrywise,
// which certifies spectral radius < 1 for a nonnegative M. Throws
// NotContractingError when I - M is singular or the check fails.
std::vector<Rat> contraction_certificate(const RatMatrix& m);

enum class SolutionVariant {
    lambda0,
    w_prime,
    w_doubleprime,
    bar,
    tilde,
    decomposed2,
    decomposed3,
    decomposed4,
};

struct IterationSolution {
    SolutionVariant variant = SolutionVariant::lambda0;
    int d = 0, k = 0;
    std::optional<Rat> p;
    std::vector<Rat> w;    // w[l] for 1 <= l <= k (w[0] unused)
    std::vector<Rat> eta;  // eta[l] for 1 <= l <= k-1 (eta[0] unused)
    std::optional<Rat> lambda0;
};

// 2 n_d(k) / n_d(1); the loss system is defined strictly above this.
Rat regime_threshold(int d, int k);

// Total delta-power loss of the iteration: solves the loss recurrences with
// eta_1 = 0, w_k = 0 and returns lambda0 = w_1 + d(1/q_1 - n_k/(n_1 p)).
// Throws OutOfRegimeError unless p > regime_threshold(d, k).
IterationSolution solve_lambda0(int d, int k, const Rat& p);

// Branch-mass system: eta_1 = 2, w_k = 0, homogeneous otherwise. The closed
// form has w_1 = 1 exactly; solve_wprime computes the same solution through
// the generic solver.
IterationSolution wprime_closed_form(int d, int k);
IterationSolution solve_wprime(int d, int k);

// Terminal-mass system: eta_1 = 0, w_k = 1, homogeneous otherwise. All
// entries lie in [0, 1].
IterationSolution solve_wdoubleprime(int d, int k);

// Per-level loss constants A_l = gamma(d,l,q_l)/l + (d/l)(1/q_l - 1/p).
std::vector<Rat> per_level_constants(int d, int k, const Rat& p);

// System with constants fed through both recurrences (eta_1 = 0, w_k = 0);
// its root value reproduces lambda0.
IterationSolution solve_bar(int d, int k, const Rat& p);

// Same shaped system but pinned at the root (w_1 = 0, eta_1 = 0) with w_k
// becoming an unknown. With a[l] = 1/l the solution has w_k = -1.
IterationSolution solve_tilde(int d, int k, const std::vector<Rat>& a);
IterationSolution tilde_closed_form(int d, int k);  // the a[l] = 1/l case

// The three pieces the difference system lambda0 - bar splits into.
IterationSolution solve_decomposed2(int d, int k, const Rat& p);
IterationSolution solve_decomposed3(int d, int k, const Rat& p);
IterationSolution solve_decomposed4(int d, int k, const Rat& p);
IterationSolution decomposed3_closed_form(int d, int k, const Rat& p);

struct LambdaBound {
    Rat lambda0;
    Rat gamma;
    Rat w1_dp;  // root value of the terminal-mass system
    Rat slack;  // gamma * w1_dp - lambda0, exact
};
LambdaBound lambda_bound(int d, int k, const Rat& p);
CheckReport lambda_bound_report(int d, int k, const Rat& p);

// The full list of exact identity checks for one (d, k, p); every report
// carries the residual (expected zero) or the offending values.
std::vector<CheckReport> identity_checks(int d, int k, const Rat& p);

}  // namespace pvlab
