#include "pvlab/exponents.hpp"

#include <stdexcept>
#include <string>

namespace pvlab {

Int binomial(long n, long r) {
    if (n < 0 || r < 0) throw std::invalid_argument("binomial: negative argument");
    if (r > n) return Int(0);
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

Int monomial_count(int d, int l) {
    if (d < 1 || l < 1) throw std::invalid_argument("monomial_count: requires d >= 1, l >= 1");
    return binomial(long(d) + l, l) - 1;
}

Rat kappa_weight(int j, int k) {
    if (j < 1 || k < 1) throw std::invalid_argument("kappa_weight: requires j >= 1, k >= 1");
    return Rat(Int(long(j) * k) * binomial(long(k) + j, j), Int(j + 1));
}

Rat gamma_exponent(int d, int k, const Rat& p) {
    if (d < 1 || k < 1) throw std::invalid_argument("gamma_exponent: requires d >= 1, k >= 1");
    if (p < Rat(2)) throw std::invalid_argument("gamma_exponent: requires p >= 2");
    const Rat inv_p = p.reciprocal();
    Rat best = (Rat(1, 2) - inv_p) * Rat(d);
    for (int j = 1; j <= d; ++j) {
        const Rat branch = (Rat(1) - inv_p) * Rat(j) - kappa_weight(j, k) * inv_p;
        if (branch > best) best = branch;
    }
    return best;
}

Rat critical_p(int d, int l) {
    if (d < 1 || l < 1) throw std::invalid_argument("critical_p: requires d >= 1, l >= 1");
    return Rat(2) * kappa_weight(d, l) / Rat(d);
}

Rat q_index(int d, int k, const Rat& p, int l) {
    if (k < 2 || l < 1 || l > k - 1) throw std::invalid_argument("q_index: requires 1 <= l <= k-1");
    if (p < Rat(2)) throw std::invalid_argument("q_index: requires p >= 2");
    const Rat scaled = p * critical_p(d, l) / critical_p(d, k);
    return scaled > Rat(2) ? scaled : Rat(2);
}

AlphaBeta interpolation_weights(int d, int k) {
    if (d < 1 || k < 2) throw std::invalid_argument("interpolation_weights: requires d >= 1, k >= 2");
    std::vector<Rat> n(k + 2), p(k + 2);
    for (int j = 1; j <= k + 1; ++j) {
        n[j] = Rat(monomial_count(d, j));
        p[j] = critical_p(d, j);
    }
    const Rat& nk = n[k];
    const Rat& pk = p[k];

    AlphaBeta out;
    out.alpha.assign(k, Rat(0));
    out.beta.assign(k, Rat(0));
    for (int j = 1; j <= k - 1; ++j) {
        const Rat denom = n[j + 1] * pk - p[j] * nk;
        const Rat numer = n[j] * pk - p[j] * nk;
        if (numer.sign() <= 0 || denom.sign() <= 0)
            throw DegenerateDenominatorError("interpolation_weights: n_j p_k - p_j n_k <= 0 at d=" +
                                             std::to_string(d) + " k=" + std::to_string(k) +
                                             " j=" + std::to_string(j));
        out.alpha[j] = (n[j + 1] / n[j]) * (numer / denom);
    }
    for (int j = 2; j <= k - 1; ++j) {
        const Rat denom = n[j] * pk - p[j - 1] * nk;
        if (denom.sign() <= 0)
            throw DegenerateDenominatorError("interpolation_weights: n_j p_k - p_{j-1} n_k <= 0 at d=" +
                                             std::to_string(d) + " k=" + std::to_string(k) +
                                             " j=" + std::to_string(j));
        out.beta[j] = (pk / p[j]) * (n[j] * (p[j] - p[j - 1]) / denom);
    }

    // The closed forms must reproduce the defining harmonic-mean relations
    //   n_k/n_l   = alpha_l * n_k/n_{l+1} + (1 - alpha_l) * p_k/p_l
    //   p_k/p_l   = (1 - beta_l) * p_k/p_{l-1} + beta_l * n_k/n_l
    // exactly; a mismatch is an implementation bug.
    for (int l = 1; l <= k - 1; ++l) {
        const Rat lhs = nk / n[l];
        const Rat rhs = out.alpha[l] * (nk / n[l + 1]) + (Rat(1) - out.alpha[l]) * (pk / p[l]);
        if (lhs != rhs) throw std::logic_error("interpolation_weights: alpha relation violated");
    }
    for (int l = 2; l <= k - 1; ++l) {
        const Rat lhs = pk / p[l];
        const Rat rhs = (Rat(1) - out.beta[l]) * (pk / p[l - 1]) + out.beta[l] * (nk / n[l]);
        if (lhs != rhs) throw std::logic_error("interpolation_weights: beta relation violated");
    }
    return out;
}

Rat lower_exponent(int s, int d, int k) {
    if (s < 1) throw std::invalid_argument("lower_exponent: requires s >= 1");
    Rat best = Rat(long(s) * d);
    for (int j = 1; j <= d; ++j) {
        const Rat branch = Rat(long(2 * s - 1) * j + d) - kappa_weight(j, k);
        if (branch > best) best = branch;
    }
    return best;
}

ExponentTable ExponentTable::make(int d, int k, std::optional<Rat> p) {
    if (d < 1 || k < 2) throw std::invalid_argument("ExponentTable: requires d >= 1, k >= 2");
    if (p && *p < Rat(2)) throw std::invalid_argument("ExponentTable: requires p >= 2");

    ExponentTable t;
    t.d = d;
    t.k = k;
    t.p = p;

    t.n.assign(k + 1, Int(0));
    t.p_crit.assign(k + 1, Rat(0));
    for (int l = 1; l <= k; ++l) {
        t.n[l] = monomial_count(d, l);
        t.p_crit[l] = critical_p(d, l);
    }
    t.kappa.assign(d + 1, Rat(0));
    for (int j = 1; j <= d; ++j) t.kappa[j] = kappa_weight(j, k);
    t.s_partial.assign(k + 1, Int(0));
    for (int j = 1; j <= k; ++j) t.s_partial[j] = t.s_partial[j - 1] + t.n[j];

    auto ab = interpolation_weights(d, k);
    t.alpha = std::move(ab.alpha);
    t.beta = std::move(ab.beta);

    if (p) {
        t.q_idx.assign(k, Rat(0));
        for (int l = 1; l <= k - 1; ++l) t.q_idx[l] = q_index(d, k, *p, l);
        t.gamma = gamma_exponent(d, k, *p);
    }

    if (t.n[1] != Int(d)) throw std::logic_error("ExponentTable: n(1) != d");
    for (int j = 1; j <= k; ++j)
        if (t.s_partial[j] <= t.s_partial[j - 1]) throw std::logic_error("ExponentTable: s_j not increasing");
    for (int l = 1; l <= k - 1; ++l)
        if (t.alpha[l] <= Rat(0) || t.alpha[l] >= Rat(1))
            throw std::logic_error("ExponentTable: alpha out of (0,1)");
    for (int l = 2; l <= k - 1; ++l)
        if (t.beta[l] <= Rat(0) || t.beta[l] >= Rat(1))
            throw std::logic_error("ExponentTable: beta out of (0,1)");
    for (int j = 1; j < k; ++j)
        if (Rat(t.n[j]) * t.p_crit[k] <= t.p_crit[j] * Rat(t.n[k]))
            throw std::logic_error("ExponentTable: n_j p_k > p_j n_k violated");
    if (t.p_crit[1] != Rat(2)) throw std::logic_error("ExponentTable: p(1) != 2");
    for (int l = 2; l <= k; ++l)
        if (t.p_crit[l] <= t.p_crit[l - 1]) throw std::logic_error("ExponentTable: p(l) not increasing");
    for (int l = 1; l <= k - 1 && p; ++l)
        if (t.q_idx[l] < Rat(2)) throw std::logic_error("ExponentTable: q(l) < 2");

    return t;
}

}  // namespace pvlab
