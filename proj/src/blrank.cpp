#include "pvlab/blrank.hpp"

#include <stdexcept>
#include <string>

#include "pvlab/exponents.hpp"

namespace pvlab {

MonomialMap monomial_map(int d, int k) {
    MonomialMap m;
    m.d = d;
    m.k = k;
    m.exponents = simplex_points(d, k);
    if (Int(long(m.exponents.size())) != monomial_count(d, k))
        throw std::logic_error("monomial_map: enumeration size mismatch");
    return m;
}

namespace {

// d^a x^e = (prod_i falling(e_i, a_i)) x^{e-a}; zero when a_i > e_i anywhere.
Rat derivative_at(const Point& exponent, const Point& order, const std::vector<Rat>& t) {
    Int coeff(1);
    for (std::size_t i = 0; i < exponent.size(); ++i) {
        if (order[i] > exponent[i]) return Rat(0);
        for (int f = exponent[i]; f > exponent[i] - order[i]; --f) coeff *= f;
    }
    Rat value(coeff);
    for (std::size_t i = 0; i < exponent.size(); ++i)
        for (int e = 0; e < exponent[i] - order[i]; ++e) value *= t[i];
    return value;
}

}  // namespace

RatMatrix jet_matrix(const MonomialMap& map, int l, const std::vector<Rat>& t) {
    if (l < 1 || l > map.k - 1) throw std::invalid_argument("jet_matrix: requires 1 <= l <= k-1");
    if (int(t.size()) != map.d) throw std::invalid_argument("jet_matrix: point has wrong dimension");
    const auto orders = simplex_points(map.d, l);
    RatMatrix m(int(map.exponents.size()), int(orders.size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = derivative_at(map.exponents[r], orders[c], t);
    return m;
}

int required_minor_order(int h, int d, int k, int l) {
    const Int nk = monomial_count(d, k);
    const Int nl = monomial_count(d, l);
    if (h < 1 || Int(h) > nk) throw std::invalid_argument("required_minor_order: requires 1 <= H <= n_d(k)");
    if (Int(h) == nk)
        throw DegenerateError("required_minor_order: H = n_d(k) needs order n_d(l)+1, beyond the column count");
    Int q = (Int(h) * nl) / nk;  // floor: all quantities nonnegative
    return int(q.get_si()) + 1;
}

Subspace Subspace::make(RatMatrix basis) {
    Subspace v;
    v.ambient = basis.rows();
    if (basis.cols() < 1 || basis.cols() > basis.rows())
        throw std::invalid_argument("Subspace: needs 1 <= H <= ambient dimension");
    if (rank(basis) != basis.cols()) throw std::invalid_argument("Subspace: basis columns are dependent");
    v.basis = std::move(basis);
    return v;
}

std::uint64_t RationalPointSource::next_u64() {
    // splitmix64; fixed here so streams are reproducible across platforms.
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<Rat> RationalPointSource::next() {
    std::vector<Rat> t(d_);
    for (int i = 0; i < d_; ++i) {
        const long den = 2 + long(next_u64() % std::uint64_t(max_den_ - 1));     // 2 .. max_den
        const long num = 1 + long(next_u64() % std::uint64_t(den - 1));          // 1 .. den-1
        t[i] = Rat(num, den);
    }
    return t;
}

std::optional<RankCertificate> certify_rank(const MonomialMap& map, const Subspace& v, int l,
                                            int trials, std::uint64_t seed) {
    if (v.ambient != int(map.exponents.size()))
        throw std::invalid_argument("certify_rank: subspace ambient dimension mismatch");
    const int order = required_minor_order(v.dim(), map.d, map.k, l);
    const RatMatrix basis_t = v.basis.transposed();

    RationalPointSource points(map.d, seed);
    for (int trial = 1; trial <= trials; ++trial) {
        const auto t = points.next();
        const RatMatrix compressed = basis_t.multiplied(jet_matrix(map, l, t));
        const RankProfile profile = rank_profile(compressed);
        if (profile.rank < order) continue;

        RankCertificate cert;
        cert.point = t;
        cert.order = order;
        cert.rows.assign(profile.pivot_rows.begin(), profile.pivot_rows.begin() + order);
        cert.cols.assign(profile.pivot_cols.begin(), profile.pivot_cols.begin() + order);
        cert.minor_value = determinant(compressed.submatrix(cert.rows, cert.cols));
        if (cert.minor_value.is_zero()) throw std::logic_error("certify_rank: pivot minor vanished");
        cert.trials_used = trial;
        return cert;
    }
    return std::nullopt;
}

RatMatrix power_matrix(int d, int l, const std::vector<Point>& points) {
    const auto orders = simplex_points(d, l);
    RatMatrix m(int(orders.size()), int(points.size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            Int v(1);
            for (int i = 0; i < d; ++i)
                for (int e = 0; e < orders[r][i]; ++e) v *= points[c][i];
            m.at(r, c) = Rat(v);
        }
    return m;
}

CheckReport monomial_rank_report(int d, int k, int l, int max_ambient) {
    const std::string name = "monomial-rank-sweep d=" + std::to_string(d) + " k=" + std::to_string(k) +
                             " l=" + std::to_string(l);
    const auto ambient = simplex_points(d, k);
    const int n = int(ambient.size());
    if (n > max_ambient)
        return CheckReport::guarded(name, {{"error", "TooLarge"}, {"ambient", n}, {"budget", max_ambient}});

    const Int nk = monomial_count(d, k);
    const Int nl = monomial_count(d, l);
    long checked = 0;
    std::vector<Point> subset;
    for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t(1) << n); ++bits) {
        subset.clear();
        for (int i = 0; i < n; ++i)
            if (bits & (std::uint64_t(1) << i)) subset.push_back(ambient[i]);
        const int h = int(subset.size());
        const int r2 = rank(power_matrix(d, l, subset));
        if (!(Int(r2) * nk > Int(h) * nl)) {
            auto witness = nlohmann::json::array();
            for (const auto& p : subset) {
                std::string s;
                for (int x : p) s += (s.empty() ? "" : ",") + std::to_string(x);
                witness.push_back("(" + s + ")");
            }
            return CheckReport::fail(name, {{"error", "RankViolated"}, {"subset", witness},
                                            {"rank", r2}, {"H", h}});
        }
        ++checked;
    }
    return CheckReport::pass(name, {{"subsets", checked}});
}

}  // namespace pvlab
