#include "pvlab/counting.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "pvlab/exponents.hpp"
#include "pvlab/lattice.hpp"

namespace pvlab {

std::vector<Int> moment_vector(int d, int k, const std::vector<long>& x) {
    if (int(x.size()) != d) throw std::invalid_argument("moment_vector: point has wrong dimension");
    for (long c : x)
        if (c < 1) throw std::invalid_argument("moment_vector: coordinates must be >= 1");
    const auto tuples = simplex_points(d, k);
    std::vector<Int> out;
    out.reserve(tuples.size());
    for (const auto& i : tuples) {
        Int v(1);
        for (int c = 0; c < d; ++c) {
            Int p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(x[c]), static_cast<unsigned long>(i[c]));
            v *= p;
        }
        out.push_back(v);
    }
    return out;
}

namespace {

using Table = std::map<std::vector<Int>, Int>;

// All points of [1, N]^d in odometer order.
std::vector<std::vector<long>> grid_points(int d, long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> x(d, 1);
    while (true) {
        out.push_back(x);
        int pos = d - 1;
        while (pos >= 0 && x[pos] == n) x[pos--] = 1;
        if (pos < 0) break;
        ++x[pos];
    }
    return out;
}

Table level_one_table(int d, int k, long n) {
    Table t;
    for (const auto& x : grid_points(d, n)) t[moment_vector(d, k, x)] += 1;
    return t;
}

std::vector<Int> add_keys(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

// One convolution level, partitioned over the keys of `big` by stride.
Table convolve(const Table& big, const Table& unit, int threads) {
    std::vector<const Table::value_type*> entries;
    entries.reserve(big.size());
    for (const auto& e : big) entries.push_back(&e);

    const int workers = std::max(1, threads);
    std::vector<Table> partial(workers);
    auto run = [&](int id) {
        Table& local = partial[id];
        for (std::size_t i = id; i < entries.size(); i += workers) {
            const auto& [key, count] = *entries[i];
            for (const auto& [ukey, ucount] : unit) local[add_keys(key, ukey)] += count * ucount;
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(run, i);
        for (auto& th : pool) th.join();
    }

    Table merged = std::move(partial[0]);
    for (int i = 1; i < workers; ++i)
        for (const auto& [key, count] : partial[i]) merged[key] += count;
    return merged;
}

Int table_mass(const Table& t) {
    Int total(0);
    for (const auto& [key, count] : t) total += count;
    return total;
}

Int pow_int(long base, long exp) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return out;
}

}  // namespace

Int j_count(int s, int d, int k, long n, int threads, const CountLimits& limits) {
    if (s < 1 || d < 1 || k < 1 || n < 1) throw std::invalid_argument("j_count: bad parameters");
    const Int grid = pow_int(n, d);
    if (grid > limits.max_table)
        throw ResourceGuardError("j_count: level-1 table needs " + grid.get_str() + " keys, limit " +
                                 std::to_string(limits.max_table));

    const Table unit = level_one_table(d, k, n);
    Table folded = unit;
    for (int level = 2; level <= s; ++level) {
        // Projected key count for the next fold, before paying for it.
        Int projected = Int(long(folded.size())) * Int(long(unit.size()));
        const Int all_tuples = pow_int(n, long(level) * d);
        if (all_tuples < projected) projected = all_tuples;
        if (projected > limits.max_table)
            throw ResourceGuardError("j_count: fold level " + std::to_string(level) + " projects " +
                                     projected.get_str() + " keys, limit " +
                                     std::to_string(limits.max_table));
        folded = convolve(folded, unit, threads);
        if (table_mass(folded) != pow_int(n, long(level) * d))
            throw std::logic_error("j_count: mass conservation failed at level " + std::to_string(level));
    }
    Int total(0);
    for (const auto& [key, count] : folded) total += count * count;
    return total;
}

Int j_brute(int s, int d, int k, long n, const CountLimits& limits) {
    if (s < 1 || d < 1 || k < 1 || n < 1) throw std::invalid_argument("j_brute: bad parameters");
    const double tuples = std::pow(double(n), double(2 * s * d));
    if (tuples > limits.max_brute_tuples)
        throw TooLargeError("j_brute: N^(2sd) = " + std::to_string(tuples) + " tuples exceeds budget");

    const auto points = grid_points(d, n);
    std::vector<std::vector<Int>> moments;
    moments.reserve(points.size());
    for (const auto& x : points) moments.push_back(moment_vector(d, k, x));

    // Every s-tuple of points, as an odometer over point indices.
    std::vector<std::vector<Int>> sums;
    std::vector<std::size_t> pick(s, 0);
    while (true) {
        std::vector<Int> total(moments[0].size(), Int(0));
        for (int i = 0; i < s; ++i) total = add_keys(total, moments[pick[i]]);
        sums.push_back(std::move(total));
        int pos = s - 1;
        while (pos >= 0 && pick[pos] + 1 == points.size()) pick[pos--] = 0;
        if (pos < 0) break;
        ++pick[pos];
    }

    Int count(0);
    for (const auto& left : sums)
        for (const auto& right : sums)
            if (left == right) count += 1;
    return count;
}

double log2_int(const Int& v) {
    signed long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(mant) + double(exp);
}

GrowthReport growth_report(int s, int d, int k, long nmax, int threads, const CountLimits& limits) {
    GrowthReport report;
    report.s = s;
    report.d = d;
    report.k = k;
    report.ell = lower_exponent(s, d, k);
    for (long n = 2; n <= nmax; n *= 2) {
        GrowthRow row;
        row.n = n;
        row.j = j_count(s, d, k, n, threads, limits);
        if (row.j < pow_int(n, long(s) * d))
            throw std::logic_error("growth_report: J(N) < N^{sd} at N = " + std::to_string(n));
        if (!report.rows.empty()) row.slope = log2_int(row.j) - log2_int(report.rows.back().j);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace pvlab
