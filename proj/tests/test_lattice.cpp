#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pvlab/exponents.hpp"
#include "pvlab/lattice.hpp"

using namespace pvlab;

namespace {
PointSet pts(std::initializer_list<Point> list) { return PointSet(list); }
}  // namespace

TEST_CASE("canonical simplex order") {
    const auto order = simplex_points(2, 2);
    REQUIRE(order.size() == 5);
    CHECK(order[0] == Point{1, 0});
    CHECK(order[1] == Point{0, 1});
    CHECK(order[2] == Point{2, 0});
    CHECK(order[3] == Point{1, 1});
    CHECK(order[4] == Point{0, 2});
}

TEST_CASE("dominance") {
    CHECK(dominated_by({1, 1}, {2, 1}));
    CHECK_FALSE(dominated_by({2, 0}, {1, 1}));
    CHECK(dominated_by({0, 0}, {0, 0}));
}

TEST_CASE("positive extension matches the level-4 diagrams") {
    const PointSet t = pts({{1, 1}, {3, 0}});
    const auto simplex = positive_extension_simplex(t, 2, 4);
    CHECK(simplex == pts({{3, 0}, {4, 0}, {1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {1, 3}}));

    const auto box = positive_extension_box(t, 2, 4);
    CHECK(box.size() == 18);
    // Two cells in the bottom row, four in each of rows 1..4.
    for (int y = 1; y <= 4; ++y)
        for (int x = 1; x <= 4; ++x) CHECK(box.count({x, y}) == 1);
    CHECK(box.count({3, 0}) == 1);
    CHECK(box.count({4, 0}) == 1);
    CHECK(box.count({0, 0}) == 0);

    CHECK(positive_extension_simplex({}, 2, 4).empty());
    CHECK(positive_extension_box({}, 2, 4).empty());
}

TEST_CASE("layers") {
    const PointSet b = pts({{1, 1}, {3, 0}});
    CHECK(layer(b, 2, 1).empty());
    CHECK(layer(b, 2, 2) == pts({{1, 1}}));
    CHECK(layer(b, 2, 3) == pts({{3, 0}, {2, 1}, {1, 2}}));
    CHECK(layer(b, 2, 4).size() == 4);

    PointSet unioned;
    for (int m = 1; m <= 4; ++m)
        for (const auto& p : layer(b, 2, m)) unioned.insert(p);
    CHECK(unioned == positive_extension_simplex(b, 2, 4));
}

TEST_CASE("predecessor on the shell diagram") {
    const PointSet t = pts({{4, 0}, {3, 1}, {2, 2}, {0, 4}});
    CHECK(predecessor(t, 2, 4) == pts({{3, 0}, {2, 1}}));

    PointSet full;
    for (const auto& p : shell_points(2, 4)) full.insert(p);
    PointSet full_prev;
    for (const auto& p : shell_points(2, 3)) full_prev.insert(p);
    CHECK(predecessor(full, 2, 4) == full_prev);
    CHECK(predecessor({}, 2, 4).empty());
}

TEST_CASE("predecessor contraction") {
    const PointSet t = pts({{4, 0}, {3, 1}, {2, 2}, {0, 4}});
    CHECK(predecessor_contraction_report(t, 2, 4).passed());

    PointSet full;
    for (const auto& p : shell_points(2, 4)) full.insert(p);
    CHECK(predecessor_contraction_report(full, 2, 4).passed());

    // Exhaustive over every subset of every shell, d <= 3, m <= 4.
    for (int d = 2; d <= 3; ++d)
        for (int m = 2; m <= 4; ++m) {
            const auto shell = shell_points(d, m);
            const int nb = int(shell.size());
            REQUIRE(nb <= 20);
            for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << nb); ++bits) {
                PointSet sub;
                for (int i = 0; i < nb; ++i)
                    if (bits & (std::uint64_t(1) << i)) sub.insert(shell[i]);
                CHECK(predecessor_contraction_report(sub, d, m).passed());
            }
        }
}

TEST_CASE("closure algebra over every small subset") {
    // Every (d, l) with at most 12 base points: the closure decomposes into
    // disjoint layers, lower layers embed in the predecessor of the next,
    // and the extension is extensive, idempotent and monotone.
    for (int d = 1; d <= 5; ++d)
        for (int l = 1; l <= 4; ++l) {
            const auto base = simplex_points(d, l);
            const int nb = int(base.size());
            if (nb > 12) continue;
            for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << nb); ++bits) {
                PointSet b;
                for (int i = 0; i < nb; ++i)
                    if (bits & (std::uint64_t(1) << i)) b.insert(base[i]);

                const auto closure = positive_extension_simplex(b, d, l);
                long in_layers = 0;
                for (int m = 1; m <= l; ++m) {
                    const auto lay = layer(b, d, m);
                    in_layers += long(lay.size());
                    for (const auto& p : lay) CHECK(closure.count(p) == 1);
                }
                CHECK(in_layers == long(closure.size()));  // layers are disjoint by weight

                for (int m = 2; m <= l + 1; ++m) {
                    const auto lower = layer(b, d, m - 1);
                    const auto pred = predecessor(layer(b, d, m), d, m);
                    for (const auto& p : lower) CHECK(pred.count(p) == 1);
                }

                for (const auto& p : b) CHECK(closure.count(p) == 1);               // extensive
                CHECK(positive_extension_simplex(closure, d, l) == closure);        // idempotent
                if (!b.empty()) {
                    PointSet shrunk = b;
                    shrunk.erase(shrunk.begin());
                    const auto smaller = positive_extension_simplex(shrunk, d, l);  // monotone
                    for (const auto& p : smaller) CHECK(closure.count(p) == 1);
                }
            }
        }
}

TEST_CASE("shell counts") {
    for (int q = 0; q <= 12; ++q) CHECK(shell_count(q, 0) == 1);
    for (int q = 0; q <= 12; ++q) CHECK(shell_count(q, 1) == q + 1);
    CHECK(shell_count(2, 2) == 6);
    // Recursion Lambda_{q,e} = sum_{j<=q} Lambda_{j,e-1}.
    for (int e = 1; e <= 4; ++e)
        for (int q = 0; q <= 10; ++q) {
            Int total(0);
            for (int j = 0; j <= q; ++j) total += shell_count(j, e - 1);
            CHECK(total == shell_count(q, e));
        }
    // Shell enumeration agrees.
    for (int d = 1; d <= 4; ++d)
        for (int m = 1; m <= 5; ++m)
            CHECK(shell_count(m, d - 1) == Int(long(shell_points(d, m).size())));
}

TEST_CASE("prefix-ratio convexity") {
    for (int e = 0; e <= 4; ++e) CHECK(convexity_report(e, 12).passed());
}

TEST_CASE("closure ratio inequality") {
    // Frozen diagram case: B = {(1,1),(3,0)} has closures of sizes 4 and 8.
    const PointSet b = pts({{1, 1}, {3, 0}});
    CHECK(positive_extension_simplex(b, 2, 3).size() == 4);
    CHECK(positive_extension_simplex(b, 2, 4).size() == 8);
    CHECK(Int(4) * monomial_count(2, 4) < monomial_count(2, 3) * Int(8));

    for (auto [d, l, k] : {std::array<int, 3>{2, 1, 2}, {2, 1, 3}, {2, 2, 3}, {2, 2, 4}, {2, 3, 4},
                           {3, 1, 2}, {3, 1, 3}, {3, 2, 3}, {2, 4, 5}}) {
        const auto report = frac_inequality_report(d, l, k);
        INFO(report.name, " -> ", report.witness.dump());
        CHECK(report.passed());
    }

    // The guard fires instead of attempting 2^35 subsets.
    CHECK(frac_inequality_report(4, 3, 4).status == CheckStatus::guarded);
}

TEST_CASE("predecessor contraction on sampled subsets of a large shell") {
    // d = 4, m = 3: 2^20 subsets is past the exhaustive budget; a seeded
    // sample still exercises the inequality widely.
    const auto shell = shell_points(4, 3);
    const int nb = int(shell.size());
    REQUIRE(nb == 20);
    std::uint64_t state = 12345;
    auto next = [&state] {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint64_t bits = next() % (std::uint64_t(1) << nb);
        PointSet sub;
        for (int i = 0; i < nb; ++i)
            if (bits & (std::uint64_t(1) << i)) sub.insert(shell[i]);
        const auto report = predecessor_contraction_report(sub, 4, 3);
        INFO(report.witness.dump());
        CHECK(report.passed());
    }
}

TEST_CASE("sharp complement") {
    const auto sharp = sharp_complement(2, 4, pts({{1, 1}, {3, 0}}));
    CHECK(sharp.bound == 7);
    CHECK(sharp.a_set == pts({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}}));
    CHECK(sharp.witness_valid);

    // The zero vector dominates everything: empty complement.
    const auto zero = sharp_complement(2, 3, pts({{0, 0}}));
    CHECK(zero.bound == 0);
    CHECK(zero.a_set.empty());
    CHECK(zero.witness_valid);
}

TEST_CASE("deficiency") {
    CHECK(deficiency(1, 3, pts({{2}})) == 2);   // closure {2,3}
    CHECK(deficiency(1, 3, pts({{2}, {1}})) == 3);  // closure {1,2,3}
    CHECK(deficiency(2, 3, {}) == 0);
    CHECK(deficiency(2, 3, pts({{0, 0}})) == 16);  // zero tuple fills the box

    for (int d = 1; d <= 2; ++d)
        for (int k = 1; k <= 3; ++k) {
            const auto report = deficiency_report(d, k);
            INFO(report.name, " -> ", report.witness.dump());
            CHECK(report.passed());
        }
}

TEST_CASE("ambient membership is enforced") {
    CHECK_THROWS_AS(positive_extension_simplex(pts({{0, 0}}), 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(positive_extension_simplex(pts({{4, 0}}), 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(positive_extension_box(pts({{4, 0}}), 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(predecessor(pts({{2, 1}}), 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(layer(pts({{1}}), 2, 2), std::invalid_argument);
}
