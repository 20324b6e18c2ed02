#include "pvlab/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "pvlab/blrank.hpp"
#include "pvlab/counting.hpp"
#include "pvlab/exponents.hpp"
#include "pvlab/iteration.hpp"
#include "pvlab/lattice.hpp"
#include "pvlab/multiplicity.hpp"

namespace pvlab {

const char* kToolVersion = "0.1.0";

namespace {

using nlohmann::json;

json rat_array(const std::vector<Rat>& v, std::size_t first) {
    auto arr = json::array();
    for (std::size_t i = first; i < v.size(); ++i) arr.push_back(v[i].str());
    return arr;
}

json matrix_json(const RatMatrix& m) {
    auto rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        auto row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

CheckReport exact_check(const std::string& name, bool ok, json witness) {
    return ok ? CheckReport::pass(name, std::move(witness)) : CheckReport::fail(name, std::move(witness));
}

int log2_floor(long v) {
    int b = 0;
    while ((1L << (b + 1)) <= v) ++b;
    return b;
}

// ---- exponent invariants ---------------------------------------------------

std::vector<CheckReport> exponent_suite(int dmax, int kmax) {
    std::vector<CheckReport> out;

    {
        bool ok = true;
        for (int k = 1; k <= std::max(20, kmax); ++k)
            ok = ok && kappa_weight(1, k) == Rat(long(k) * (k + 1), 2);
        out.push_back(exact_check("kappa-first-row", ok, {{"kmax", std::max(20, kmax)}}));
    }
    {
        bool ok = true;
        for (int d = 1; d <= std::max(10, dmax); ++d) ok = ok && critical_p(d, 1) == Rat(2);
        out.push_back(exact_check("critical-p-at-degree-one", ok, {{"dmax", std::max(10, dmax)}}));
    }
    {
        // At p = critical_p(d,k) the volume branch ties the top branch.
        bool ok = true;
        json w;
        for (int d = 1; d <= std::max(8, dmax) && ok; ++d)
            for (int k = 2; k <= std::max(10, kmax) && ok; ++k) {
                const Rat pc = critical_p(d, k);
                const Rat lhs = (Rat(1, 2) - pc.reciprocal()) * Rat(d);
                const Rat rhs = (Rat(1) - pc.reciprocal()) * Rat(d) - kappa_weight(d, k) / pc;
                if (lhs != rhs) { ok = false; w = {{"d", d}, {"k", k}}; }
            }
        out.push_back(exact_check("critical-branch-tie", ok, w));
    }
    {
        // Below 2 n_d(k)/d the (d-1)-dimensional value and the volume branch
        // already realize the full max.
        bool ok = true;
        json w;
        for (int d = 2; d <= std::max(6, dmax) && ok; ++d)
            for (int k = 2; k <= std::max(8, kmax) && ok; ++k) {
                const Rat top = Rat(2) * Rat(monomial_count(d, k)) / Rat(d);
                for (int i = 0; i < 10 && ok; ++i) {
                    const Rat p = Rat(2) + (top - Rat(2)) * Rat(i, 9);
                    const Rat volume = Rat(d) * (Rat(1, 2) - p.reciprocal());
                    const Rat lower = gamma_exponent(d - 1, k, p);
                    const Rat collapsed = lower > volume ? lower : volume;
                    if (collapsed != gamma_exponent(d, k, p)) { ok = false; w = {{"d", d}, {"k", k}, {"p", p.str()}}; }
                }
            }
        out.push_back(exact_check("small-p-collapse", ok, w));
    }
    {
        bool ok = true;
        json w;
        for (int d = 1; d <= std::max(8, dmax) && ok; ++d)
            for (int k = 2; k <= std::max(10, kmax) && ok; ++k) {
                try {
                    ExponentTable::make(d, k, Rat(2) * Rat(monomial_count(d, k)));  // large p
                } catch (const std::exception& e) {
                    ok = false;
                    w = {{"d", d}, {"k", k}, {"error", e.what()}};
                }
            }
        out.push_back(exact_check("table-invariants", ok, w));
    }
    {
        // Each branch of the sharp exponent grows with p.
        bool ok = true;
        for (int d = 1; d <= dmax && ok; ++d)
            for (int k = 2; k <= kmax && ok; ++k) {
                Rat prev = gamma_exponent(d, k, Rat(2));
                for (long i = 1; i <= 20 && ok; ++i) {
                    const Rat p = Rat(2) + Rat(49 * i, 10);
                    const Rat cur = gamma_exponent(d, k, p);
                    ok = ok && prev <= cur;
                    prev = cur;
                }
            }
        out.push_back(exact_check("gamma-monotone", ok, {}));
    }
    {
        // p_j n_1 + p_1 s_{j-1} = j p_1 n_j.
        bool ok = true;
        json w;
        for (int d = 1; d <= std::max(8, dmax) && ok; ++d)
            for (int k = 2; k <= std::max(10, kmax) && ok; ++k) {
                Rat s_prev(0);
                for (int j = 1; j <= k && ok; ++j) {
                    const Rat lhs = critical_p(d, j) * Rat(d) + Rat(2) * s_prev;
                    const Rat rhs = Rat(2 * j) * Rat(monomial_count(d, j));
                    if (lhs != rhs) { ok = false; w = {{"d", d}, {"k", k}, {"j", j}}; }
                    s_prev += Rat(monomial_count(d, j));
                }
            }
        out.push_back(exact_check("index-identity-sweep", ok, w));
    }
    return out;
}

// ---- iteration sweep -------------------------------------------------------

std::vector<CheckReport> iteration_suite(int dmax, int kmax, int pgrid) {
    std::vector<CheckReport> out;
    for (int d = 1; d <= dmax; ++d)
        for (int k = 2; k <= kmax; ++k) {
            const std::string tag = " d=" + std::to_string(d) + " k=" + std::to_string(k);
            try {
                const auto cert = contraction_certificate(iteration_matrix(d, k));
                out.push_back(CheckReport::pass("contraction" + tag, {{"certificate", rat_array(cert, 0)}}));
            } catch (const Error& e) {
                out.push_back(CheckReport::fail("contraction" + tag, {{"error", e.what()}}));
            }
            const Rat threshold = regime_threshold(d, k);
            for (int i = 1; i <= pgrid; ++i) {
                const Rat p = threshold + Rat(i);
                auto checks = identity_checks(d, k, p);
                out.insert(out.end(), checks.begin(), checks.end());
                out.push_back(lambda_bound_report(d, k, p));
            }
            // At the critical exponent the bound is tight exactly when the
            // volume branch attains the max there; intermediate branches can
            // dominate for d >= 3 and leave positive slack.
            const Rat pc = critical_p(d, k);
            if (pc > threshold) {
                const auto b = lambda_bound(d, k, pc);
                const Rat volume = Rat(d) * (Rat(1, 2) - pc.reciprocal());
                const bool ok = b.slack >= Rat(0) && (b.gamma == volume) == b.slack.is_zero();
                out.push_back(exact_check("critical-tightness" + tag, ok,
                                          {{"p", pc.str()},
                                           {"slack", b.slack.str()},
                                           {"volume_branch_attained", b.gamma == volume}}));
            }
        }
    return out;
}

// ---- comb suites -----------------------------------------------------------

PointSet to_set(std::initializer_list<Point> pts) { return PointSet(pts); }

std::vector<CheckReport> extension_regressions() {
    std::vector<CheckReport> out;
    const PointSet t = to_set({{1, 1}, {3, 0}});

    const auto simplex_ext = positive_extension_simplex(t, 2, 4);
    const PointSet simplex_expected =
        to_set({{3, 0}, {4, 0}, {1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {1, 3}});
    out.push_back(exact_check("extension-simplex-diagram", simplex_ext == simplex_expected,
                              {{"size", simplex_ext.size()}}));

    const auto box_ext = positive_extension_box(t, 2, 4);
    out.push_back(exact_check("extension-box-diagram", box_ext.size() == 18, {{"size", box_ext.size()}}));

    out.push_back(exact_check("extension-empty", positive_extension_simplex({}, 2, 4).empty(), {}));

    out.push_back(exact_check("layer-2", layer(t, 2, 2) == to_set({{1, 1}}), {}));
    out.push_back(exact_check("layer-3", layer(t, 2, 3) == to_set({{3, 0}, {2, 1}, {1, 2}}), {}));
    {
        PointSet unioned;
        for (int m = 1; m <= 4; ++m)
            for (const auto& p : layer(t, 2, m)) unioned.insert(p);
        out.push_back(exact_check("layer-decomposition-diagram", unioned == simplex_ext, {}));
    }

    const PointSet shells = to_set({{4, 0}, {3, 1}, {2, 2}, {0, 4}});
    out.push_back(exact_check("predecessor-diagram",
                              predecessor(shells, 2, 4) == to_set({{3, 0}, {2, 1}}), {}));

    {
        const auto sharp = sharp_complement(2, 4, t);
        const PointSet expected =
            to_set({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
        out.push_back(exact_check("sharp-complement-diagram",
                                  sharp.a_set == expected && sharp.bound == 7 && sharp.witness_valid,
                                  {{"size", sharp.a_set.size()}, {"bound", sharp.bound.get_str()}}));
    }
    return out;
}

std::vector<CheckReport> extension_sweep(int d, int l, long budget) {
    std::vector<CheckReport> out;
    const auto base = simplex_points(d, l);
    const int nb = int(base.size());
    const std::string tag = " d=" + std::to_string(d) + " l=" + std::to_string(l);
    if (nb > 20 || (1L << nb) > budget) {
        out.push_back(CheckReport::guarded("extension-sweep" + tag,
                                           {{"error", "TooLarge"}, {"base_points", nb}}));
        return out;
    }

    bool layers_ok = true, pred_ok = true, monotone_ok = true, idem_ok = true, extensive_ok = true;
    json w;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << nb); ++bits) {
        PointSet b;
        for (int i = 0; i < nb; ++i)
            if (bits & (std::uint64_t(1) << i)) b.insert(base[i]);

        const auto closure = positive_extension_simplex(b, d, l);
        long layer_total = 0;
        for (int m = 1; m <= l; ++m) {
            const auto lay = layer(b, d, m);
            layer_total += long(lay.size());
            for (const auto& p : lay)
                if (!closure.count(p)) layers_ok = false;
            if (m > 1) {
                const auto upper = layer(b, d, m);
                const auto lower = layer(b, d, m - 1);
                const auto pred = predecessor(upper, d, m);
                for (const auto& p : lower)
                    if (!pred.count(p)) pred_ok = false;
            }
        }
        if (layer_total != long(closure.size())) layers_ok = false;

        // Extensive and idempotent at the same level.
        for (const auto& p : b)
            if (!closure.count(p)) extensive_ok = false;
        if (positive_extension_simplex(closure, d, l) != closure) idem_ok = false;

        // Monotone under adding one point.
        if (!b.empty()) {
            PointSet bigger = b;
            bigger.insert(base[0]);
            const auto closure2 = positive_extension_simplex(bigger, d, l);
            for (const auto& p : closure)
                if (!closure2.count(p)) monotone_ok = false;
        }
        if (!(layers_ok && pred_ok && monotone_ok && idem_ok && extensive_ok)) {
            w = {{"bits", bits}};
            break;
        }
    }
    out.push_back(exact_check("layer-decomposition" + tag, layers_ok, w));
    out.push_back(exact_check("predecessor-inclusion" + tag, pred_ok, w));
    out.push_back(exact_check("extension-monotone" + tag, monotone_ok, w));
    out.push_back(exact_check("extension-idempotent" + tag, idem_ok, w));
    out.push_back(exact_check("extension-extensive" + tag, extensive_ok, w));
    return out;
}

std::vector<CheckReport> predecessor_contraction_sweep(int dmax, int mmax, long budget) {
    std::vector<CheckReport> out;
    for (int d = 2; d <= dmax; ++d)
        for (int m = 2; m <= mmax; ++m) {
            const auto shell = shell_points(d, m);
            const int nb = int(shell.size());
            const std::string tag = " d=" + std::to_string(d) + " m=" + std::to_string(m);
            if (nb > 24 || (1L << nb) > budget) {
                out.push_back(CheckReport::guarded("predecessor-contraction-sweep" + tag,
                                                   {{"error", "TooLarge"}, {"shell_points", nb}}));
                continue;
            }
            bool ok = true;
            json w;
            for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << nb) && ok; ++bits) {
                PointSet t;
                for (int i = 0; i < nb; ++i)
                    if (bits & (std::uint64_t(1) << i)) t.insert(shell[i]);
                const auto report = predecessor_contraction_report(t, d, m);
                if (!report.passed()) { ok = false; w = report.witness; }
            }
            out.push_back(exact_check("predecessor-contraction-sweep" + tag, ok, w));
        }
    return out;
}

std::vector<CheckReport> multiplicity_suite(int grid) {
    std::vector<CheckReport> out;

    {
        CubeCollection column{2, 4, to_set({{0, 0}, {0, 1}, {0, 2}})};
        const auto info = multiplicity(column);
        out.push_back(exact_check("multiplicity-column",
                                  info.per_axis == std::vector<long>{1, 3} && info.overall == 1,
                                  {{"per_axis", info.per_axis}}));
        out.push_back(split_report(column, "column"));
    }
    {
        CubeCollection full{2, 4, {}};
        for (const auto& p : box_points(2, 3)) full.cells.insert(p);
        const auto info = multiplicity(full);
        const auto parts = greedy_split(full);
        out.push_back(exact_check("multiplicity-full-grid",
                                  info.overall == 4 && parts.size() == 4,
                                  {{"overall", info.overall}, {"parts", parts.size()}}));
        out.push_back(split_report(full, "full-grid"));
    }
    {
        // Graph of x2 = x1^2 sampled on the grid.
        Poly parabola{1, {{{2}, Rat(1)}}};
        const auto cells = sample_graph_cells(parabola, 2, grid);
        out.push_back(split_report(cells, "parabola-grid" + std::to_string(grid)));
        if (grid == 10) {
            const auto parts = greedy_split(cells);
            out.push_back(exact_check("parabola-part-count", parts.size() <= 3,
                                      {{"parts", parts.size()}, {"cells", cells.cells.size()}}));
        }
    }
    {
        // A saddle surface x3 = x1 * x2 in three dimensions.
        Poly saddle{2, {{{1, 1}, Rat(1)}}};
        const auto cells = sample_graph_cells(saddle, 3, std::min(grid, 8));
        out.push_back(split_report(cells, "saddle"));
    }
    return out;
}

std::vector<CheckReport> comb_suite(const RunConfig& cfg) {
    std::vector<CheckReport> out;
    if (cfg.suite == "extension") {
        if (cfg.d == 2) {
            auto reg = extension_regressions();
            out.insert(out.end(), reg.begin(), reg.end());
        }
        auto sweep = extension_sweep(cfg.d, cfg.l, cfg.budget);
        out.insert(out.end(), sweep.begin(), sweep.end());
        auto pred = predecessor_contraction_sweep(std::max(2, cfg.d), std::max(2, cfg.l + 1), cfg.budget);
        out.insert(out.end(), pred.begin(), pred.end());
        out.push_back(convexity_report(cfg.d - 1, 12));
    } else if (cfg.suite == "frac") {
        out.push_back(frac_inequality_report(cfg.d, cfg.l, cfg.k, log2_floor(cfg.budget)));
    } else if (cfg.suite == "deficiency") {
        out.push_back(deficiency_report(cfg.d, cfg.k, cfg.budget));
    } else if (cfg.suite == "multiplicity") {
        return multiplicity_suite(cfg.grid);
    } else {
        throw std::invalid_argument("comb: unknown suite \"" + cfg.suite + "\"");
    }
    return out;
}

// ---- blcheck ---------------------------------------------------------------

RatMatrix random_basis(int ambient, int h, RationalPointSource& scalars) {
    while (true) {
        RatMatrix basis(ambient, h);
        for (int r = 0; r < ambient; ++r)
            for (int c = 0; c < h; ++c) {
                // Recenter into (-1/2, 1/2) so signs vary.
                basis.at(r, c) = scalars.next()[0] - Rat(1, 2);
            }
        if (rank(basis) == h) return basis;
    }
}

json certificate_json(const RankCertificate& cert) {
    auto point = json::array();
    for (const auto& c : cert.point) point.push_back(c.str());
    return json{{"point", point}, {"order", cert.order}, {"rows", cert.rows},
                {"cols", cert.cols}, {"minor", cert.minor_value.str()},
                {"trials_used", cert.trials_used}};
}

std::vector<CheckReport> blcheck_suite(const RunConfig& cfg) {
    std::vector<CheckReport> out;
    if (cfg.monomial_sweep) {
        out.push_back(monomial_rank_report(cfg.d, cfg.k, cfg.l, std::min(14, log2_floor(cfg.budget))));
        return out;
    }
    const auto map = monomial_map(cfg.d, cfg.k);
    const int ambient = int(map.exponents.size());
    if (ambient < 2) {
        out.push_back(CheckReport::degenerate("certify-rank", {{"error", "ambient dimension < 2"}}));
        return out;
    }
    RationalPointSource scalars(1, cfg.seed * 0x9e3779b97f4a7c15ULL + 1);
    for (int c = 0; c < cfg.random_cases; ++c) {
        const int h = 1 + int((cfg.seed + 7919ULL * c) % std::uint64_t(ambient - 1));
        const auto v = Subspace::make(random_basis(ambient, h, scalars));
        const auto cert = certify_rank(map, v, cfg.l, cfg.trials, cfg.seed + c);
        const std::string name = "certify-rank case=" + std::to_string(c) + " H=" + std::to_string(h);
        if (cert) {
            out.push_back(CheckReport::pass(name, certificate_json(*cert)));
        } else {
            out.push_back(CheckReport::fail(name, {{"error", "Exhausted"}, {"trials", cfg.trials}}));
        }
    }
    return out;
}

// ---- counting --------------------------------------------------------------

// Runs one named counting check, mapping resource guards to guarded status.
CheckReport guarded_counting_check(const std::string& name, const std::function<CheckReport()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        return CheckReport::guarded(name, {{"error", e.what()}});
    }
}

std::vector<CheckReport> counting_suite(long nmax, int threads, long budget) {
    std::vector<CheckReport> out;
    CountLimits limits;
    limits.max_table = budget;

    out.push_back(guarded_counting_check("oracle-equivalence", [&] {
        bool ok = true;
        json w;
        const long ncap = std::min(nmax, 4L);
        for (int s = 1; s <= 2 && ok; ++s)
            for (int d = 1; d <= 2 && ok; ++d)
                for (int k = 1; k <= 3 && ok; ++k)
                    for (long n = 1; n <= ncap && ok; ++n) {
                        const Int fast = j_count(s, d, k, n, threads, limits);
                        const Int slow = j_brute(s, d, k, n, limits);
                        if (fast != slow)
                            { ok = false; w = {{"s", s}, {"d", d}, {"k", k}, {"N", n},
                                               {"fast", fast.get_str()}, {"brute", slow.get_str()}}; }
                    }
        return exact_check("oracle-equivalence", ok, w);
    }));
    out.push_back(guarded_counting_check("pair-closed-form", [&] {
        bool ok = true;
        json w;
        for (long n = 1; n <= std::min(nmax, 32L) && ok; ++n) {
            const Int expected = Int(2 * n * n - n);
            const Int got = j_count(2, 1, 2, n, threads, limits);
            if (got != expected) { ok = false; w = {{"N", n}, {"J", got.get_str()}}; }
        }
        return exact_check("pair-closed-form", ok, w);
    }));
    out.push_back(guarded_counting_check("single-summand", [&] {
        bool ok = true;
        for (int d = 1; d <= 3 && ok; ++d)
            for (long n = 1; n <= 8 && ok; ++n) {
                Int grid;
                mpz_ui_pow_ui(grid.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(d));
                ok = j_count(1, d, 2, n, threads, limits) == grid;
            }
        return exact_check("single-summand", ok, {});
    }));
    out.push_back(guarded_counting_check("thread-determinism", [&] {
        const Int one = j_count(2, 2, 2, 5, 1, limits);
        const Int four = j_count(2, 2, 2, 5, 4, limits);
        return exact_check("thread-determinism", one == four,
                           {{"one", one.get_str()}, {"four", four.get_str()}});
    }));
    return out;
}

// ---- dispatch --------------------------------------------------------------

json params_json(const RunConfig& cfg) {
    json p{{"subcommand", cfg.subcommand}, {"seed", cfg.seed}, {"threads", cfg.threads}};
    if (!cfg.suite.empty()) p["suite"] = cfg.suite;
    p["d"] = cfg.d;
    p["k"] = cfg.k;
    if (cfg.p) p["p"] = cfg.p->str();
    return p;
}

std::string render_text(const json& report) {
    std::ostringstream os;
    os << report["command"].get<std::string>() << " (v" << report["tool_version"].get<std::string>()
       << ")\n";
    for (const auto& c : report["checks"]) {
        os << "  [" << c["status"].get<std::string>() << "] " << c["name"].get<std::string>();
        if (c["status"] != "pass") os << "  " << c["witness"].dump();
        os << "\n";
    }
    const auto& s = report["summary"];
    os << "summary: pass=" << s["pass"] << " fail=" << s["fail"] << " degenerate=" << s["degenerate"]
       << " guarded=" << s["guarded"] << "\n";
    return os.str();
}

}  // namespace

std::vector<CheckReport> run_all_checks(int dmax, int kmax, long budget, std::uint64_t seed,
                                        int threads) {
    std::vector<CheckReport> checks;
    auto append = [&checks](std::vector<CheckReport> more) {
        checks.insert(checks.end(), std::make_move_iterator(more.begin()),
                      std::make_move_iterator(more.end()));
    };

    append(exponent_suite(dmax, kmax));
    append(iteration_suite(dmax, kmax, 3));
    append(extension_regressions());
    append(extension_sweep(2, 3, budget));
    append(predecessor_contraction_sweep(3, 4, budget));
    for (int e = 0; e <= 4; ++e) checks.push_back(convexity_report(e, 12));
    for (auto [d, l, k] : {std::array<int, 3>{2, 1, 2}, {2, 1, 3}, {2, 2, 3}, {2, 2, 4}, {2, 3, 4},
                           {3, 1, 2}, {3, 1, 3}})
        checks.push_back(frac_inequality_report(d, l, k, log2_floor(budget)));
    for (int d = 1; d <= 2; ++d)
        for (int k = 1; k <= 3; ++k) checks.push_back(deficiency_report(d, k, budget));
    append(multiplicity_suite(10));
    for (int k = 2; k <= std::min(4, kmax); ++k)
        for (int l = 1; l < k; ++l)
            checks.push_back(monomial_rank_report(2, k, l, std::min(14, log2_floor(budget))));
    {
        RunConfig bl;
        bl.d = 2;
        bl.k = 3;
        bl.l = 1;
        bl.random_cases = 5;
        bl.trials = 32;
        bl.seed = seed;
        bl.budget = budget;
        append(blcheck_suite(bl));
    }
    append(counting_suite(16, threads, budget));
    return checks;
}

RunResult dispatch(const RunConfig& cfg) {
    const auto started = std::chrono::steady_clock::now();
    json report{{"tool_version", kToolVersion}, {"command", cfg.subcommand}, {"params", params_json(cfg)}};
    std::vector<CheckReport> checks;
    json values = json::object();
    std::string csv;

    if (cfg.subcommand == "exponents") {
        const auto table = ExponentTable::make(cfg.d, cfg.k, cfg.p);
        auto ints = json::array();
        for (int l = 1; l <= cfg.k; ++l) ints.push_back(table.n[l].get_str());
        values["n"] = ints;
        auto kap = json::array();
        for (int j = 1; j <= cfg.d; ++j) kap.push_back(table.kappa[j].str());
        values["kappa"] = kap;
        values["p_crit"] = rat_array(table.p_crit, 1);
        values["alpha"] = rat_array(table.alpha, 1);
        if (cfg.k >= 3) values["beta"] = rat_array(table.beta, 2);
        if (cfg.p) {
            values["q"] = rat_array(table.q_idx, 1);
            values["gamma"] = table.gamma->str();
            if (*cfg.p > regime_threshold(cfg.d, cfg.k)) {
                const auto loss = solve_lambda0(cfg.d, cfg.k, *cfg.p);
                values["lambda0"] = loss.lambda0->str();
            }
        }
        checks.push_back(CheckReport::pass("table-construction", {}));
    } else if (cfg.subcommand == "iterate") {
        if (!cfg.p) throw std::invalid_argument("iterate: --p is required");
        const auto m = iteration_matrix(cfg.d, cfg.k);
        values["matrix"] = matrix_json(m);
        try {
            values["certificate"] = rat_array(contraction_certificate(m), 0);
            checks.push_back(CheckReport::pass("contraction", {}));
        } catch (const Error& e) {
            checks.push_back(CheckReport::fail("contraction", {{"error", e.what()}}));
        }
        auto diffs = json::array();
        for (const auto& diff : matrix_transcription_diff(cfg.d, cfg.k))
            diffs.push_back({{"row", diff.row}, {"col", diff.col},
                             {"recurrence", diff.from_recurrence.str()},
                             {"table", diff.from_table.str()}});
        values["transcription_diff"] = diffs;
        const auto loss = solve_lambda0(cfg.d, cfg.k, *cfg.p);
        values["lambda0"] = loss.lambda0->str();
        values["w"] = rat_array(loss.w, 1);
        values["eta"] = rat_array(loss.eta, 1);
        auto ids = identity_checks(cfg.d, cfg.k, *cfg.p);
        checks.insert(checks.end(), ids.begin(), ids.end());
        checks.push_back(lambda_bound_report(cfg.d, cfg.k, *cfg.p));
    } else if (cfg.subcommand == "verify") {
        if (cfg.suite == "identities")
            checks = iteration_suite(cfg.dmax, cfg.kmax, cfg.pgrid);
        else if (cfg.suite == "exponents")
            checks = exponent_suite(cfg.dmax, cfg.kmax);
        else
            throw std::invalid_argument("verify: unknown suite \"" + cfg.suite + "\"");
    } else if (cfg.subcommand == "comb") {
        checks = comb_suite(cfg);
    } else if (cfg.subcommand == "blcheck") {
        checks = blcheck_suite(cfg);
        if (!cfg.monomial_sweep && cfg.random_cases == 0) {
            // Single certificate for the subspace of the first H coordinates.
            const auto map = monomial_map(cfg.d, cfg.k);
            const int ambient = int(map.exponents.size());
            RatMatrix basis(ambient, std::max(1, ambient / 2));
            for (int c = 0; c < basis.cols(); ++c) basis.at(c, c) = Rat(1);
            const auto cert = certify_rank(map, Subspace::make(basis), cfg.l, cfg.trials, cfg.seed);
            if (cert) {
                values["certificate"] = certificate_json(*cert);
                checks.push_back(CheckReport::pass("certify-rank-coordinate", {}));
            } else {
                checks.push_back(CheckReport::fail("certify-rank-coordinate", {{"error", "Exhausted"}}));
            }
        }
    } else if (cfg.subcommand == "count") {
        CountLimits limits;
        limits.max_table = cfg.budget;
        try {
            const auto growth = growth_report(cfg.s, cfg.d, cfg.k, cfg.n, cfg.threads, limits);
            auto rows = json::array();
            std::ostringstream lines;
            lines << "N,J,slope\n";
            for (const auto& row : growth.rows) {
                rows.push_back({{"N", row.n}, {"J", row.j.get_str()}, {"slope", row.slope}});
                lines << row.n << "," << row.j.get_str() << ",";
                if (row.n > 2) lines << row.slope;
                lines << "\n";
            }
            values["rows"] = rows;
            values["lower_exponent"] = growth.ell.str();
            csv = lines.str();
            checks.push_back(CheckReport::pass("count-lower-bound",
                                               {{"Nmax", cfg.n}, {"rows", growth.rows.size()}}));
        } catch (const Error& e) {
            checks.push_back(CheckReport::guarded("count", {{"error", e.what()}}));
        }
    } else if (cfg.subcommand == "all") {
        checks = run_all_checks(cfg.dmax, cfg.kmax, cfg.budget, cfg.seed, cfg.threads);
    } else {
        throw std::invalid_argument("unknown subcommand \"" + cfg.subcommand + "\"");
    }

    report["checks"] = json::array();
    for (const auto& c : checks) report["checks"].push_back(to_json(c));
    if (!values.empty()) report["values"] = values;
    const Summary summary = summarize(checks);
    report["summary"] = to_json(summary);
    report["wall_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

    RunResult result;
    result.exit_code = summary.fail > 0 ? 1 : 0;
    result.report = report;
    switch (cfg.format) {
        case RunConfig::Format::json: result.rendered = report.dump(2) + "\n"; break;
        case RunConfig::Format::csv: result.rendered = csv.empty() ? report.dump(2) + "\n" : csv; break;
        case RunConfig::Format::text: result.rendered = render_text(report); break;
    }
    return result;
}

}  // namespace pvlab
