#include "pvlab/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pvlab/exponents.hpp"

namespace pvlab {

int weight(const Point& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool dominated_by(const Point& lo, const Point& hi) {
    if (lo.size() != hi.size()) throw std::invalid_argument("dominated_by: dimension mismatch");
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i]) return false;
    return true;
}

namespace {

void emit_shell(int d, int m, Point& buf, int pos, int remaining, std::vector<Point>& out) {
    if (pos == d - 1) {
        buf[pos] = remaining;
        out.push_back(buf);
        return;
    }
    // First coordinate as large as possible first.
    for (int v = remaining; v >= 0; --v) {
        buf[pos] = v;
        emit_shell(d, m, buf, pos + 1, remaining - v, out);
    }
}

bool in_closure(const PointSet& b, const Point& p) {
    for (const auto& base : b)
        if (dominated_by(base, p)) return true;
    return false;
}

// Every member must sit inside the declared ambient set.
void require_members(const PointSet& t, int d, int min_weight, int max_weight, int max_coord,
                     const char* who) {
    for (const auto& p : t) {
        if (int(p.size()) != d) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
        for (int c : p)
            if (c < 0 || (max_coord >= 0 && c > max_coord))
                throw std::invalid_argument(std::string(who) + ": coordinate outside the ambient");
        const int w = weight(p);
        if (w < min_weight || (max_weight >= 0 && w > max_weight))
            throw std::invalid_argument(std::string(who) + ": weight outside the ambient");
    }
}

}  // namespace

std::vector<Point> shell_points(int d, int m) {
    std::vector<Point> out;
    Point buf(d);
    emit_shell(d, m, buf, 0, m, out);
    return out;
}

std::vector<Point> simplex_points(int d, int l) {
    std::vector<Point> out;
    for (int m = 1; m <= l; ++m) {
        auto shell = shell_points(d, m);
        out.insert(out.end(), shell.begin(), shell.end());
    }
    return out;
}

std::vector<Point> box_points(int d, int l) {
    std::vector<Point> out;
    Point buf(d, 0);
    while (true) {
        out.push_back(buf);
        int pos = d - 1;
        while (pos >= 0 && buf[pos] == l) buf[pos--] = 0;
        if (pos < 0) break;
        ++buf[pos];
    }
    return out;
}

PointSet positive_extension_simplex(const PointSet& t, int d, int lp) {
    require_members(t, d, 1, lp, -1, "positive_extension_simplex");
    PointSet out;
    for (const auto& p : simplex_points(d, lp))
        if (in_closure(t, p)) out.insert(p);
    return out;
}

PointSet positive_extension_box(const PointSet& t, int d, int lp) {
    require_members(t, d, 0, -1, lp, "positive_extension_box");
    PointSet out;
    for (const auto& p : box_points(d, lp))
        if (in_closure(t, p)) out.insert(p);
    return out;
}

PointSet layer(const PointSet& b, int d, int m) {
    require_members(b, d, 0, -1, -1, "layer");
    PointSet out;
    for (const auto& p : shell_points(d, m))
        if (in_closure(b, p)) out.insert(p);
    return out;
}

PointSet predecessor(const PointSet& t, int d, int m) {
    if (m <= 1) throw std::invalid_argument("predecessor: requires m > 1");
    require_members(t, d, m, m, -1, "predecessor");
    PointSet out;
    for (auto p : shell_points(d, m - 1)) {
        bool all_bumps_in = true;
        for (int i = 0; i < d && all_bumps_in; ++i) {
            ++p[i];
            all_bumps_in = t.count(p) > 0;
            --p[i];
        }
        if (all_bumps_in) out.insert(p);
    }
    return out;
}

CheckReport predecessor_contraction_report(const PointSet& t, int d, int m) {
    const std::string name = "predecessor-contraction d=" + std::to_string(d) + " m=" + std::to_string(m);
    const Int shell_m = shell_count(m, d - 1);
    const Int shell_prev = shell_count(m - 1, d - 1);
    const auto pred = predecessor(t, d, m);
    const Int lhs = Int(long(pred.size())) * shell_m;
    const Int rhs = shell_prev * Int(long(t.size()));
    const bool trivial = t.empty() || Int(long(t.size())) == shell_m;

    nlohmann::json w{{"size", t.size()}, {"predecessor_size", pred.size()},
                     {"shell", shell_m.get_str()}, {"shell_prev", shell_prev.get_str()}};
    if (lhs > rhs) {
        w["error"] = "ContractionViolated";
        return CheckReport::fail(name, w);
    }
    if (lhs == rhs && !trivial) {
        w["error"] = "ContractionViolated (equality on a nontrivial set)";
        return CheckReport::fail(name, w);
    }
    return CheckReport::pass(name, w);
}

Int shell_count(int q, int e) {
    if (q < 0 || e < 0) throw std::invalid_argument("shell_count: negative argument");
    return binomial(long(q) + e, e);
}

CheckReport convexity_report(int e, int qmax) {
    const std::string name = "shell-convexity e=" + std::to_string(e) + " qmax=" + std::to_string(qmax);
    Int prefix(0);
    for (int q = 0; q <= qmax; ++q) {
        prefix += shell_count(q, e);
        // prefix/Lambda_{q+1} < (prefix + Lambda_{q+1})/Lambda_{q+2}, cross-multiplied.
        const Int lhs = prefix * shell_count(q + 2, e);
        Int rhs = prefix + shell_count(q + 1, e);
        rhs *= shell_count(q + 1, e);
        if (!(lhs < rhs)) {
            return CheckReport::fail(name, {{"error", "ConvexityViolated"}, {"q", q},
                                            {"lhs", lhs.get_str()}, {"rhs", rhs.get_str()}});
        }
    }
    return CheckReport::pass(name, {{"qmax", qmax}});
}

namespace {

std::string point_str(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

nlohmann::json points_json(const PointSet& ps) {
    auto arr = nlohmann::json::array();
    for (const auto& p : ps) arr.push_back(point_str(p));
    return arr;
}

}  // namespace

CheckReport frac_inequality_report(int d, int l, int k, int max_base_points) {
    const std::string name = "closure-ratio d=" + std::to_string(d) + " l=" + std::to_string(l) +
                             " k=" + std::to_string(k);
    if (!(1 <= l && l < k)) throw std::invalid_argument("frac_inequality_report: requires 1 <= l < k");

    const auto base = simplex_points(d, l);
    const int nb = int(base.size());
    if (nb > max_base_points)
        return CheckReport::guarded(name, {{"error", "TooLarge"}, {"base_points", nb},
                                           {"budget", max_base_points}});

    const auto& level_l = base;
    const auto level_k = simplex_points(d, k);
    const Int nl = monomial_count(d, l);
    const Int nk = monomial_count(d, k);

    // dominators[j] = bitmask over base points that are <= target point j.
    auto masks_for = [&base](const std::vector<Point>& targets) {
        std::vector<std::uint64_t> masks(targets.size(), 0);
        for (std::size_t j = 0; j < targets.size(); ++j)
            for (int i = 0; i < int(base.size()); ++i)
                if (dominated_by(base[i], targets[j])) masks[j] |= std::uint64_t(1) << i;
        return masks;
    };
    const auto masks_l = masks_for(level_l);
    const auto masks_k = masks_for(level_k);

    long checked = 0;
    for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << nb); ++bits) {
        long closure_l = 0, closure_k = 0;
        for (const auto m : masks_l) closure_l += (m & bits) != 0;
        for (const auto m : masks_k) closure_k += (m & bits) != 0;
        const bool full = Int(closure_l) == nl;
        const Int lhs = Int(closure_l) * nk;
        const Int rhs = nl * Int(closure_k);
        const bool ok = full ? (lhs == rhs) : (lhs < rhs);
        if (!ok) {
            PointSet witness;
            for (int i = 0; i < nb; ++i)
                if (bits & (std::uint64_t(1) << i)) witness.insert(base[i]);
            return CheckReport::fail(name, {{"error", "InequalityViolated"},
                                            {"B", points_json(witness)},
                                            {"closure_l", closure_l},
                                            {"closure_k", closure_k}});
        }
        ++checked;
    }
    return CheckReport::pass(name, {{"subsets", checked}});
}

SharpComplement sharp_complement(int d, int k, const PointSet& b) {
    if (b.empty()) throw std::invalid_argument("sharp_complement: B must be nonempty");
    // Ambient is the level-k simplex together with the origin.
    std::vector<Point> ambient = simplex_points(d, k);
    ambient.insert(ambient.begin(), Point(d, 0));

    SharpComplement out;
    long closure = 0;
    for (const auto& p : ambient) {
        if (in_closure(b, p))
            ++closure;
        else
            out.a_set.insert(p);
    }
    out.bound = monomial_count(d, k) + 1 - Int(closure);

    // Witness property of the restriction family R_{i;*;b} = [b_i - 1]:
    // every a in A must fall below some b in every comparison chain, i.e.
    // a_i < b_i for at least one coordinate.
    out.witness_valid = Int(long(out.a_set.size())) == out.bound;
    for (const auto& a : out.a_set)
        for (const auto& bb : b) {
            bool below_somewhere = false;
            for (int i = 0; i < d; ++i)
                if (a[i] < bb[i]) { below_somewhere = true; break; }
            if (!below_somewhere) out.witness_valid = false;
        }
    return out;
}

namespace {

Int deficiency_recurse(int d, int k, const std::vector<Point>& b) {
    if (b.empty()) return Int(0);
    if (d == 1) {
        // A line admits at most min_b b_1 surviving values, so min_b b_1 of
        // its k+1 cells are free and the rest are forced out.
        int best = b.front()[0];
        for (const auto& p : b) best = std::min(best, p[0]);
        return Int(k + 1 - best);
    }
    Int total(0);
    for (int j = 0; j <= k; ++j) {
        std::vector<Point> slice;
        for (const auto& p : b)
            if (p.back() <= j) slice.emplace_back(p.begin(), p.end() - 1);
        // Identical projections collapse.
        std::sort(slice.begin(), slice.end());
        slice.erase(std::unique(slice.begin(), slice.end()), slice.end());
        total += deficiency_recurse(d - 1, k, slice);
    }
    return total;
}

}  // namespace

Int deficiency(int d, int k, const PointSet& b) {
    return deficiency_recurse(d, k, std::vector<Point>(b.begin(), b.end()));
}

CheckReport deficiency_report(int d, int k, long max_subsets) {
    const std::string name = "deficiency-sweep d=" + std::to_string(d) + " k=" + std::to_string(k);
    const auto box = box_points(d, k);
    const int nb = int(box.size());
    if (nb >= 62 || (long(1) << nb) > max_subsets)
        return CheckReport::guarded(name, {{"error", "TooLarge"}, {"box_points", nb}});

    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << nb); ++bits) {
        PointSet b;
        for (int i = 0; i < nb; ++i)
            if (bits & (std::uint64_t(1) << i)) b.insert(box[i]);
        const Int lhs = deficiency(d, k, b);
        const Int rhs = Int(long(positive_extension_box(b, d, k).size()));
        if (lhs != rhs)
            return CheckReport::fail(name, {{"B", points_json(b)},
                                            {"deficiency", lhs.get_str()},
                                            {"closure_size", rhs.get_str()}});
    }
    return CheckReport::pass(name, {{"subsets", (long(1) << nb)}});
}

}  // namespace pvlab
