#include "pvlab/multiplicity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pvlab {

namespace {

Point drop_axis(const Point& p, int axis) {
    Point out;
    out.reserve(p.size() - 1);
    for (int i = 0; i < int(p.size()); ++i)
        if (i != axis) out.push_back(p[i]);
    return out;
}

std::map<Point, std::vector<int>> lines_along(const CubeCollection& c, int axis) {
    std::map<Point, std::vector<int>> lines;
    for (const auto& cell : c.cells) lines[drop_axis(cell, axis)].push_back(cell[axis]);
    for (auto& [base, coords] : lines) std::sort(coords.begin(), coords.end());
    return lines;
}

}  // namespace

MultiplicityInfo multiplicity(const CubeCollection& c) {
    if (c.cells.empty()) throw std::invalid_argument("multiplicity: empty collection");
    for (const auto& cell : c.cells) {
        if (int(cell.size()) != c.d) throw std::invalid_argument("multiplicity: cell dimension mismatch");
        for (int coord : cell)
            if (coord < 0 || coord >= c.grid)
                throw std::invalid_argument("multiplicity: cell outside the grid");
    }
    MultiplicityInfo info;
    info.per_axis.assign(c.d, 0);
    for (int axis = 0; axis < c.d; ++axis) {
        long worst = 0;
        for (const auto& [base, coords] : lines_along(c, axis)) worst = std::max(worst, long(coords.size()));
        info.per_axis[axis] = worst;
    }
    info.best_axis = 0;
    for (int a = 1; a < c.d; ++a)
        if (info.per_axis[a] < info.per_axis[info.best_axis]) info.best_axis = a;
    info.overall = info.per_axis[info.best_axis];
    return info;
}

std::vector<CubeCollection> greedy_split(const CubeCollection& c) {
    const auto info = multiplicity(c);
    std::vector<CubeCollection> parts(info.overall);
    for (auto& p : parts) {
        p.d = c.d;
        p.grid = c.grid;
    }
    for (const auto& [base, coords] : lines_along(c, info.best_axis)) {
        for (std::size_t j = 0; j < coords.size(); ++j) {
            Point cell = base;
            cell.insert(cell.begin() + info.best_axis, coords[j]);
            parts[j].cells.insert(cell);
        }
    }
    return parts;
}

Rat Poly::eval(const std::vector<Rat>& x) const {
    if (int(x.size()) != vars) throw std::invalid_argument("Poly::eval: arity mismatch");
    Rat total(0);
    for (const auto& [exps, coeff] : terms) {
        Rat term = coeff;
        for (int i = 0; i < vars; ++i)
            for (int e = 0; e < exps[i]; ++e) term *= x[i];
        total += term;
    }
    return total;
}

CubeCollection sample_graph_cells(const Poly& q, int d, int grid) {
    if (q.vars != d - 1) throw std::invalid_argument("sample_graph_cells: polynomial must have d-1 variables");
    CubeCollection out;
    out.d = d;
    out.grid = grid;

    const auto bases = box_points(d - 1, grid - 1);
    const int corners = 1 << (d - 1);
    for (const auto& base : bases) {
        Rat vmin, vmax;
        bool first = true;
        for (int mask = 0; mask < corners; ++mask) {
            std::vector<Rat> x(d - 1);
            for (int i = 0; i < d - 1; ++i)
                x[i] = Rat(base[i] + ((mask >> i) & 1), grid);
            const Rat v = q.eval(x);
            if (first || v < vmin) vmin = v;
            if (first || v > vmax) vmax = v;
            first = false;
        }
        if (vmax < Rat(0) || vmin > Rat(1)) continue;
        // Cells j with [j/grid, (j+1)/grid] meeting [vmin, vmax].
        Int lo = (vmin * Rat(grid)).floor();
        if ((vmin * Rat(grid)).is_integer() && lo > 0) lo -= 1;
        Int hi = (vmax * Rat(grid)).floor();
        if (lo < 0) lo = 0;
        if (hi > grid - 1) hi = grid - 1;
        if (lo > hi) continue;
        const long jlo = lo.get_si(), jhi = hi.get_si();
        for (long j = jlo; j <= jhi; ++j) {
            Point cell = base;
            cell.push_back(int(j));
            out.cells.insert(cell);
        }
    }
    return out;
}

CheckReport split_report(const CubeCollection& c, const std::string& label) {
    const std::string name = "multiplicity-split " + label;
    const auto info = multiplicity(c);
    const auto parts = greedy_split(c);

    long total = 0;
    bool all_mult_one = true;
    PointSet seen;
    for (const auto& part : parts) {
        total += long(part.cells.size());
        for (const auto& cell : part.cells) seen.insert(cell);
        if (!part.cells.empty() && multiplicity(part).overall != 1) all_mult_one = false;
    }
    const bool partitioned = total == long(c.cells.size()) && seen == c.cells;

    nlohmann::json w{{"cells", c.cells.size()},
                     {"overall_multiplicity", info.overall},
                     {"parts", parts.size()},
                     {"per_axis", info.per_axis}};
    if (!partitioned) w["error"] = "parts do not partition the input";
    if (!all_mult_one) w["error"] = "a part has multiplicity > 1";
    return (partitioned && all_mult_one) ? CheckReport::pass(name, w) : CheckReport::fail(name, w);
}

}  // namespace pvlab
