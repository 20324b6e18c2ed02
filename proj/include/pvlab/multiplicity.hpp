#pragma once

#include <vector>

#include "pvlab/lattice.hpp"
#include "pvlab/rat.hpp"
#include "pvlab/report.hpp"

namespace pvlab {

// A set of grid cells in [0, grid-1]^d, each cell standing for the cube
// [c_i/grid, (c_i+1)/grid] per coordinate.
struct CubeCollection {
    int d = 0;
    int grid = 0;
    PointSet cells;
};

struct MultiplicityInfo {
    std::vector<long> per_axis;  // per_axis[a]: max cells met by a line parallel to axis a
    long overall = 0;            // min over axes
    int best_axis = 0;           // argmin (smallest index on ties)
};
MultiplicityInfo multiplicity(const CubeCollection& c);

// Peels the collection into layers along the axis of least multiplicity:
// the j-th cell of every line goes to part j. Every part has overall
// multiplicity one; the parts partition the input.
std::vector<CubeCollection> greedy_split(const CubeCollection& c);

// Sparse polynomial with rational coefficients in `vars` variables.
struct Poly {
    int vars = 0;
    std::vector<std::pair<Point, Rat>> terms;
    Rat eval(const std::vector<Rat>& x) const;
};

// Cells of the grid touched by the graph x_d = q(x_1, ..., x_{d-1}) over
// [0,1]^d, with the height range over each base cell estimated from the
// corner values of q. Exact for coordinatewise-monotone polynomials.
CubeCollection sample_graph_cells(const Poly& q, int d, int grid);

// Runs greedy_split and re-verifies every part by direct line counting.
CheckReport split_report(const CubeCollection& c, const std::string& label);

}  // namespace pvlab
