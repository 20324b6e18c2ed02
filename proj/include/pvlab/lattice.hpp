#pragma once

#include <set>
#include <vector>

#include "pvlab/rat.hpp"
#include "pvlab/report.hpp"

namespace pvlab {

// Lattice points are d-tuples of nonnegative integers.
using Point = std::vector<int>;
using PointSet = std::set<Point>;

int weight(const Point& a);
// Componentwise partial order: true when lo <= hi in every coordinate.
bool dominated_by(const Point& lo, const Point& hi);

// Canonical enumeration order used everywhere a point list doubles as an
// index order: degree ascending, then within a degree the tuple whose first
// differing coordinate is larger comes first. For d = 2, k = 2 this yields
// (1,0),(0,1),(2,0),(1,1),(0,2).
std::vector<Point> simplex_points(int d, int l);  // 1 <= |a| <= l
std::vector<Point> box_points(int d, int l);      // 0 <= a_i <= l, lex order
std::vector<Point> shell_points(int d, int m);    // |a| = m

// Upward closure of T inside the simplex / box of level lp.
PointSet positive_extension_simplex(const PointSet& t, int d, int lp);
PointSet positive_extension_box(const PointSet& t, int d, int lp);

// The |.| = m slice of the upward closure of B.
PointSet layer(const PointSet& b, int d, int m);

// Points of the m-1 shell all of whose coordinate bumps lie in T.
PointSet predecessor(const PointSet& t, int d, int m);

// |T^-| * |shell_m| <= |shell_{m-1}| * |T|, strict unless T is empty or the
// whole shell.
CheckReport predecessor_contraction_report(const PointSet& t, int d, int m);

// Shell sizes Lambda_{q,e} = C(q+e, e): the number of (e+1)-tuples of
// nonnegative integers with sum q.
Int shell_count(int q, int e);

// Asserts sum_{j<=q} Lambda_j / Lambda_{q+1} < sum_{j<=q+1} Lambda_j / Lambda_{q+2}
// for 0 <= q <= qmax at fixed e.
CheckReport convexity_report(int e, int qmax);

// Exhaustive sweep over all nonempty B inside the level-l simplex: the
// closure ratio |B_l^+| / |B_k^+| is strictly below n_d(l)/n_d(k) unless
// B_l^+ is the whole simplex, where it equals the ratio. Guarded by the
// enumeration budget (count of base points, default 20).
CheckReport frac_inequality_report(int d, int l, int k, int max_base_points = 20);

// Complement construction matched to the closure bound: A is everything in
// the simplex-with-origin not dominated by B, witnessed by per-coordinate
// restriction intervals [0, b_i - 1].
struct SharpComplement {
    PointSet a_set;
    Int bound;  // n_d(k) + 1 - |closure|
    bool witness_valid = false;
};
SharpComplement sharp_complement(int d, int k, const PointSet& b);

// Minimal number of excluded box points forced by the restriction-family
// constraints, computed by the slicewise recursion with base case
// min_b b_1. Equals the box upward-closure size of B.
Int deficiency(int d, int k, const PointSet& b);

// Exhaustive deficiency == closure-size sweep over all B in the level-k box.
CheckReport deficiency_report(int d, int k, long max_subsets = 1 << 20);

}  // namespace pvlab
