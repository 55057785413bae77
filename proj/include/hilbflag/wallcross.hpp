#pragma once

// Wall-crossing combinatorics: the walls of the weight lattice where fixed
// loci jump, the box-sliding transformation attached to a zero-weight basis
// vector, the orbit decomposition of fixed points under those moves, and the
// verification routines for the invariants a wall crossing must preserve.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hilbflag/series.hpp"
#include "hilbflag/tangent.hpp"
#include "hilbflag/weights.hpp"
#include "hilbflag/young.hpp"

namespace hilbflag {

enum class PointFamily { single, pair, triple };
const char* family_name(PointFamily f);

// All ratios -dx/dy > 1 realized by basis vectors across every fixed point
// of the family at size n. Sorted ascending, deduplicated.
std::vector<mpq_class> walls(int n, PointFamily family);

// One run of the multi-stage box-moving procedure on a diagram. The boxes
// travel by `step` = gen - box per hop; the pair (inv_gen, inv_box) names
// the move on `after` that undoes the run.
struct SlideRun {
    YoungDiagram before;
    YoungDiagram after;
    Box step;
    Box inv_gen;
    Box inv_box;
};

// Move boxes of d in the direction gen - box until the result is again a
// diagram. `gen` must be addable to d and `box` a box of d; the direction
// must not be axis-aligned. The up-left case runs on the transpose.
SlideRun slide_boxes(const YoungDiagram& d, Box gen, Box box);

// Every diagram the staged procedure closes up to, in order. The first entry
// is the slide_boxes result; later entries continue the descent through the
// remaining stages until no stage can run. Each entry spans the whole run
// from d, so box and air images over it are cumulative.
std::vector<SlideRun> slide_stops(const YoungDiagram& d, Box gen, Box box);

// Position of a box of run.before in run.after. Boxes only ever move along
// their own line c + k*step and never pass each other, so matching the
// occupied cells of the line in order recovers every trajectory.
Box box_image(const SlideRun& r, Box c);

// Position of an empty cell of run.before among the empty cells of
// run.after, matched the same way. It differs from c exactly when a moved
// box landed on c at some step of the run.
Box air_image(const SlideRun& r, Box c);

// True when a box slid onto c during the run, i.e. air_image(r, c) != c.
bool cell_attracted(const SlideRun& r, Box c);

// The sliding transformation at wall W attached to a zero-weight tangent
// vector. Throws std::invalid_argument when v is not in the basis of the
// point or has nonzero weight at W.
YoungDiagram slide(const YoungDiagram& g, const TangentVector& v, const mpq_class& W);
Flag2 slide(const Flag2& f, const TangentVector& v, const mpq_class& W);
Flag3 slide(const Flag3& t, const TangentVector& v, const mpq_class& W);

// A weight-zero move between two fixed points, by index into the point list.
struct SlideEdge {
    int from = 0;
    int to = 0;
    TangentVector vec;
};

// All fixed points of the family at size n with every weight-W move between
// them, plus the partition into orbits (connected components). Point order
// follows the enumeration order of the family; orbit member lists are
// sorted and orbits are ordered by their smallest member.
struct OrbitGraph {
    PointFamily family = PointFamily::single;
    int n = 0;
    mpq_class wall;
    std::vector<std::string> labels;
    std::vector<int> pos;
    std::vector<int> splus;
    std::vector<int> sminus;
    std::vector<SlideEdge> edges;
    std::vector<std::vector<int>> orbits;

    int orbit_of(int point) const;
};

OrbitGraph orbit_graph(int n, PointFamily family, const mpq_class& W);

// Typed orbit lists for the three families, same order as orbit_graph.
std::vector<std::vector<YoungDiagram>> orbits_single(int n, const mpq_class& W);
std::vector<std::vector<Flag2>> orbits_pair(int n, const mpq_class& W);
std::vector<std::vector<Flag3>> orbits_triple(int n, const mpq_class& W);

// Checks run on one wall: per orbit, pos is constant, s+ + s- is constant
// and the s+ histogram matches the s- histogram; globally the two perturbed
// polynomials agree, the perturbed counts decompose as pos + s, and every
// move has a weight-W inverse move. Violations are collected as text.
struct WallReport {
    mpq_class wall;
    int points = 0;
    int orbit_count = 0;
    std::vector<int> orbit_sizes;
    QPoly side_plus;
    QPoly side_minus;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

WallReport verify_wall(int n, PointFamily family, const mpq_class& W);

// Crosses every wall of the family from the large-ratio side down to the
// ratio-1 side: each wall must balance, consecutive walls must agree
// pointwise on the segment between them, and the chain must connect the two
// limit polynomials, which are also compared directly.
struct SweepReport {
    int n = 0;
    PointFamily family = PointFamily::single;
    std::vector<WallReport> per_wall;  // walls in descending order
    QPoly at_infinity;
    QPoly at_oneplus;
    std::vector<std::string> failures;

    bool ok() const;
};

SweepReport sweep(int n, PointFamily family);

// Orbit graph rendered as JSON {family, n, wall, nodes, edges, orbits} or as
// DOT text with one subgraph per orbit. Both deterministic.
std::string graph_to_json(const OrbitGraph& g);
std::string graph_to_dot(const OrbitGraph& g);

}  // namespace hilbflag
