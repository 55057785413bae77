#pragma once

// Fixed points of the two-step space whose ideals differ by a square-zero
// quotient: a diagram with two marked corners. A three-step flag determines
// such a pair two-to-one, which transports the cell structure of the flag
// space down to the two-step space; the section out of plain nested pairs
// then computes its Poincare polynomial directly.

#include <string>
#include <utility>
#include <vector>

#include "hilbflag/series.hpp"
#include "hilbflag/young.hpp"

namespace hilbflag {

// A diagram with two marked removable boxes. Distinct corners never share a
// row or a column, so removing both always leaves a diagram (the level);
// the marks are then two of the level's generators. Marks are kept ordered
// by decreasing u, the same right-to-left numbering the corner and
// generator lists use.
struct MarkedPair {
    YoungDiagram shape;
    Box right_mark;  // larger u, smaller v
    Box left_mark;

    YoungDiagram level() const;

    friend auto operator<=>(const MarkedPair&, const MarkedPair&) = default;
};

bool valid_marked_pair(const MarkedPair& p);

// All marked pairs with |shape| = m + 2, grouped by shape.
std::vector<MarkedPair> enumerate_tr(int m);

// Dimension of the attracting cell at p: m + 1 minus the number of columns
// of the shape. Requires |p.shape| = m + 2; never negative.
int pos_tr(const MarkedPair& p, int m);

// Sum of q^pos_tr over enumerate_tr(m).
QPoly tr_poly(int m, bool parallel = true);

// The two flags attached to a marked pair. With the marks at generators a
// (left) and b (right) of the level, a > b in the right-to-left numbering,
// the fiber is the flag pair
//
//   ( gens[a] over corners[a-b-1],  gens[b] over corners[a-1] )
//
// where "gen over corner" removes the corner from the level, re-adds it as
// the middle step, and adds the generator on top. The first element's cell
// dimension always exceeds the second's by exactly one.
std::pair<Flag3, Flag3> bn_preimage(const MarkedPair& p);

struct BnReport {
    bool ok = true;
    long long flags = 0;  // three-step flags with base size n
    long long pairs = 0;  // marked pairs one level up
    QPoly flag_poly;      // sum of q^pos over the flags, enumerated directly
    QPoly pair_poly;      // (q + 1) * tr_poly(n + 1)
    std::vector<std::string> violations;  // first few witnesses, empty when ok
};

// Checks, for base size n: every flag lies in exactly one fiber (the map is
// well defined and two-to-one), each fiber's two cell dimensions are r+1
// and r where r is the target's own dimension, and the aggregate identity
// flag_poly == pair_poly holds with both sides enumerated independently.
BnReport verify_bn(int n);

// Fiber structure as a JSON document: one record per marked pair with its
// two flags and all cell dimensions.
std::string bn_fibers_json(int n);

// A nested pair of diagrams two boxes apart.
struct Pair13 {
    YoungDiagram inner;
    YoungDiagram outer;

    friend auto operator<=>(const Pair13&, const Pair13&) = default;
};

bool valid_pair13(const Pair13& p);

// All nested pairs with |inner| = n.
std::vector<Pair13> enumerate_pairs13(int n);

// Completes a nested pair to a three-step flag by inserting as middle box
// the cell of outer minus inner with minimal total degree, ties broken by
// the smaller row. The insertion always preserves the diagram shape.
Flag3 sn(const Pair13& p);

// Poincare polynomial of the two-step space at inner size n: the sum of
// q^{pos_oneplus_triple(sn(.))} over nested pairs.
QPoly poincare_pair13(int n, bool parallel = true);

}  // namespace hilbflag
