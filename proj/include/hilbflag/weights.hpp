#pragma once

#include <gmpxx.h>

#include <vector>

#include "hilbflag/series.hpp"
#include "hilbflag/tangent.hpp"
#include "hilbflag/young.hpp"

namespace hilbflag {

// A one-parameter subgroup acting with weights (1, W) for a rational W > 1.
// A tangent vector of weight (dx, dy) picks up the character dx + W*dy; we
// only ever need its sign.  At a wall some vectors sit at zero; `side`
// selects whether to report them as zero or to perturb W infinitesimally.
struct TorusSpec {
    enum class Side { exact, plus, minus };

    mpq_class ratio;
    Side side = Side::exact;

    // W = N+1 dominates any coordinate difference a diagram of size <= N can
    // produce, so dy decides the sign whenever it is nonzero.
    static TorusSpec infinity_for(int size_bound);

    // W = (2N+1)/(2N) is close enough to 1 that dx+dy decides the sign; no
    // vector from a diagram of size <= N lands on zero.
    static TorusSpec oneplus_for(int size_bound);

    static TorusSpec wall(const mpq_class& w, Side s = Side::exact);
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

Sign sign_under(const TangentVector& v, const TorusSpec& t);

int pos_count(const std::vector<TangentVector>& basis, const TorusSpec& t);

// Vectors of weight zero at the wall that become positive just above
// (s_plus) or just below (s_minus) it.  The spec must have side = exact.
int s_plus(const std::vector<TangentVector>& basis, const TorusSpec& t);
int s_minus(const std::vector<TangentVector>& basis, const TorusSpec& t);

// Closed forms for the number of positive weights, per fixed point.

int pos_infty_single(const YoungDiagram& g);   // n - l(G)
int pos_infty_pair(const Flag2& f);            // n+1 - l(G2)
int pos_infty_triple(const Flag3& t);          // n+2 - l(G3), +1 on a tall step

int pos_oneplus_single_M(const YoungDiagram& g);  // n - #{h in {0,1}}
int pos_oneplus_single_G(const YoungDiagram& g);  // #{h = -1}

// Which of the two stratified spaces a counter refers to: the full stratum
// or its homogeneous (graded) core.
enum class SpaceKind { M, G };

// Bullet/star marks of a one-box step, measured against the antidiagonal of
// the added box.  Bullets sit on the generators of the bigger diagram, stars
// on the vertices between consecutive generators.  The positive variant also
// admits marks on the same antidiagonal strictly to the right of the box.
struct MarkCounts {
    int bullet = 0;
    int star = 0;
    int net() const { return bullet - star; }
};

MarkCounts bullet_star(const Flag2& f, SpaceKind which, bool positive_only);

// The extra mark of a two-step flag, sitting immediately above-right of the
// first added box.  Zero whenever the second box extends the first.
int diamond(const Flag3& t, SpaceKind which, bool positive_only);

int pos_oneplus_pair(const Flag2& f);             // single term + bullets - stars
int pos_oneplus_pair_G(const Flag2& f);

int pos_oneplus_triple(const Flag3& t);           // four-term hook matching form
int pos_oneplus_triple_sixterm(const Flag3& t);   // counter form, same value
int pos_oneplus_triple_G(const Flag3& t);

// Poincare polynomials of the whole space at a given colength, as sums of
// q^pos over fixed points.  `parallel` switches the OpenMP kernel on.
enum class TorusKind { infinity, oneplus };

QPoly poincare_single(int n, TorusKind kind = TorusKind::infinity, bool parallel = true);
QPoly poincare_pair(int n, TorusKind kind = TorusKind::infinity, bool parallel = true);
QPoly poincare_triple(int n, TorusKind kind = TorusKind::infinity, bool parallel = true);

}  // namespace hilbflag
