#include "hilbflag/weights.hpp"

#include <algorithm>

#include "hilbflag/check.hpp"
#include "hilbflag/parallel.hpp"

namespace hilbflag {

TorusSpec TorusSpec::infinity_for(int size_bound) {
    HF_CHECK(size_bound >= 0, "size bound must be nonnegative");
    return {mpq_class(size_bound + 1), Side::exact};
}

TorusSpec TorusSpec::oneplus_for(int size_bound) {
    HF_CHECK(size_bound >= 0, "size bound must be nonnegative");
    int n = std::max(size_bound, 1);
    return {mpq_class(2 * n + 1, 2 * n), Side::exact};
}

TorusSpec TorusSpec::wall(const mpq_class& w, Side s) {
    HF_CHECK(w > 1, "wall ratio must exceed 1");
    TorusSpec t{w, s};
    t.ratio.canonicalize();
    return t;
}

Sign sign_under(const TangentVector& v, const TorusSpec& t) {
    Box w = v.weight();
    // b*dx + a*dy has the sign of dx + (a/b)*dy since b > 0.
    mpz_class s = t.ratio.get_den() * w.u + t.ratio.get_num() * w.v;
    if (s > 0) return Sign::positive;
    if (s < 0) return Sign::negative;
    switch (t.side) {
        case TorusSpec::Side::exact: return Sign::zero;
        // Just above the wall the character is eps*dy, just below -eps*dy.
        case TorusSpec::Side::plus: return w.v > 0 ? Sign::positive : Sign::negative;
        case TorusSpec::Side::minus: return w.v < 0 ? Sign::positive : Sign::negative;
    }
    return Sign::zero;
}

int pos_count(const std::vector<TangentVector>& basis, const TorusSpec& t) {
    int out = 0;
    for (const TangentVector& v : basis)
        if (sign_under(v, t) == Sign::positive) ++out;
    return out;
}

namespace {

int wall_zero_count(const std::vector<TangentVector>& basis, const TorusSpec& t, bool up) {
    HF_CHECK(t.side == TorusSpec::Side::exact, "s+/s- need the exact wall spec");
    int out = 0;
    for (const TangentVector& v : basis) {
        if (sign_under(v, t) != Sign::zero) continue;
        Box w = v.weight();
        HF_CHECK(w.v != 0, "zero-weight vector at a wall must have nonzero y-part");
        if ((w.v > 0) == up) ++out;
    }
    return out;
}

}  // namespace

int s_plus(const std::vector<TangentVector>& basis, const TorusSpec& t) {
    return wall_zero_count(basis, t, true);
}

int s_minus(const std::vector<TangentVector>& basis, const TorusSpec& t) {
    return wall_zero_count(basis, t, false);
}

int pos_infty_single(const YoungDiagram& g) { return g.size() - g.length(); }

int pos_infty_pair(const Flag2& f) { return f.base.size() + 1 - f.outer().length(); }

int pos_infty_triple(const Flag3& t) {
    int base = t.base.size() + 2 - t.outer().length();
    // One extra positive vector when the second box sits at least two rows
    // above the first.
    if (t.second_added.v >= t.first_added.v + 2) ++base;
    return base;
}

namespace {

int hooks_in_01(const YoungDiagram& g) {
    int out = 0;
    for (Box b : g.boxes()) {
        int h = g.hook_difference(b);
        if (h == 0 || h == 1) ++out;
    }
    return out;
}

}  // namespace

int pos_oneplus_single_M(const YoungDiagram& g) { return g.size() - hooks_in_01(g); }

int pos_oneplus_single_G(const YoungDiagram& g) {
    int out = 0;
    for (Box b : g.boxes())
        if (g.hook_difference(b) == -1) ++out;
    return out;
}

namespace {

// Shared mark predicate: how a cell at `c` measures against the antidiagonal
// of `mark`.  M admits everything up to the antidiagonal, G only the
// antidiagonal itself; the positive variants break the tie on the
// antidiagonal toward cells strictly right of the mark.
bool mark_counts(Box c, Box mark, SpaceKind which, bool positive_only) {
    int dc = total_degree(c);
    int dm = total_degree(mark);
    if (which == SpaceKind::M) {
        if (!positive_only) return dc <= dm;
        return dc < dm || (dc == dm && c.u > mark.u);
    }
    if (!positive_only) return dc == dm;
    return dc == dm && c.u > mark.u;
}

}  // namespace

MarkCounts bullet_star(const Flag2& f, SpaceKind which, bool positive_only) {
    MarkCounts out;
    std::vector<Box> gens = f.outer().generators();
    for (Box g : gens)
        if (mark_counts(g, f.added, which, positive_only)) ++out.bullet;
    for (size_t k = 0; k + 1 < gens.size(); ++k) {
        Box vertex{gens[k].u, gens[k + 1].v};
        if (mark_counts(vertex, f.added, which, positive_only)) ++out.star;
    }
    return out;
}

int diamond(const Flag3& t, SpaceKind which, bool positive_only) {
    if (t.case_b()) return 0;
    Box cell = t.first_added + Box{1, 1};
    return mark_counts(cell, t.second_added, which, positive_only) ? 1 : 0;
}

int pos_oneplus_pair(const Flag2& f) {
    return pos_oneplus_single_M(f.base) + bullet_star(f, SpaceKind::M, true).net();
}

int pos_oneplus_pair_G(const Flag2& f) {
    return pos_oneplus_single_G(f.base) + bullet_star(f, SpaceKind::G, true).net();
}

int pos_oneplus_triple(const Flag3& t) {
    Box aj = t.first_added;
    Box al = t.second_added;
    int total = 0;
    for (Box b : t.base.boxes()) {
        int h = t.base.hook_difference(b);
        if (h != 0 && h != 1)
            ++total;
        else if ((h == 0 && b.u == aj.u) || (h == 1 && b.v == aj.v))
            ++total;
    }
    YoungDiagram g2 = t.middle();
    for (Box b : g2.boxes()) {
        int h = g2.hook_difference(b);
        if ((h == 0 && b.u == al.u) || (h == 1 && b.v == al.v)) ++total;
    }
    int gap = total_degree(al) - (total_degree(aj) + 2);
    if (gap > 0 || (gap == 0 && al.v > aj.v)) ++total;
    return total;
}

int pos_oneplus_triple_sixterm(const Flag3& t) {
    return pos_oneplus_single_M(t.base) + bullet_star(t.step12(), SpaceKind::M, true).net() +
           bullet_star(t.step23(), SpaceKind::M, true).net() + diamond(t, SpaceKind::M, true);
}

int pos_oneplus_triple_G(const Flag3& t) {
    return pos_oneplus_single_G(t.base) + bullet_star(t.step12(), SpaceKind::G, true).net() +
           bullet_star(t.step23(), SpaceKind::G, true).net() + diamond(t, SpaceKind::G, true);
}

namespace {

template <class Item, class Pos>
QPoly qsum_over(const std::vector<Item>& items, Pos&& pos, bool parallel) {
    auto exponent = [&](long long i) { return pos(items[i]); };
    return parallel ? parallel_qsum((long long)items.size(), exponent)
                    : serial_qsum((long long)items.size(), exponent);
}

}  // namespace

QPoly poincare_single(int n, TorusKind kind, bool parallel) {
    auto parts = enumerate_partitions(n);
    if (kind == TorusKind::infinity)
        return qsum_over(parts, [](const YoungDiagram& g) { return pos_infty_single(g); },
                         parallel);
    return qsum_over(parts, [](const YoungDiagram& g) { return pos_oneplus_single_M(g); },
                     parallel);
}

QPoly poincare_pair(int n, TorusKind kind, bool parallel) {
    auto flags = enumerate_flags2(n);
    if (kind == TorusKind::infinity)
        return qsum_over(flags, [](const Flag2& f) { return pos_infty_pair(f); }, parallel);
    return qsum_over(flags, [](const Flag2& f) { return pos_oneplus_pair(f); }, parallel);
}

QPoly poincare_triple(int n, TorusKind kind, bool parallel) {
    auto flags = enumerate_flags3(n);
    if (kind == TorusKind::infinity)
        return qsum_over(flags, [](const Flag3& t) { return pos_infty_triple(t); }, parallel);
    return qsum_over(flags, [](const Flag3& t) { return pos_oneplus_triple(t); }, parallel);
}

}  // namespace hilbflag
