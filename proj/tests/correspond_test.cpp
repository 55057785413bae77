#include "hilbflag/correspond.hpp"

#include <map>
#include <set>

#include "hilbflag/weights.hpp"
#include "test_common.hpp"

using namespace hilbflag;

namespace {

QPoly qp(std::vector<mpz_class> c) { return QPoly(std::move(c)); }

void marked_pair_enumeration() {
    REQUIRE(enumerate_tr(0).empty());

    auto one = enumerate_tr(1);
    REQUIRE_EQ(one.size(), size_t{1});
    REQUIRE_EQ(one[0].shape, YoungDiagram({2, 1}));
    REQUIRE_EQ(one[0].right_mark, (Box{1, 0}));
    REQUIRE_EQ(one[0].left_mark, (Box{0, 1}));
    REQUIRE_EQ(one[0].level(), YoungDiagram({1}));

    auto two = enumerate_tr(2);
    REQUIRE_EQ(two.size(), size_t{2});
    std::set<YoungDiagram> shapes;
    for (const auto& p : two) shapes.insert(p.shape);
    REQUIRE(shapes.count(YoungDiagram({3, 1})));
    REQUIRE(shapes.count(YoungDiagram({2, 1, 1})));

    // Marks never share a row or column and the level is always a diagram
    // of the right size.
    for (int m = 0; m <= 8; ++m) {
        for (const MarkedPair& p : enumerate_tr(m)) {
            REQUIRE(valid_marked_pair(p));
            REQUIRE(p.right_mark.u > p.left_mark.u);
            REQUIRE(p.right_mark.v != p.left_mark.v);
            REQUIRE_EQ(p.level().size(), m);
        }
    }
}

void cell_dimension() {
    auto one = enumerate_tr(1);
    REQUIRE_EQ(pos_tr(one[0], 1), 0);

    for (const MarkedPair& p : enumerate_tr(2)) {
        int want = p.shape == YoungDiagram({3, 1}) ? 1 : 0;
        REQUIRE_EQ(pos_tr(p, 2), want);
    }
    REQUIRE_EQ(tr_poly(2), qp({1, 1}));

    // The dimension is never negative: a shape carrying two corners can use
    // at most m+1 columns.
    for (int m = 0; m <= 10; ++m)
        for (const MarkedPair& p : enumerate_tr(m)) REQUIRE(pos_tr(p, m) >= 0);
}

void tr_series_agrees() {
    ZSeries prod = product_family(Family::tr, 10);
    for (int m = 0; m <= 10; ++m) REQUIRE_EQ(prod.coeff(m), tr_poly(m + 1));
}

// The two fiber elements of the pair marking the two leftmost generators of
// the level [4,3,1]: the left mark resolves through the rightmost corner,
// the right mark through the leftmost one.
void fiber_worked_example_adjacent() {
    YoungDiagram level({4, 3, 1});
    MarkedPair p{level.with_box({0, 4}).with_box({1, 3}), {1, 3}, {0, 4}};
    REQUIRE(valid_marked_pair(p));
    REQUIRE_EQ(p.level(), level);

    auto [hi, lo] = bn_preimage(p);
    REQUIRE_EQ(hi.base, YoungDiagram({4, 3}));
    REQUIRE_EQ(hi.first_added, (Box{2, 0}));
    REQUIRE_EQ(hi.second_added, (Box{0, 4}));
    REQUIRE_EQ(lo.base, YoungDiagram({3, 3, 1}));
    REQUIRE_EQ(lo.first_added, (Box{0, 3}));
    REQUIRE_EQ(lo.second_added, (Box{1, 3}));
    REQUIRE_EQ(pos_infty_triple(hi), pos_infty_triple(lo) + 1);
    REQUIRE_EQ(pos_infty_triple(lo), pos_tr(p, 8));
}

// A fiber whose two flags share the same middle step: marks at the ends of
// the generator list of [4,3,1] both resolve through the middle corner.
void fiber_worked_example_shared_corner() {
    YoungDiagram level({4, 3, 1});
    MarkedPair p{level.with_box({3, 0}).with_box({1, 3}), {3, 0}, {1, 3}};
    REQUIRE(valid_marked_pair(p));

    auto [hi, lo] = bn_preimage(p);
    REQUIRE_EQ(hi.base, YoungDiagram({4, 2, 1}));
    REQUIRE_EQ(hi.first_added, (Box{1, 2}));
    REQUIRE_EQ(hi.second_added, (Box{1, 3}));
    REQUIRE_EQ(lo.base, YoungDiagram({4, 2, 1}));
    REQUIRE_EQ(lo.first_added, (Box{1, 2}));
    REQUIRE_EQ(lo.second_added, (Box{3, 0}));
    REQUIRE_EQ(pos_infty_triple(hi), pos_infty_triple(lo) + 1);
    REQUIRE_EQ(pos_infty_triple(lo), pos_tr(p, 8));
}

void two_to_one_small() {
    BnReport r0 = verify_bn(0);
    REQUIRE(r0.ok);
    REQUIRE_EQ(r0.flags, 2);
    REQUIRE_EQ(r0.pairs, 1);
    REQUIRE_EQ(r0.flag_poly, qp({1, 1}));

    BnReport r1 = verify_bn(1);
    REQUIRE(r1.ok);
    REQUIRE_EQ(r1.flags, 4);
    REQUIRE_EQ(r1.flag_poly, qp({1, 2, 1}));
}

void two_to_one_sweep() {
    for (int n = 0; n <= 9; ++n) {
        BnReport rep = verify_bn(n);
        REQUIRE_MSG(rep.ok, rep.violations.empty() ? std::string("n=") + std::to_string(n)
                                                   : rep.violations.front());
        REQUIRE_EQ(rep.flags, 2 * rep.pairs);
        REQUIRE_EQ(rep.flag_poly, rep.pair_poly);
    }
}

void fibers_json_renders() {
    std::string doc = bn_fibers_json(2);
    REQUIRE(doc.find("\"ok\": true") != std::string::npos);
    REQUIRE(doc.find("\"fibers\"") != std::string::npos);
    REQUIRE(doc.find("\"pos\"") != std::string::npos);
}

void section_examples() {
    Flag3 f = sn({YoungDiagram({1}), YoungDiagram({2, 1})});
    REQUIRE_EQ(f.first_added, (Box{1, 0}));
    REQUIRE_EQ(f.second_added, (Box{0, 1}));

    Flag3 g = sn({YoungDiagram({1}), YoungDiagram({3})});
    REQUIRE_EQ(g.first_added, (Box{0, 1}));
    REQUIRE_EQ(g.second_added, (Box{0, 2}));
}

void section_is_a_section() {
    for (int n = 0; n <= 7; ++n) {
        auto pairs = enumerate_pairs13(n);
        std::set<Pair13> distinct(pairs.begin(), pairs.end());
        REQUIRE_EQ(distinct.size(), pairs.size());
        for (const Pair13& p : pairs) {
            REQUIRE(valid_pair13(p));
            Flag3 f = sn(p);
            REQUIRE_EQ(f.base, p.inner);
            REQUIRE_EQ(f.outer(), p.outer);
        }
    }
}

void pair13_counts() {
    REQUIRE_EQ(enumerate_pairs13(0).size(), size_t{2});
    REQUIRE_EQ(enumerate_pairs13(1).size(), size_t{3});
}

void pair13_polynomials() {
    REQUIRE_EQ(poincare_pair13(0), qp({1, 1}));
    REQUIRE_EQ(poincare_pair13(1), qp({1, 1, 1}));

    ZSeries prod = product_family(Family::pair13, 9);
    for (int n = 0; n <= 9; ++n) REQUIRE_EQ(prod.coeff(n), poincare_pair13(n));
}

// Forgetting the middle step of each fiber element recovers a nested pair;
// crossing the two constructions this way ties every polynomial in this
// module to every other one.
void fiber_section_consistency() {
    for (int n = 0; n <= 6; ++n) {
        QPoly three = poincare_triple(n, TorusKind::infinity);
        REQUIRE_EQ(three, qp({1, 1}) * tr_poly(n + 1));
        QPoly serialp = poincare_pair13(n, false);
        REQUIRE_EQ(serialp, poincare_pair13(n, true));
    }
}

}  // namespace

int main() {
    marked_pair_enumeration();
    cell_dimension();
    tr_series_agrees();
    fiber_worked_example_adjacent();
    fiber_worked_example_shared_corner();
    two_to_one_small();
    two_to_one_sweep();
    fibers_json_renders();
    section_examples();
    section_is_a_section();
    pair13_counts();
    pair13_polynomials();
    fiber_section_consistency();
    return test_summary("correspond_test");
}
