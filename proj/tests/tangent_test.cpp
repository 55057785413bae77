#include "hilbflag/tangent.hpp"

#include <algorithm>
#include <set>

#include "test_common.hpp"

using namespace hilbflag;

namespace {

bool has_pair(const std::vector<ObsElement>& obs, Box gen, Box tgt) {
    return std::any_of(obs.begin(), obs.end(),
                       [&](const ObsElement& e) { return e.gen == gen && e.tgt == tgt; });
}

void pq_goldens() {
    YoungDiagram g1({1});
    PQSets pq = pq_sets(g1, 0);  // generator (1,0)
    REQUIRE_EQ(pq.P, (std::vector<Box>{{0, 0}}));
    REQUIRE(pq.Q.empty());
    PQSets pq1 = pq_sets(g1, 1);  // generator (0,1)
    REQUIRE(pq1.P.empty());
    REQUIRE_EQ(pq1.Q, (std::vector<Box>{{0, 0}}));

    // No map can send x^2 to 1 on the square of the maximal ideal.
    YoungDiagram m2({2, 1});
    PQSets pq0 = pq_sets(m2, 0);
    bool hit = false;
    for (Box b : pq0.P) hit |= (b == Box{0, 0});
    for (Box b : pq0.Q) hit |= (b == Box{0, 0});
    REQUIRE(!hit);
}

void pq_cardinalities() {
    for (int n = 1; n <= 8; ++n)
        for (const auto& g : enumerate_partitions(n)) {
            int total_p = 0, total_q = 0;
            int gens = (int)g.generators().size();
            for (int i = 0; i < gens; ++i) {
                PQSets pq = pq_sets(g, i);
                total_p += (int)pq.P.size();
                total_q += (int)pq.Q.size();
                // P and Q never share a box for one generator.
                for (Box b : pq.P)
                    REQUIRE(std::find(pq.Q.begin(), pq.Q.end(), b) == pq.Q.end());
            }
            REQUIRE_EQ(total_p, n);
            REQUIRE_EQ(total_q, n);
        }
}

void single_basis() {
    REQUIRE_EQ(basis_single(YoungDiagram({1})).size(), (size_t)2);
    REQUIRE_EQ(basis_single(YoungDiagram({2, 1})).size(), (size_t)6);

    std::multiset<Box> weights;
    for (const auto& v : basis_single(YoungDiagram({2, 1}))) weights.insert(v.weight());
    std::multiset<Box> want{{-2, 1}, {-1, 0}, {-1, 0}, {0, -1}, {0, -1}, {1, -2}};
    REQUIRE(weights == want);
    for (const auto& g : enumerate_partitions(8))
        REQUIRE_EQ(basis_single(g).size(), (size_t)16);

    for (int n = 1; n <= 8; ++n)
        for (const auto& g : enumerate_partitions(n)) {
            auto basis = basis_single(g);
            std::set<TangentVector> dedup(basis.begin(), basis.end());
            REQUIRE_EQ(dedup.size(), basis.size());
            for (const auto& v : basis) {
                REQUIRE(v.weight() != (Box{0, 0}));
                REQUIRE(g.contains(v.tgt));
                REQUIRE(!g.contains(v.src));
            }
        }
}

void obstruction_tables() {
    // Adding y^2 on top of the m^2 staircase obstructs the map x^2 -> y.
    Flag2 m2top{YoungDiagram({2, 1}), {0, 2}};
    REQUIRE(pair_case(m2top.base, m2top.j_index()) == PairCase::c1a);
    auto obs = obs12(m2top);
    REQUIRE_EQ(obs.size(), (size_t)1);
    REQUIRE(has_pair(obs, {2, 0}, {0, 1}));

    // Adding at the bottom corner: only x-branch exclusions remain.
    Flag2 corner{YoungDiagram({2, 2}), {2, 0}};
    REQUIRE_EQ(corner.j_index(), 0);
    REQUIRE(pair_case(corner.base, 0) == PairCase::c2);
    for (const auto& e : obs12(corner)) REQUIRE(e.x_branch);

    // Growing a tall column sideways splits its bottom generator in two; a
    // single box is the degenerate case where the split collapses.
    REQUIRE(pair_case(YoungDiagram({1}), 0) == PairCase::c1b);
    for (int n = 2; n <= 6; ++n) {
        YoungDiagram col(std::vector<int>{n});
        Flag2 side{col, {1, 0}};
        REQUIRE(pair_case(col, side.j_index()) == PairCase::c2);
        Flag2 top{col, {0, n}};
        REQUIRE(pair_case(col, top.j_index()) == PairCase::c1a);
        REQUIRE(obs12(top).empty());
    }

    for (int n = 0; n <= 8; ++n)
        for (const auto& f : enumerate_flags2(n)) {
            auto o = obs12(f);
            REQUIRE_EQ(o.size() + 2, f.outer().generators().size());
            REQUIRE(transformed_generators(f) == f.outer().generators());
            // Every excluded pair is a genuine basis vector of the base.
            auto b1 = basis_single(f.base);
            for (const auto& e : o)
                REQUIRE(std::find(b1.begin(), b1.end(),
                                  TangentVector{VecKind::F, e.gen, e.tgt}) != b1.end());
            // At most one target per source generator.
            std::set<Box> sources;
            for (const auto& e : o) REQUIRE(sources.insert(e.gen).second);
        }
}

void pair_basis() {
    Flag2 tiny{YoungDiagram({1}), {0, 1}};
    REQUIRE_EQ(basis_pair(tiny).size(), (size_t)4);

    for (int n = 0; n <= 8; ++n)
        for (const auto& f : enumerate_flags2(n)) {
            auto basis = basis_pair(f);
            REQUIRE_EQ(basis.size(), (size_t)(2 * n + 2));
            size_t h2 = std::count_if(basis.begin(), basis.end(), [](const TangentVector& v) {
                return v.kind == VecKind::H2;
            });
            REQUIRE_EQ(h2, f.outer().generators().size());
            std::set<TangentVector> dedup(basis.begin(), basis.end());
            REQUIRE_EQ(dedup.size(), basis.size());
            for (const auto& v : basis) REQUIRE(v.weight() != (Box{0, 0}));
        }
}

void triple_basis() {
    // (1) ⊂ (2) ⊂ (3) as columns: case b, six vectors.
    Flag3 chain{YoungDiagram({1}), {0, 1}, {0, 2}};
    REQUIRE(chain.case_b());
    REQUIRE_EQ(basis_triple(chain).size(), (size_t)6);

    // Empty base, second box on top: case b with an empty exclusion filter.
    Flag3 tiny{YoungDiagram(), {0, 0}, {0, 1}};
    REQUIRE(tiny.case_b());
    TripleParts parts = triple_parts(tiny);
    REQUIRE(parts.notp.empty());
    REQUIRE(parts.obs23.empty());
    REQUIRE_EQ(basis_triple(tiny).size(), (size_t)4);

    for (int n = 0; n <= 8; ++n)
        for (const auto& t : enumerate_flags3(n)) {
            TripleParts parts = triple_parts(t);
            if (!t.case_b()) {
                REQUIRE_EQ(parts.notp.size(), (size_t)1);
                REQUIRE(parts.excluded_h2_sources.empty());
            }
            REQUIRE_EQ(parts.pobs.size(), parts.obs23.size() - parts.notp.size());

            auto basis = basis_triple(t);
            REQUIRE_EQ(basis.size(), (size_t)(2 * n + (t.case_b() ? 4 : 5)));
            std::set<TangentVector> dedup(basis.begin(), basis.end());
            REQUIRE_EQ(dedup.size(), basis.size());
            size_t h3 = std::count_if(basis.begin(), basis.end(), [](const TangentVector& v) {
                return v.kind == VecKind::H3;
            });
            REQUIRE_EQ(h3, t.outer().generators().size());
            for (const auto& v : basis) REQUIRE(v.weight() != (Box{0, 0}));
        }
}

void dump_format() {
    auto basis = basis_single(YoungDiagram({1}));
    REQUIRE_EQ(dump_basis(basis),
               std::string("[{\"kind\":\"F\",\"src\":[1,0],\"tgt\":[0,0],\"w\":[-1,0]},"
                           "{\"kind\":\"F\",\"src\":[0,1],\"tgt\":[0,0],\"w\":[0,-1]}]"));
}

}  // namespace

int main() {
    pq_goldens();
    pq_cardinalities();
    single_basis();
    obstruction_tables();
    pair_basis();
    triple_basis();
    dump_format();
    return test_summary("tangent_test");
}
