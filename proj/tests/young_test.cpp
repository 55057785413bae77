#include "hilbflag/young.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "test_common.hpp"

using namespace hilbflag;

namespace {

// Independent partition-count oracle: Euler's pentagonal number recurrence.
// Shares nothing with the enumeration code under test.
long long partition_count(int n) {
    static std::vector<long long> memo{1};
    for (int m = (int)memo.size(); m <= n; ++m) {
        long long total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) total += sign * memo[m - g1];
            if (g2 <= m) total += sign * memo[m - g2];
        }
        memo.push_back(total);
    }
    return memo[n];
}

// Independent chain-count oracle for chains starting at the empty diagram:
// the number of standard Young tableaux of each shape, via the hook length
// formula, summed over shapes.
long long syt_total(int n) {
    long long total = 0;
    for (const auto& g : enumerate_partitions(n)) {
        // f^λ = n! / ∏ hooks, computed as an exact integer division at the end.
        long long numer = 1;
        for (int i = 2; i <= n; ++i) numer *= i;
        long long hooks = 1;
        for (Box b : g.boxes()) hooks *= g.arm(b) + g.leg(b) + 1;
        total += numer / hooks;
    }
    return total;
}

void construction_and_lookup() {
    YoungDiagram g(std::vector<int>{5, 4, 3, 1});
    REQUIRE_EQ(g.size(), 13);
    REQUIRE_EQ(g.length(), 4);
    REQUIRE_EQ(g.height(), 5);
    REQUIRE(g.contains({3, 0}));
    REQUIRE(!g.contains({3, 1}));
    REQUIRE(!g.contains({4, 0}));
    REQUIRE_EQ(g.row_width(0), 4);
    REQUIRE_EQ(g.row_width(3), 2);
    REQUIRE_EQ(g.row_width(4), 1);

    bool threw = false;
    try {
        YoungDiagram bad(std::vector<int>{1, 2});
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    REQUIRE(threw);

    REQUIRE_EQ(YoungDiagram().size(), 0);
    REQUIRE_EQ(YoungDiagram().to_string(), std::string("[]"));
}

void diagonal_sequences() {
    REQUIRE_EQ(YoungDiagram({5, 4, 3, 1}).diagonal_sequence(), (std::vector<int>{1, 2, 3, 4, 3}));
    REQUIRE_EQ(YoungDiagram({1}).diagonal_sequence(), (std::vector<int>{1}));
    REQUIRE_EQ(YoungDiagram({2, 1}).diagonal_sequence(), (std::vector<int>{1, 2}));
    REQUIRE_EQ(YoungDiagram().diagonal_sequence(), (std::vector<int>{}));

    for (int n = 0; n <= 9; ++n)
        for (const auto& g : enumerate_partitions(n))
            REQUIRE(g.transpose().diagonal_sequence() == g.diagonal_sequence());
}

void hooks() {
    YoungDiagram col3({3});
    REQUIRE_EQ(col3.hook_difference({0, 0}), -2);
    REQUIRE_EQ(col3.hook_difference({0, 2}), 0);
    YoungDiagram g21({2, 1});
    for (Box b : g21.boxes()) REQUIRE_EQ(g21.hook_difference(b), 0);
    REQUIRE_EQ(YoungDiagram({1}).hook_difference({0, 0}), 0);

    // Transposing negates every hook difference.
    for (int n = 1; n <= 9; ++n)
        for (const auto& g : enumerate_partitions(n)) {
            YoungDiagram t = g.transpose();
            for (Box b : g.boxes())
                REQUIRE_EQ(t.hook_difference({b.v, b.u}), -g.hook_difference(b));
        }
}

void generators_and_corners() {
    REQUIRE_EQ(YoungDiagram().generators(), (std::vector<Box>{{0, 0}}));
    REQUIRE_EQ(YoungDiagram({1}).generators(), (std::vector<Box>{{1, 0}, {0, 1}}));
    REQUIRE_EQ(YoungDiagram({2, 1}).generators(), (std::vector<Box>{{2, 0}, {1, 1}, {0, 2}}));
    REQUIRE_EQ(YoungDiagram({1}).corners(), (std::vector<Box>{{0, 0}}));
    REQUIRE_EQ(YoungDiagram({2, 1}).corners(), (std::vector<Box>{{1, 0}, {0, 1}}));
    REQUIRE_EQ(YoungDiagram({3, 3, 1}).corners(), (std::vector<Box>{{2, 0}, {1, 2}}));

    GeneratorInfo gi = generator_info(YoungDiagram({1}));
    REQUIRE_EQ(gi.p(0), 1);
    REQUIRE_EQ(gi.q(1), 1);
    REQUIRE_EQ(gi.p(1), GeneratorInfo::INF);
    REQUIRE_EQ(gi.q(0), GeneratorInfo::INF);

    for (int n = 0; n <= 9; ++n)
        for (const auto& g : enumerate_partitions(n)) {
            auto gens = g.generators();
            for (size_t i = 0; i + 1 < gens.size(); ++i) {
                REQUIRE(gens[i].u > gens[i + 1].u);
                REQUIRE(gens[i].v < gens[i + 1].v);
            }
            for (Box b : gens) REQUIRE(g.can_add(b));
            for (Box b : gens) REQUIRE(g.with_box(b).size() == n + 1);
            for (Box b : g.corners()) REQUIRE(g.without_box(b).size() == n - 1);
            // Generators and corners interleave: one more generator than corners.
            if (n > 0) REQUIRE_EQ(gens.size(), g.corners().size() + 1);
        }
}

void enumeration_counts() {
    for (int n = 0; n <= 14; ++n)
        REQUIRE_EQ((long long)enumerate_partitions(n).size(), partition_count(n));
    REQUIRE_EQ(enumerate_partitions(12).size(), (size_t)77);

    // Deterministic lexicographic order, no duplicates.
    auto p8 = enumerate_partitions(8);
    REQUIRE(std::is_sorted(p8.begin(), p8.end()));
    REQUIRE(std::adjacent_find(p8.begin(), p8.end()) == p8.end());
}

void flags_and_chains() {
    REQUIRE_EQ(enumerate_flags3(0).size(), (size_t)2);
    REQUIRE_EQ(enumerate_flags3(1).size(), (size_t)4);
    REQUIRE_EQ(enumerate_flags3(2).size(), (size_t)10);

    for (int n = 0; n <= 8; ++n) {
        REQUIRE_EQ((unsigned long long)enumerate_flags2(n).size(), count_chains(n, n + 1));
        REQUIRE_EQ((unsigned long long)enumerate_flags3(n).size(), count_chains(n, n + 2));
        for (const auto& f : enumerate_flags2(n)) REQUIRE(valid_flag2(f));
        for (const auto& f : enumerate_flags3(n)) REQUIRE(valid_flag3(f));
    }

    REQUIRE_EQ(count_chains(2, 2), (unsigned long long)2);
    REQUIRE_EQ(count_chains(0, 4), (unsigned long long)10);
    REQUIRE_EQ(count_chains(2, 5), (unsigned long long)26);
    // Chains from the empty diagram are standard Young tableaux.
    for (int n = 0; n <= 9; ++n)
        REQUIRE_EQ((long long)count_chains(0, n), syt_total(n));

    // Flag indices and the case split.
    Flag3 chain{YoungDiagram({1}), {0, 1}, {0, 2}};
    REQUIRE_EQ(chain.j_index(), 1);
    REQUIRE_EQ(chain.l_index(), 1);
    REQUIRE(chain.case_b());
    Flag3 spread{YoungDiagram({1}), {0, 1}, {1, 0}};
    REQUIRE(!spread.case_b());
    REQUIRE(spread.middle() == YoungDiagram({2}));
    REQUIRE(spread.outer() == YoungDiagram({2, 1}));
}

}  // namespace

int main() {
    construction_and_lookup();
    diagonal_sequences();
    hooks();
    generators_and_corners();
    enumeration_counts();
    flags_and_chains();
    return test_summary("young_test");
}
