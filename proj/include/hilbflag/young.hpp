#pragma once

// Young diagrams stored as weakly decreasing column heights, plus the flag
// types (nested diagrams with the added boxes distinguished) and exhaustive
// enumeration. Coordinates are (u, v) = (column / x-exponent, row / y-exponent).

#include <compare>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

namespace hilbflag {

struct Box {
    int u = 0;
    int v = 0;
    friend constexpr auto operator<=>(const Box&, const Box&) = default;
};

constexpr Box operator+(Box a, Box b) { return {a.u + b.u, a.v + b.v}; }
constexpr Box operator-(Box a, Box b) { return {a.u - b.u, a.v - b.v}; }
constexpr int total_degree(Box b) { return b.u + b.v; }

inline std::ostream& operator<<(std::ostream& os, const Box& b) {
    return os << "(" << b.u << "," << b.v << ")";
}

class YoungDiagram {
public:
    YoungDiagram() = default;
    // Throws std::invalid_argument unless heights are positive and weakly decreasing.
    explicit YoungDiagram(std::vector<int> column_heights);

    int size() const { return size_; }
    int length() const { return static_cast<int>(cols_.size()); }  // number of columns
    int height() const { return cols_.empty() ? 0 : cols_[0]; }
    bool empty() const { return cols_.empty(); }
    const std::vector<int>& columns() const { return cols_; }

    int column_height(int u) const;  // 0 beyond the last column
    int row_width(int v) const;      // number of boxes in row v
    bool contains(Box b) const;

    std::vector<Box> boxes() const;  // column-major: u ascending, then v ascending
    YoungDiagram transpose() const;

    bool can_add(Box b) const;       // adding b keeps the diagram shape
    bool can_remove(Box b) const;    // b is a corner
    YoungDiagram with_box(Box b) const;
    YoungDiagram without_box(Box b) const;

    // External corners of the complement, i.e. the standard monomial generators
    // of the ideal. Ordered by strictly decreasing u; v is strictly increasing.
    std::vector<Box> generators() const;
    // Removable boxes, numbered from the right (decreasing u).
    std::vector<Box> corners() const;

    int arm(Box b) const;  // boxes strictly right of b in its row
    int leg(Box b) const;  // boxes strictly above b in its column
    int hook_difference(Box b) const { return arm(b) - leg(b); }

    // t_i = number of boxes on the antidiagonal u + v = i.
    std::vector<int> diagonal_sequence() const;

    std::string to_string() const;  // e.g. "[3,1]"

    friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

private:
    std::vector<int> cols_;
    int size_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const YoungDiagram& g) {
    return os << g.to_string();
}

// Generator list together with the gap statistics p_i (vertical distance to
// the next generator, infinite at the end) and q_i (horizontal distance to
// the previous generator, infinite at the front).
struct GeneratorInfo {
    static constexpr int INF = std::numeric_limits<int>::max();
    std::vector<Box> gens;

    int count() const { return static_cast<int>(gens.size()); }
    int last() const { return count() - 1; }  // the index s
    int p(int i) const;
    int q(int i) const;
    int index_of(Box g) const;  // -1 if not a generator
};

GeneratorInfo generator_info(const YoungDiagram& g);

// A nested pair Γ₁ ⊂ Γ₂ differing by the distinguished box α_j.
struct Flag2 {
    YoungDiagram base;
    Box added;

    YoungDiagram outer() const { return base.with_box(added); }
    int j_index() const;  // position of `added` in base.generators()

    friend auto operator<=>(const Flag2&, const Flag2&) = default;
};

// A nested triple Γ₁ ⊂ Γ₂ ⊂ Γ₃ with added boxes α_j then α'_l.
struct Flag3 {
    YoungDiagram base;
    Box first_added;
    Box second_added;

    YoungDiagram middle() const { return base.with_box(first_added); }
    YoungDiagram outer() const { return middle().with_box(second_added); }
    int j_index() const;
    int l_index() const;  // position of second_added among middle().generators()
    Flag2 step12() const { return {base, first_added}; }
    Flag2 step23() const { return {middle(), second_added}; }

    // Case b: the second box sits immediately above or immediately right of
    // the first; every other relative position is case a.
    bool case_b() const;

    friend auto operator<=>(const Flag3&, const Flag3&) = default;
};

bool valid_flag2(const Flag2& f);
bool valid_flag3(const Flag3& f);

// All partitions of n as diagrams, lexicographic in the height sequence.
std::vector<YoungDiagram> enumerate_partitions(int n);
std::vector<Flag2> enumerate_flags2(int n);   // base of size n
std::vector<Flag3> enumerate_flags3(int n);

// Saturated chains in Young's lattice from rank k to rank m, summed over all
// start and end shapes. count_chains(k, k) = p(k).
unsigned long long count_chains(int k, int m);

}  // namespace hilbflag
