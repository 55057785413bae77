#include "hilbflag/young.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hilbflag {

YoungDiagram::YoungDiagram(std::vector<int> column_heights) : cols_(std::move(column_heights)) {
    for (size_t i = 0; i < cols_.size(); ++i) {
        if (cols_[i] <= 0) throw std::invalid_argument("column heights must be positive");
        if (i > 0 && cols_[i] > cols_[i - 1])
            throw std::invalid_argument("column heights must be weakly decreasing");
        size_ += cols_[i];
    }
}

int YoungDiagram::column_height(int u) const {
    return (u >= 0 && u < length()) ? cols_[u] : 0;
}

int YoungDiagram::row_width(int v) const {
    // Columns are weakly decreasing, so the row ends at the first short column.
    int w = 0;
    while (w < length() && cols_[w] > v) ++w;
    return w;
}

bool YoungDiagram::contains(Box b) const {
    return b.u >= 0 && b.v >= 0 && b.u < length() && b.v < cols_[b.u];
}

std::vector<Box> YoungDiagram::boxes() const {
    std::vector<Box> out;
    out.reserve(size_);
    for (int u = 0; u < length(); ++u)
        for (int v = 0; v < cols_[u]; ++v) out.push_back({u, v});
    return out;
}

YoungDiagram YoungDiagram::transpose() const {
    std::vector<int> rows;
    rows.reserve(height());
    for (int v = 0; v < height(); ++v) rows.push_back(row_width(v));
    return YoungDiagram(std::move(rows));
}

bool YoungDiagram::can_add(Box b) const {
    if (b.u < 0 || b.v < 0 || contains(b)) return false;
    return b.v == column_height(b.u) && (b.u == 0 || column_height(b.u - 1) > column_height(b.u));
}

bool YoungDiagram::can_remove(Box b) const {
    if (!contains(b)) return false;
    return b.v == cols_[b.u] - 1 && column_height(b.u + 1) <= b.v;
}

YoungDiagram YoungDiagram::with_box(Box b) const {
    if (!can_add(b)) throw std::invalid_argument("box is not addable at " + to_string());
    std::vector<int> c = cols_;
    if (b.u == length())
        c.push_back(1);
    else
        ++c[b.u];
    return YoungDiagram(std::move(c));
}

YoungDiagram YoungDiagram::without_box(Box b) const {
    if (!can_remove(b)) throw std::invalid_argument("box is not removable from " + to_string());
    std::vector<int> c = cols_;
    if (--c[b.u] == 0) c.pop_back();
    return YoungDiagram(std::move(c));
}

std::vector<Box> YoungDiagram::generators() const {
    std::vector<Box> out;
    // The fresh column (u = length) is always addable; for the empty diagram
    // that is the unit generator (0,0).
    for (int u = length(); u >= 0; --u)
        if (u == length() || u == 0 || cols_[u - 1] > cols_[u]) out.push_back({u, column_height(u)});
    return out;
}

std::vector<Box> YoungDiagram::corners() const {
    std::vector<Box> out;
    for (int u = length() - 1; u >= 0; --u)
        if (column_height(u + 1) < cols_[u]) out.push_back({u, cols_[u] - 1});
    return out;
}

int YoungDiagram::arm(Box b) const {
    if (!contains(b)) throw std::invalid_argument("box outside diagram");
    return row_width(b.v) - b.u - 1;
}

int YoungDiagram::leg(Box b) const {
    if (!contains(b)) throw std::invalid_argument("box outside diagram");
    return cols_[b.u] - b.v - 1;
}

std::vector<int> YoungDiagram::diagonal_sequence() const {
    if (empty()) return {};
    std::vector<int> t(length() + height(), 0);
    for (int u = 0; u < length(); ++u)
        for (int v = 0; v < cols_[u]; ++v) ++t[u + v];
    while (!t.empty() && t.back() == 0) t.pop_back();
    return t;
}

std::string YoungDiagram::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < cols_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(cols_[i]);
    }
    return s + "]";
}

int GeneratorInfo::p(int i) const {
    return i + 1 < count() ? gens[i + 1].v - gens[i].v : INF;
}

int GeneratorInfo::q(int i) const {
    return i > 0 ? gens[i - 1].u - gens[i].u : INF;
}

int GeneratorInfo::index_of(Box g) const {
    for (int i = 0; i < count(); ++i)
        if (gens[i] == g) return i;
    return -1;
}

GeneratorInfo generator_info(const YoungDiagram& g) { return {g.generators()}; }

int Flag2::j_index() const {
    int j = generator_info(base).index_of(added);
    if (j < 0) throw std::invalid_argument("added box is not a generator of the base");
    return j;
}

int Flag3::j_index() const { return step12().j_index(); }

int Flag3::l_index() const {
    int l = generator_info(middle()).index_of(second_added);
    if (l < 0) throw std::invalid_argument("second box is not a generator of the middle diagram");
    return l;
}

bool Flag3::case_b() const {
    return second_added == first_added + Box{0, 1} || second_added == first_added + Box{1, 0};
}

bool valid_flag2(const Flag2& f) { return f.base.can_add(f.added); }

bool valid_flag3(const Flag3& f) {
    return valid_flag2(f.step12()) && f.middle().can_add(f.second_added);
}

namespace {

void extend_partition(int remaining, int max_part, std::vector<int>& acc,
                      std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.push_back(YoungDiagram(acc));
        return;
    }
    for (int part = 1; part <= std::min(remaining, max_part); ++part) {
        acc.push_back(part);
        extend_partition(remaining - part, part, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<YoungDiagram> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("negative partition size");
    std::vector<YoungDiagram> out;
    std::vector<int> acc;
    // Heights are generated largest-first; re-sorting the results gives the
    // lexicographic order on height sequences.
    extend_partition(n, n == 0 ? 1 : n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Flag2> enumerate_flags2(int n) {
    std::vector<Flag2> out;
    for (const auto& g : enumerate_partitions(n))
        for (Box b : g.generators()) out.push_back({g, b});
    return out;
}

std::vector<Flag3> enumerate_flags3(int n) {
    std::vector<Flag3> out;
    for (const auto& f : enumerate_flags2(n))
        for (Box b : f.outer().generators()) out.push_back({f.base, f.added, b});
    return out;
}

unsigned long long count_chains(int k, int m) {
    if (k < 0 || m < k) throw std::invalid_argument("count_chains needs 0 <= k <= m");
    std::map<YoungDiagram, unsigned long long> level;
    for (const auto& g : enumerate_partitions(k)) level[g] = 1;
    for (int rank = k; rank < m; ++rank) {
        std::map<YoungDiagram, unsigned long long> next;
        for (const auto& [g, ways] : level)
            for (Box b : g.generators()) next[g.with_box(b)] += ways;
        level = std::move(next);
    }
    unsigned long long total = 0;
    for (const auto& [g, ways] : level) total += ways;
    return total;
}

}  // namespace hilbflag
