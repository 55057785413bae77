#include "hilbflag/strata.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hilbflag/check.hpp"

namespace hilbflag {

HSType::HSType(std::vector<int> seq) : t(std::move(seq)) {
    while (!t.empty() && t.back() == 0) t.pop_back();
    for (int v : t) HF_CHECK(v > 0, "type entries must be positive");
}

int HSType::size() const {
    int total = 0;
    for (int v : t) total += v;
    return total;
}

int HSType::initial_degree() const {
    for (int i = 0; i < length(); ++i)
        if (t[i] < i + 1) return i;
    return length();
}

std::string HSType::to_string() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < length(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HSType& T) { return os << T.to_string(); }

bool is_admissible(const HSType& T) {
    for (int i = 0; i < T.length(); ++i)
        if (T.t[i] > i + 1 || T.t[i] <= 0) return false;
    for (int i = T.initial_degree() + 1; i < T.length(); ++i)
        if (T.t[i] > T.t[i - 1]) return false;
    return true;
}

HSType type_of(const YoungDiagram& g) { return HSType(g.diagonal_sequence()); }

namespace {

void tails_into(int remaining, int cap, std::vector<int>& tail,
                std::vector<HSType>& out, const std::vector<int>& staircase) {
    if (remaining == 0) {
        std::vector<int> seq = staircase;
        seq.insert(seq.end(), tail.begin(), tail.end());
        out.push_back(HSType(std::move(seq)));
        return;
    }
    for (int v = std::min(cap, remaining); v >= 1; --v) {
        tail.push_back(v);
        tails_into(remaining - v, v, tail, out, staircase);
        tail.pop_back();
    }
}

}  // namespace

std::vector<HSType> enumerate_types(int n) {
    HF_CHECK(n >= 0, "size must be nonnegative");
    std::vector<HSType> out;
    std::vector<int> staircase;
    for (int d = 0;; ++d) {
        int base = d * (d + 1) / 2;
        if (base > n) break;
        // Entries after the staircase prefix stay at most d and decrease.
        std::vector<int> tail;
        tails_into(n - base, d, tail, out, staircase);
        staircase.push_back(d + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

YoungDiagram normal_pattern_diagram(const HSType& T) {
    HF_CHECK(is_admissible(T), "normal pattern needs an admissible type " + T.to_string());
    // Column x collects one box from every antidiagonal with t_i > x.
    int width = 0;
    for (int v : T.t) width = std::max(width, v);
    std::vector<int> cols(width, 0);
    for (int v : T.t)
        for (int x = 0; x < v; ++x) ++cols[x];
    return YoungDiagram(cols);
}

int dim_MT(const HSType& T) {
    int penalty = 0;
    for (int j = 1; j <= T.length(); ++j) {
        int drop = T.at(j - 1) - T.at(j);
        if (drop > 0) penalty += drop * (drop + 1) / 2;
    }
    return T.size() - penalty;
}

int dim_GT(const HSType& T) {
    int out = 0;
    for (int j = T.initial_degree(); j <= T.length(); ++j)
        out += (T.at(j - 1) - T.at(j) + 1) * (T.at(j) - T.at(j + 1));
    return out;
}

std::string HSFlagType::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " < ";
        out += parts[i].to_string();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const HSFlagType& F) { return os << F.to_string(); }

bool is_admissible_flag(const HSFlagType& F) {
    if (F.parts.size() < 2 || F.parts.size() > 3) return false;
    for (const HSType& T : F.parts)
        if (!is_admissible(T)) return false;
    for (size_t i = 0; i + 1 < F.parts.size(); ++i) {
        const HSType& a = F.parts[i];
        const HSType& b = F.parts[i + 1];
        if (b.size() != a.size() + 1) return false;
        int bumps = 0;
        for (int k = 0; k < std::max(a.length(), b.length()); ++k) {
            int diff = b.at(k) - a.at(k);
            if (diff == 1)
                ++bumps;
            else if (diff != 0)
                return false;
        }
        if (bumps != 1) return false;
    }
    return true;
}

HSFlagType flag_type_of(const Flag2& f) {
    return {{type_of(f.base), type_of(f.outer())}};
}

HSFlagType flag_type_of(const Flag3& t) {
    return {{type_of(t.base), type_of(t.middle()), type_of(t.outer())}};
}

namespace {

std::vector<HSType> bump_options(const HSType& T) {
    std::vector<HSType> out;
    for (int k = 0; k <= T.length(); ++k) {
        std::vector<int> seq = T.t;
        if (k == T.length())
            seq.push_back(1);
        else
            ++seq[k];
        HSType bumped(std::move(seq));
        if (is_admissible(bumped)) out.push_back(std::move(bumped));
    }
    return out;
}

}  // namespace

std::vector<HSFlagType> enumerate_flag_types(int n, int depth) {
    HF_CHECK(depth == 2 || depth == 3, "flag depth must be 2 or 3");
    std::vector<HSFlagType> out;
    for (const HSType& first : enumerate_types(n))
        for (const HSType& second : bump_options(first)) {
            if (depth == 2) {
                out.push_back({{first, second}});
                continue;
            }
            for (const HSType& third : bump_options(second))
                out.push_back({{first, second, third}});
        }
    std::sort(out.begin(), out.end());
    return out;
}

int dim_pair_at(const Flag2& f, SpaceKind which) {
    int base = which == SpaceKind::M ? dim_MT(type_of(f.base)) : dim_GT(type_of(f.base));
    return base + bullet_star(f, which, false).net();
}

int dim_triple_at(const Flag3& t, SpaceKind which) {
    return dim_pair_at(t.step12(), which) + bullet_star(t.step23(), which, false).net() +
           diamond(t, which, false);
}

std::vector<StratumReport> stratum_reports(int n) {
    std::vector<StratumReport> out;
    std::map<HSType, size_t> slot;
    for (const HSType& T : enumerate_types(n)) {
        slot[T] = out.size();
        out.push_back({T, dim_MT(T), dim_GT(T), QPoly(), QPoly(), 0});
    }
    for (const YoungDiagram& g : enumerate_partitions(n)) {
        auto it = slot.find(type_of(g));
        HF_CHECK(it != slot.end(), "every realized type must be admissible: " + g.to_string());
        StratumReport& r = out[it->second];
        r.poincare_M += QPoly::monomial(pos_oneplus_single_M(g));
        r.poincare_G += QPoly::monomial(pos_oneplus_single_G(g));
        ++r.fixed_points;
    }
    for (const StratumReport& r : out)
        HF_CHECK(r.fixed_points > 0, "every admissible type must be realized: " + r.type.to_string());
    return out;
}

std::vector<FlagStratumReport> flag_stratum_reports(int n, int depth) {
    HF_CHECK(depth == 2 || depth == 3, "flag depth must be 2 or 3");
    std::vector<FlagStratumReport> out;
    std::map<HSFlagType, size_t> slot;
    for (const HSFlagType& F : enumerate_flag_types(n, depth)) {
        slot[F] = out.size();
        out.push_back({F, -1, -1, QPoly(), QPoly(), 0});
    }

    auto feed = [&](const HSFlagType& F, int dm, int dg, int pos_m, int pos_g) {
        auto it = slot.find(F);
        HF_CHECK(it != slot.end(),
                 "every realized flag type must be admissible: " + F.to_string());
        FlagStratumReport& r = out[it->second];
        if (r.fixed_points == 0) {
            r.dim_M = dm;
            r.dim_G = dg;
        } else {
            HF_CHECK(r.dim_M == dm && r.dim_G == dg,
                     "stratum dimension must not depend on the fixed point: " + F.to_string());
        }
        r.poincare_M += QPoly::monomial(pos_m);
        r.poincare_G += QPoly::monomial(pos_g);
        ++r.fixed_points;
    };

    if (depth == 2) {
        for (const Flag2& f : enumerate_flags2(n))
            feed(flag_type_of(f), dim_pair_at(f, SpaceKind::M), dim_pair_at(f, SpaceKind::G),
                 pos_oneplus_pair(f), pos_oneplus_pair_G(f));
    } else {
        for (const Flag3& t : enumerate_flags3(n))
            feed(flag_type_of(t), dim_triple_at(t, SpaceKind::M),
                 dim_triple_at(t, SpaceKind::G), pos_oneplus_triple(t),
                 pos_oneplus_triple_G(t));
    }
    for (const FlagStratumReport& r : out)
        HF_CHECK(r.fixed_points > 0,
                 "every admissible flag type must be realized: " + r.type.to_string());
    return out;
}

}  // namespace hilbflag
