#include "hilbflag/correspond.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "hilbflag/check.hpp"
#include "hilbflag/parallel.hpp"
#include "hilbflag/weights.hpp"

namespace hilbflag {

namespace {

std::string pair_label(const MarkedPair& p) {
    std::ostringstream os;
    os << p.shape.to_string() << "-" << p.right_mark << "-" << p.left_mark;
    return os.str();
}

std::string flag_label(const Flag3& f) {
    std::ostringstream os;
    os << f.base.to_string() << "+" << f.first_added << "+" << f.second_added;
    return os.str();
}

}  // namespace

YoungDiagram MarkedPair::level() const {
    return shape.without_box(right_mark).without_box(left_mark);
}

bool valid_marked_pair(const MarkedPair& p) {
    if (!(p.shape.can_remove(p.right_mark) && p.shape.can_remove(p.left_mark))) return false;
    if (p.right_mark.u <= p.left_mark.u) return false;
    if (p.right_mark.v == p.left_mark.v) return false;
    return p.shape.without_box(p.right_mark).can_remove(p.left_mark);
}

std::vector<MarkedPair> enumerate_tr(int m) {
    HF_CHECK(m >= 0, "marked pairs need a non-negative level size");
    std::vector<MarkedPair> out;
    for (const YoungDiagram& shape : enumerate_partitions(m + 2)) {
        std::vector<Box> corners = shape.corners();
        for (size_t i = 0; i < corners.size(); ++i) {
            for (size_t j = i + 1; j < corners.size(); ++j) {
                MarkedPair p{shape, corners[i], corners[j]};
                HF_CHECK(valid_marked_pair(p), "corner pairs never share a row or column");
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

int pos_tr(const MarkedPair& p, int m) {
    HF_CHECK(p.shape.size() == m + 2, "pos_tr level size must match the shape");
    return m + 1 - p.shape.length();
}

QPoly tr_poly(int m, bool parallel) {
    std::vector<MarkedPair> pairs = enumerate_tr(m);
    auto exponent = [&](long long i) { return pos_tr(pairs[i], m); };
    long long count = (long long)pairs.size();
    return parallel ? parallel_qsum(count, exponent) : serial_qsum(count, exponent);
}

std::pair<Flag3, Flag3> bn_preimage(const MarkedPair& p) {
    HF_CHECK(valid_marked_pair(p), "bn_preimage needs a valid marked pair");
    const YoungDiagram level = p.level();
    const std::vector<Box> gens = level.generators();
    const std::vector<Box> corners = level.corners();
    // The staircase interlocks the two lists: k corners between k+1
    // generators, each corner sitting between its neighbours in u.
    HF_CHECK(corners.size() + 1 == gens.size(), "generator and corner counts must interlock");
    for (size_t r = 0; r < corners.size(); ++r)
        HF_CHECK(gens[r].u > corners[r].u && corners[r].u >= gens[r + 1].u,
                 "corner numbering must interleave the generators");

    int a = -1, b = -1;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i] == p.left_mark) a = (int)i;
        if (gens[i] == p.right_mark) b = (int)i;
    }
    HF_CHECK(b >= 0 && a > b, "marks must be generators of the level");

    auto flag_at = [&](Box gen, Box corner) {
        Flag3 f{level.without_box(corner), corner, gen};
        HF_CHECK(valid_flag3(f), "fiber element must be a valid flag");
        return f;
    };
    return {flag_at(gens[a], corners[a - b - 1]), flag_at(gens[b], corners[a - 1])};
}

BnReport verify_bn(int n) {
    HF_CHECK(n >= 0, "verify_bn needs a non-negative size");
    BnReport rep;
    const std::vector<Flag3> flags = enumerate_flags3(n);
    const std::vector<MarkedPair> pairs = enumerate_tr(n + 1);
    rep.flags = (long long)flags.size();
    rep.pairs = (long long)pairs.size();

    auto complain = [&](std::string msg) {
        rep.ok = false;
        if (rep.violations.size() < 8) rep.violations.push_back(std::move(msg));
    };

    std::map<Flag3, int> seen;
    for (const MarkedPair& p : pairs) {
        auto [hi, lo] = bn_preimage(p);
        ++seen[hi];
        ++seen[lo];
        int r = pos_tr(p, n + 1);
        if (pos_infty_triple(hi) != r + 1 || pos_infty_triple(lo) != r) {
            std::ostringstream os;
            os << "fiber of " << pair_label(p) << " has dims {"
               << pos_infty_triple(hi) << "," << pos_infty_triple(lo)
               << "}, target " << r;
            complain(os.str());
        }
    }

    for (const Flag3& f : flags) {
        auto it = seen.find(f);
        if (it == seen.end())
            complain("flag " + flag_label(f) + " is missed by every fiber");
        else if (it->second != 1)
            complain("flag " + flag_label(f) + " is hit " + std::to_string(it->second) + " times");
    }
    if ((long long)seen.size() > rep.flags)
        complain("some fiber element is not a flag of the right size");

    rep.flag_poly = poincare_triple(n, TorusKind::infinity);
    rep.pair_poly = QPoly(std::vector<mpz_class>{1, 1}) * tr_poly(n + 1);
    if (rep.flag_poly != rep.pair_poly)
        complain("flag polynomial " + rep.flag_poly.to_string() +
                 " differs from (q+1)-scaled pair polynomial " + rep.pair_poly.to_string());
    return rep;
}

std::string bn_fibers_json(int n) {
    nlohmann::ordered_json j;
    j["n"] = n;
    BnReport rep = verify_bn(n);
    j["ok"] = rep.ok;
    j["flags"] = rep.flags;
    j["pairs"] = rep.pairs;
    auto fibers = nlohmann::ordered_json::array();
    for (const MarkedPair& p : enumerate_tr(n + 1)) {
        auto [hi, lo] = bn_preimage(p);
        nlohmann::ordered_json rec;
        rec["shape"] = p.shape.columns();
        rec["marks"] = {{p.right_mark.u, p.right_mark.v}, {p.left_mark.u, p.left_mark.v}};
        rec["level"] = p.level().columns();
        rec["pos"] = pos_tr(p, n + 1);
        auto flag_json = [](const Flag3& f) {
            nlohmann::ordered_json fj;
            fj["base"] = f.base.columns();
            fj["first"] = {f.first_added.u, f.first_added.v};
            fj["second"] = {f.second_added.u, f.second_added.v};
            fj["pos"] = pos_infty_triple(f);
            return fj;
        };
        rec["fiber"] = {flag_json(hi), flag_json(lo)};
        fibers.push_back(std::move(rec));
    }
    j["fibers"] = std::move(fibers);
    if (!rep.violations.empty()) j["violations"] = rep.violations;
    return j.dump(2);
}

bool valid_pair13(const Pair13& p) {
    if (p.outer.size() != p.inner.size() + 2) return false;
    for (int u = 0; u < p.inner.length(); ++u)
        if (p.inner.column_height(u) > p.outer.column_height(u)) return false;
    return true;
}

std::vector<Pair13> enumerate_pairs13(int n) {
    HF_CHECK(n >= 0, "nested pairs need a non-negative size");
    std::vector<Pair13> out;
    for (const YoungDiagram& inner : enumerate_partitions(n)) {
        std::set<YoungDiagram> outers;
        for (Box g1 : inner.generators()) {
            YoungDiagram mid = inner.with_box(g1);
            for (Box g2 : mid.generators()) outers.insert(mid.with_box(g2));
        }
        for (const YoungDiagram& outer : outers) out.push_back({inner, outer});
    }
    return out;
}

Flag3 sn(const Pair13& p) {
    HF_CHECK(valid_pair13(p), "sn needs a valid nested pair");
    std::vector<Box> skew;
    for (Box b : p.outer.boxes())
        if (!p.inner.contains(b)) skew.push_back(b);
    HF_CHECK(skew.size() == 2, "the difference must hold exactly two boxes");
    auto key = [](Box b) { return std::pair<int, int>(total_degree(b), b.v); };
    if (key(skew[1]) < key(skew[0])) std::swap(skew[0], skew[1]);
    Flag3 f{p.inner, skew[0], skew[1]};
    HF_CHECK(valid_flag3(f), "middle insertion must preserve the diagram shape");
    return f;
}

QPoly poincare_pair13(int n, bool parallel) {
    std::vector<Pair13> pairs = enumerate_pairs13(n);
    auto exponent = [&](long long i) { return pos_oneplus_triple(sn(pairs[i])); };
    long long count = (long long)pairs.size();
    return parallel ? parallel_qsum(count, exponent) : serial_qsum(count, exponent);
}

}  // namespace hilbflag
