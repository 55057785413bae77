#include "hilbflag/tangent.hpp"

#include <algorithm>
#include <sstream>

#include "hilbflag/check.hpp"

namespace hilbflag {

std::ostream& operator<<(std::ostream& os, const TangentVector& v) {
    const char* k = v.kind == VecKind::F ? "F" : v.kind == VecKind::H2 ? "H2" : "H3";
    return os << k << v.src << "->" << v.tgt;
}

PQSets pq_sets(const YoungDiagram& g, int i) {
    GeneratorInfo gi = generator_info(g);
    HF_CHECK(i >= 0 && i < gi.count(), "generator index out of range");
    Box alpha = gi.gens[i];
    int p = gi.p(i);
    int q = gi.q(i);
    PQSets out;
    for (Box b : g.boxes()) {
        if (p != GeneratorInfo::INF && b.u < alpha.u && !g.contains(b + Box{0, p}))
            out.P.push_back(b);
        if (q != GeneratorInfo::INF && b.v < alpha.v && !g.contains(b + Box{q, 0}))
            out.Q.push_back(b);
    }
    return out;
}

std::vector<TangentVector> basis_single(const YoungDiagram& g) {
    std::vector<TangentVector> out;
    out.reserve(2 * g.size());
    GeneratorInfo gi = generator_info(g);
    for (int i = 0; i < gi.count(); ++i) {
        PQSets pq = pq_sets(g, i);
        for (Box b : pq.P) out.push_back({VecKind::F, gi.gens[i], b});
        for (Box b : pq.Q) out.push_back({VecKind::F, gi.gens[i], b});
    }
    HF_CHECK(static_cast<int>(out.size()) == 2 * g.size(), "|B| must be 2n at " + g.to_string());
    return out;
}

PairCase pair_case(const YoungDiagram& g, int j) {
    GeneratorInfo gi = generator_info(g);
    HF_CHECK(j >= 0 && j < gi.count(), "generator index out of range");
    bool p1 = gi.p(j) == 1;
    bool q1 = gi.q(j) == 1;
    if (p1 && q1) return PairCase::c3;
    if (q1) return PairCase::c1a;
    if (p1) return PairCase::c1b;
    return PairCase::c2;
}

const char* pair_case_name(PairCase c) {
    switch (c) {
        case PairCase::c1a: return "1a";
        case PairCase::c1b: return "1b";
        case PairCase::c2: return "2";
        case PairCase::c3: return "3";
    }
    return "?";
}

std::vector<ObsElement> obs12(const Flag2& f) {
    GeneratorInfo gi = generator_info(f.base);
    int j = f.j_index();
    Box aj = f.added;
    PairCase c = pair_case(f.base, j);

    // Index windows for the two branches, per case.
    int x_from = (c == PairCase::c1b || c == PairCase::c3) ? j + 2 : j + 1;
    int y_until = (c == PairCase::c1a || c == PairCase::c3) ? j - 1 : j;  // exclusive

    std::vector<ObsElement> out;
    for (int i = 0; i < y_until; ++i) {
        Box tgt = aj - Box{0, gi.p(i)};
        HF_CHECK(f.base.contains(tgt), "obstruction target must lie in the base diagram");
        out.push_back({gi.gens[i], tgt, false});
    }
    for (int i = x_from; i < gi.count(); ++i) {
        Box tgt = aj - Box{gi.q(i), 0};
        HF_CHECK(f.base.contains(tgt), "obstruction target must lie in the base diagram");
        out.push_back({gi.gens[i], tgt, true});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Box> transformed_generators(const Flag2& f) {
    std::vector<Box> gens = f.base.generators();
    int j = f.j_index();
    Box aj = f.added;
    switch (pair_case(f.base, j)) {
        case PairCase::c1a:
            gens[j] = aj + Box{0, 1};
            break;
        case PairCase::c1b:
            gens[j] = aj + Box{1, 0};
            break;
        case PairCase::c2:
            gens[j] = aj + Box{1, 0};
            gens.insert(gens.begin() + j + 1, aj + Box{0, 1});
            break;
        case PairCase::c3:
            gens.erase(gens.begin() + j);
            break;
    }
    return gens;
}

namespace {

bool contains_pair(const std::vector<ObsElement>& obs, Box gen, Box tgt) {
    return std::any_of(obs.begin(), obs.end(),
                       [&](const ObsElement& e) { return e.gen == gen && e.tgt == tgt; });
}

std::vector<TangentVector> surviving_f(const YoungDiagram& base,
                                       const std::vector<ObsElement>& excluded) {
    std::vector<TangentVector> out;
    for (const TangentVector& v : basis_single(base))
        if (!contains_pair(excluded, v.src, v.tgt)) out.push_back(v);
    return out;
}

}  // namespace

std::vector<TangentVector> basis_pair(const Flag2& f) {
    YoungDiagram g2 = f.outer();
    std::vector<Box> gens2 = g2.generators();
    HF_CHECK(transformed_generators(f) == gens2,
             "case analysis must reproduce the outer generator list at " + f.base.to_string());

    std::vector<ObsElement> obs = obs12(f);
    HF_CHECK(obs.size() + 2 == gens2.size(), "|Obs| must be s'-1 at " + f.base.to_string());

    std::vector<TangentVector> out;
    for (Box g : gens2) out.push_back({VecKind::H2, g, f.added});
    for (const TangentVector& v : surviving_f(f.base, obs)) out.push_back(v);
    HF_CHECK(static_cast<int>(out.size()) == 2 * f.base.size() + 2,
             "|B| must be 2n+2 at " + f.base.to_string());
    return out;
}

TripleParts triple_parts(const Flag3& t) {
    TripleParts parts;
    parts.case_b = t.case_b();
    parts.obs23 = obs12(t.step23());

    YoungDiagram g2 = t.middle();
    GeneratorInfo gi2 = generator_info(g2);
    Box aj = t.first_added;

    if (parts.case_b) {
        // The elements aimed straight at α_j have no preimage in B(Γ₁); they
        // cancel against the H2 vectors of the same generators instead.
        for (const ObsElement& e : parts.obs23)
            if (e.tgt == aj) {
                parts.notp.push_back(e);
                parts.excluded_h2_sources.push_back(e.gen);
            }
    } else {
        // Exactly one obs23 element looks back at the box diagonally above
        // α_j; it is the one obstructed by the first step.
        Box diag = aj + Box{1, 1};
        for (const ObsElement& e : parts.obs23) {
            int i = gi2.index_of(e.gen);
            HF_CHECK(i >= 0, "obs23 source must be a generator of the middle diagram");
            Box probe = e.x_branch ? e.gen + Box{gi2.q(i), 0} : e.gen + Box{0, gi2.p(i)};
            if (probe == diag) parts.notp.push_back(e);
        }
        HF_CHECK(parts.notp.size() == 1,
                 "case a must single out one obstruction at " + t.base.to_string());
    }

    // Pull the remaining second-step obstructions back to B(Γ₁).
    std::vector<TangentVector> b1 = basis_single(t.base);
    auto in_b1 = [&](Box src, Box tgt) {
        return std::find(b1.begin(), b1.end(), TangentVector{VecKind::F, src, tgt}) != b1.end();
    };
    for (const ObsElement& e : parts.obs23) {
        if (contains_pair(parts.notp, e.gen, e.tgt)) continue;
        std::vector<TangentVector> candidates;
        for (Box shift : {Box{0, 0}, Box{0, 1}, Box{1, 0}}) {
            Box src = e.gen - shift;
            Box tgt = e.tgt - shift;
            if (src.u < 0 || src.v < 0 || tgt.u < 0 || tgt.v < 0) continue;
            if (in_b1(src, tgt)) candidates.push_back({VecKind::F, src, tgt});
        }
        HF_CHECK(candidates.size() == 1,
                 "second-step obstruction must pull back uniquely at " + t.base.to_string());
        parts.pobs.push_back(candidates[0]);
    }
    HF_CHECK(parts.pobs.size() == parts.obs23.size() - parts.notp.size(),
             "|PObs| must be |Obs23| - |NotP|");
    return parts;
}

std::vector<TangentVector> basis_triple(const Flag3& t) {
    TripleParts parts = triple_parts(t);
    std::vector<ObsElement> obs1 = obs12(t.step12());
    for (const TangentVector& v : parts.pobs)
        HF_CHECK(!contains_pair(obs1, v.src, v.tgt),
                 "pulled-back obstructions must be disjoint from the first-step ones");

    std::vector<TangentVector> out;
    for (Box g : t.outer().generators()) out.push_back({VecKind::H3, g, t.second_added});
    for (Box g : t.middle().generators()) {
        bool dropped = std::find(parts.excluded_h2_sources.begin(),
                                 parts.excluded_h2_sources.end(),
                                 g) != parts.excluded_h2_sources.end();
        if (!dropped) out.push_back({VecKind::H2, g, t.first_added});
    }
    std::vector<ObsElement> excluded = obs1;
    for (const TangentVector& v : parts.pobs) excluded.push_back({v.src, v.tgt, false});
    for (const TangentVector& v : surviving_f(t.base, excluded)) out.push_back(v);

    int expected = 2 * t.base.size() + (parts.case_b ? 4 : 5);
    HF_CHECK(static_cast<int>(out.size()) == expected,
             "|B| must be 2n+5 or 2n+4 by case at " + t.base.to_string());
    return out;
}

std::string dump_basis(const std::vector<TangentVector>& basis) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < basis.size(); ++i) {
        const TangentVector& v = basis[i];
        const char* k = v.kind == VecKind::F ? "F" : v.kind == VecKind::H2 ? "H2" : "H3";
        Box w = v.weight();
        if (i) os << ",";
        os << "{\"kind\":\"" << k << "\",\"src\":[" << v.src.u << "," << v.src.v
           << "],\"tgt\":[" << v.tgt.u << "," << v.tgt.v << "],\"w\":[" << w.u << "," << w.v
           << "]}";
    }
    os << "]";
    return os.str();
}

}  // namespace hilbflag
