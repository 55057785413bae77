#include "hilbflag/wallcross.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "hilbflag/check.hpp"
#include "hilbflag/parallel.hpp"

namespace hilbflag {

namespace {

Box flipped(Box b) { return {b.v, b.u}; }

TangentVector flipped(const TangentVector& v) {
    return {v.kind, flipped(v.src), flipped(v.tgt)};
}

Flag2 flipped(const Flag2& f) { return {f.base.transpose(), flipped(f.added)}; }

Flag3 flipped(const Flag3& t) {
    return {t.base.transpose(), flipped(t.first_added), flipped(t.second_added)};
}

bool valid_cell(Box b) { return b.u >= 0 && b.v >= 0; }

// Shape test for a raw box set: every box needs its left and lower neighbor.
bool is_diagram(const std::set<Box>& s) {
    for (Box b : s) {
        if (b.u > 0 && !s.count({b.u - 1, b.v})) return false;
        if (b.v > 0 && !s.count({b.u, b.v - 1})) return false;
    }
    return true;
}

YoungDiagram to_diagram(const std::set<Box>& s) {
    std::vector<int> cols;
    for (Box b : s) {
        if (b.u >= (int)cols.size()) cols.resize(b.u + 1, 0);
        cols[b.u] = std::max(cols[b.u], b.v + 1);
    }
    return YoungDiagram(std::move(cols));
}

// Components under side-adjacency. Corner contacts do not join regions: a
// box touching the moving region only diagonally stays put, otherwise runs
// drag along boxes whose departure can never be repaired by hops in one
// direction.
std::vector<std::vector<Box>> components4(const std::set<Box>& cells) {
    std::vector<std::vector<Box>> comps;
    std::set<Box> seen;
    const Box dirs[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (Box start : cells) {
        if (seen.count(start)) continue;
        std::vector<Box> comp;
        std::vector<Box> work{start};
        seen.insert(start);
        while (!work.empty()) {
            Box c = work.back();
            work.pop_back();
            comp.push_back(c);
            for (Box d : dirs) {
                Box nb = c + d;
                if (cells.count(nb) && !seen.count(nb)) {
                    seen.insert(nb);
                    work.push_back(nb);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

int lowest_row(const std::vector<Box>& comp) {
    int lo = comp.front().v;
    for (Box c : comp) lo = std::min(lo, c.v);
    return lo;
}

// The down-right case of the box-moving procedure. Boxes hop by t = gen-box;
// a run is organized in stages, each owning a connected region of boxes that
// can take a hop. The first stage takes the region containing the hop source
// and anchors it at the unique generator reachable from the region's lowest
// row; each later stage steps down the original generator list and only
// considers the rows between its own pulled-back cell and the previous one.
// Within a stage, all region boxes hop at once, then keep hopping while the
// landing is free and not below the anchor row, checking for a diagram after
// every round. A stalled stage hands over to the next one.
//
// Every round where the box set closes up to a diagram again is one stop of
// the descent. The plain run ends at the first stop; flag moves may need the
// descent continued, so the worker records up to max_stops of them and only
// treats running out of stages as an error while none has been seen.
void run_stages(const YoungDiagram& d, Box gen, Box box, size_t max_stops,
                std::vector<SlideRun>& stops) {
    const Box t = gen - box;
    HF_CHECK(t.u > 0 && t.v < 0, "hop direction must point down and right");
    HF_CHECK(d.can_add(gen), "hop destination cell must be addable");
    HF_CHECK(d.contains(box), "hop source must be a box of the diagram");

    std::set<Box> cur;
    for (Box b : d.boxes()) cur.insert(b);
    auto free_cell = [&](Box c) { return valid_cell(c) && !cur.count(c); };

    const std::vector<Box> gens = d.generators();  // decreasing u, increasing v

    int anchor_idx = -1;
    int band_hi = 0;  // exclusive upper row bound of the next stage's region
    bool first_stage = true;
    Box anchor{};
    Box target{};

    auto record = [&]() {
        YoungDiagram after = to_diagram(cur);
        HF_CHECK(after.size() == d.size(), "hops must preserve the box count");
        HF_CHECK(after.can_add(target), "the vacated cell must be addable afterwards");
        HF_CHECK(after.contains(anchor), "the anchor cell must be filled afterwards");
        stops.push_back({d, after, t, target, anchor});
    };

    while (true) {
        std::vector<Box> region;
        if (first_stage) {
            std::set<Box> movable;
            for (Box c : cur)
                if (free_cell(c + t)) movable.insert(c);
            // The hop source itself can always take the hop: it lands on the
            // empty destination cell. Its component leads the run.
            HF_CHECK(movable.count(box), "hop source must be able to take the hop");
            for (const auto& comp : components4(movable))
                if (std::binary_search(comp.begin(), comp.end(), box)) region = comp;
            int lo = lowest_row(region);
            bool found = false;
            for (Box c : region) {
                if (c.v != lo) continue;
                auto it = std::find(gens.begin(), gens.end(), c + t);
                if (it == gens.end()) continue;
                HF_CHECK(!found, "anchor generator must be unique");
                found = true;
                anchor = *it;
                target = c;
                anchor_idx = (int)(it - gens.begin());
            }
            HF_CHECK(found, "leading region must anchor at a generator");
            first_stage = false;
        } else {
            // Next generator down the list whose pulled-back cell is a box.
            int idx = anchor_idx - 1;
            while (idx >= 0 && !cur.count(gens[idx] - t)) --idx;
            if (idx < 0) {
                HF_CHECK(!stops.empty(), "procedure ran past the last generator");
                return;
            }
            anchor_idx = idx;
            anchor = gens[idx];
            target = anchor - t;
            if (cur.count(anchor) || target.v >= band_hi) {
                HF_CHECK(!stops.empty(), "descent must reach a diagram before stalling");
                return;
            }
            std::set<Box> band;
            for (Box c : cur)
                if (c.v >= target.v && c.v < band_hi && free_cell(c + t)) band.insert(c);
            auto comps = components4(band);
            for (auto& comp : comps)
                if (std::binary_search(comp.begin(), comp.end(), target)) region = comp;
            if (region.empty()) {
                HF_CHECK(!stops.empty(), "stage region must contain the pulled-back cell");
                return;
            }
        }
        band_hi = target.v;

        // Initial hop: the whole region at once. Source and landing sets are
        // disjoint from the rest by construction, so no collisions.
        std::set<Box> moved;
        bool stage_closed = false;
        for (Box c : region) cur.erase(c);
        for (Box c : region) {
            Box dst = c + t;
            HF_CHECK(!cur.count(dst), "region landing must be collision-free");
            cur.insert(dst);
            moved.insert(dst);
        }
        if (is_diagram(cur)) {
            record();
            if (stops.size() >= max_stops) return;
            stage_closed = true;
        }

        while (!stage_closed) {
            std::vector<Box> hop;
            for (Box c : moved) {
                Box dst = c + t;
                if (valid_cell(dst) && !cur.count(dst) && dst.v >= anchor.v) hop.push_back(c);
            }
            if (hop.empty()) break;
            for (Box c : hop) {
                cur.erase(c);
                moved.erase(c);
            }
            for (Box c : hop) {
                cur.insert(c + t);
                moved.insert(c + t);
            }
            if (is_diagram(cur)) {
                record();
                if (stops.size() >= max_stops) return;
                stage_closed = true;
            }
        }
    }
}

SlideRun run_down_right(const YoungDiagram& d, Box gen, Box box) {
    std::vector<SlideRun> stops;
    run_stages(d, gen, box, 1, stops);
    return stops.front();
}

// Quadrant cells of the line c + k*step, ordered by increasing k.
std::vector<Box> line_cells(Box c, Box step) {
    Box s = c;
    while (valid_cell(s - step)) s = s - step;
    std::vector<Box> cells;
    for (Box p = s; valid_cell(p); p = p + step) cells.push_back(p);
    return cells;
}

void require_basis_member(const std::vector<TangentVector>& basis, const TangentVector& v,
                          const mpq_class& W) {
    if (std::find(basis.begin(), basis.end(), v) == basis.end())
        throw std::invalid_argument("vector is not in the basis at this point");
    if (sign_under(v, TorusSpec::wall(W)) != Sign::zero)
        throw std::invalid_argument("vector has nonzero weight at this wall");
}

Flag2 pair_move(const Flag2& f, const TangentVector& v) {
    if (v.kind == VecKind::H2) {
        // The added box trades places with a hole of the outer diagram; no
        // other box is involved.
        HF_CHECK(v.tgt == f.added, "middle-step move must target the added box");
        Flag2 out{f.base, v.src};
        HF_CHECK(valid_flag2(out), "moved mark must keep the pair nested");
        return out;
    }
    HF_CHECK(v.kind == VecKind::F, "pair move needs a base vector head");
    if ((v.src - v.tgt).u < 0) return flipped(pair_move(flipped(f), flipped(v)));

    SlideRun base_run = slide_boxes(f.base, v.src, v.tgt);
    if (cell_attracted(base_run, f.added)) {
        // A base box landed on the mark at some point of the run; the mark
        // takes over the cell that box came from.
        Flag2 out{base_run.after, air_image(base_run, f.added)};
        HF_CHECK(valid_flag2(out), "attracted mark must keep the pair nested");
        return out;
    }
    HF_CHECK(f.added != v.src, "a mark on the destination cell must be attracted");
    SlideRun run = slide_boxes(f.outer(), v.src, v.tgt);
    Box mark = box_image(run, f.added);
    Flag2 out{run.after.without_box(mark), mark};
    HF_CHECK(valid_flag2(out), "riding mark must keep the pair nested");
    return out;
}

Flag3 triple_move(const Flag3& x, const TangentVector& v) {
    if (v.kind == VecKind::H3) {
        HF_CHECK(v.tgt == x.second_added, "outer-step move must target the second box");
        Flag3 out{x.base, x.first_added, v.src};
        HF_CHECK(valid_flag3(out), "moved outer mark must keep the flag nested");
        return out;
    }
    if (v.kind == VecKind::H2) {
        HF_CHECK(v.tgt == x.first_added, "middle-step move must target the first box");
        if (v.src == x.second_added) {
            // The destination hole is the second mark itself: the two marks
            // trade places and no other box moves.
            Flag3 out{x.base, x.second_added, x.first_added};
            HF_CHECK(valid_flag3(out), "swapped marks must keep the flag nested");
            return out;
        }
        if ((v.src - v.tgt).u < 0) return flipped(triple_move(flipped(x), flipped(v)));
        // Both marks ride as ordinary boxes of the outer diagram.
        SlideRun run = slide_boxes(x.outer(), v.src, v.tgt);
        Box m1 = box_image(run, x.first_added);
        Box m2 = box_image(run, x.second_added);
        Flag3 out{run.after.without_box(m2).without_box(m1), m1, m2};
        HF_CHECK(valid_flag3(out), "middle-step move must keep the flag nested");
        return out;
    }
    if ((v.src - v.tgt).u < 0) return flipped(triple_move(flipped(x), flipped(v)));

    // Base vector head. Everything displaced settles at the first consistent
    // spot along the move direction, and the configuration as a whole advances
    // as little as possible while still closing up to a nested flag. A mark
    // hit by a sliding box resolves as air over the run (it takes over the
    // cell its attractor came from), an untouched mark keeps its cell, and a
    // stranded mark whose cell no longer fits hops forward along the move
    // direction to the first cell that does. If the first mark is never hit
    // it rides as a box of the middle diagram, whose run in turn decides the
    // second mark the same way; if neither mark is hit both ride as boxes of
    // the outer diagram. When no branch closes the flag, the base descent
    // itself continues past its first stop, and the mark resolution is
    // retried at each later stop in turn.
    const Box t = v.src - v.tgt;

    auto try_base = [&](const SlideRun& run) -> std::optional<Flag3> {
        if (!cell_attracted(run, x.first_added)) return std::nullopt;
        Box m1 = air_image(run, x.first_added);
        if (!run.after.can_add(m1)) return std::nullopt;
        YoungDiagram mid = run.after.with_box(m1);
        Box m2 = air_image(run, x.second_added);
        while (!mid.can_add(m2)) {
            m2 = m2 + t;
            if (!valid_cell(m2)) return std::nullopt;
        }
        Flag3 out{run.after, m1, m2};
        if (!valid_flag3(out)) return std::nullopt;
        return out;
    };
    auto try_middle = [&]() -> std::optional<Flag3> {
        if (!x.middle().can_add(v.src)) return std::nullopt;
        SlideRun run = slide_boxes(x.middle(), v.src, v.tgt);
        if (!cell_attracted(run, x.second_added)) return std::nullopt;
        Box m1 = box_image(run, x.first_added);
        if (!run.after.can_remove(m1)) return std::nullopt;
        Flag3 out{run.after.without_box(m1), m1, air_image(run, x.second_added)};
        if (!valid_flag3(out)) return std::nullopt;
        return out;
    };
    auto try_outer = [&]() -> std::optional<Flag3> {
        if (!x.outer().can_add(v.src)) return std::nullopt;
        SlideRun run = slide_boxes(x.outer(), v.src, v.tgt);
        Box m1 = box_image(run, x.first_added);
        Box m2 = box_image(run, x.second_added);
        if (!run.after.can_remove(m2)) return std::nullopt;
        YoungDiagram base = run.after.without_box(m2);
        if (!base.can_remove(m1)) return std::nullopt;
        Flag3 out{base.without_box(m1), m1, m2};
        if (!valid_flag3(out)) return std::nullopt;
        return out;
    };

    const std::vector<SlideRun> stops = slide_stops(x.base, v.src, v.tgt);
    if (auto out = try_base(stops.front())) return *out;
    if (auto out = try_middle()) return *out;
    if (auto out = try_outer()) return *out;
    for (size_t k = 1; k < stops.size(); ++k)
        if (auto out = try_base(stops[k])) return *out;
    HF_CHECK(false, "no reading of the base move closes the flag");
    throw std::logic_error("unreachable");
}

// Family traits used by the wall/orbit machinery.

struct SingleTraits {
    using Point = YoungDiagram;
    static constexpr PointFamily family = PointFamily::single;
    static std::vector<Point> enumerate(int n) { return enumerate_partitions(n); }
    static std::vector<TangentVector> basis(const Point& p) { return basis_single(p); }
    static Point move(const Point& p, const TangentVector& v) {
        return slide_boxes(p, v.src, v.tgt).after;
    }
    static std::string label(const Point& p) { return p.to_string(); }
    static int size_bound(int n) { return n; }
};

struct PairTraits {
    using Point = Flag2;
    static constexpr PointFamily family = PointFamily::pair;
    static std::vector<Point> enumerate(int n) { return enumerate_flags2(n); }
    static std::vector<TangentVector> basis(const Point& p) { return basis_pair(p); }
    static Point move(const Point& p, const TangentVector& v) { return pair_move(p, v); }
    static std::string label(const Point& p) {
        std::ostringstream os;
        os << p.base.to_string() << "+" << p.added;
        return os.str();
    }
    static int size_bound(int n) { return n + 1; }
};

struct TripleTraits {
    using Point = Flag3;
    static constexpr PointFamily family = PointFamily::triple;
    static std::vector<Point> enumerate(int n) { return enumerate_flags3(n); }
    static std::vector<TangentVector> basis(const Point& p) { return basis_triple(p); }
    static Point move(const Point& p, const TangentVector& v) { return triple_move(p, v); }
    static std::string label(const Point& p) {
        std::ostringstream os;
        os << p.base.to_string() << "+" << p.first_added << "+" << p.second_added;
        return os.str();
    }
    static int size_bound(int n) { return n + 2; }
};

void collect_walls(const std::vector<TangentVector>& basis, std::set<mpq_class>& out) {
    for (const TangentVector& v : basis) {
        Box w = v.weight();
        if (w.v == 0) continue;
        mpq_class r(-w.u, w.v);
        r.canonicalize();
        if (r > 1) out.insert(r);
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

template <class Traits>
OrbitGraph graph_from(const std::vector<typename Traits::Point>& pts,
                      const std::vector<std::vector<TangentVector>>& bases, int n,
                      const mpq_class& W) {
    OrbitGraph g;
    g.family = Traits::family;
    g.n = n;
    g.wall = W;
    std::map<typename Traits::Point, int> index;
    for (int i = 0; i < (int)pts.size(); ++i) index.emplace(pts[i], i);
    TorusSpec at = TorusSpec::wall(W);
    UnionFind uf((int)pts.size());
    for (int i = 0; i < (int)pts.size(); ++i) {
        g.labels.push_back(Traits::label(pts[i]));
        g.pos.push_back(pos_count(bases[i], at));
        g.splus.push_back(s_plus(bases[i], at));
        g.sminus.push_back(s_minus(bases[i], at));
        for (const TangentVector& v : bases[i]) {
            if (sign_under(v, at) != Sign::zero) continue;
            typename Traits::Point y = Traits::move(pts[i], v);
            auto it = index.find(y);
            HF_CHECK(it != index.end(), "move must land on a fixed point of the family");
            g.edges.push_back({i, it->second, v});
            uf.unite(i, it->second);
        }
    }
    std::map<int, std::vector<int>> buckets;
    for (int i = 0; i < (int)pts.size(); ++i) buckets[uf.find(i)].push_back(i);
    for (auto& [root, members] : buckets) g.orbits.push_back(std::move(members));
    std::sort(g.orbits.begin(), g.orbits.end());
    return g;
}

template <class Traits>
WallReport verify_from(const std::vector<typename Traits::Point>& pts,
                       const std::vector<std::vector<TangentVector>>& bases, int n,
                       const mpq_class& W) {
    WallReport rep;
    rep.wall = W;
    auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };
    try {
        OrbitGraph g = graph_from<Traits>(pts, bases, n, W);
        rep.points = (int)pts.size();
        rep.orbit_count = (int)g.orbits.size();
        for (const auto& orb : g.orbits) rep.orbit_sizes.push_back((int)orb.size());

        // Perturbed counts decompose as the exact count plus the zero block.
        TorusSpec above = TorusSpec::wall(W, TorusSpec::Side::plus);
        TorusSpec below = TorusSpec::wall(W, TorusSpec::Side::minus);
        for (int i = 0; i < (int)pts.size(); ++i) {
            if (pos_count(bases[i], above) != g.pos[i] + g.splus[i])
                fail("pos above the wall does not split at " + g.labels[i]);
            if (pos_count(bases[i], below) != g.pos[i] + g.sminus[i])
                fail("pos below the wall does not split at " + g.labels[i]);
            rep.side_plus += QPoly::monomial(g.pos[i] + g.splus[i]);
            rep.side_minus += QPoly::monomial(g.pos[i] + g.sminus[i]);
        }
        if (rep.side_plus != rep.side_minus) fail("the two perturbed polynomials differ");

        for (size_t k = 0; k < g.orbits.size(); ++k) {
            const auto& orb = g.orbits[k];
            std::map<int, int> plus_hist, minus_hist;
            for (int i : orb) {
                if (g.pos[i] != g.pos[orb.front()])
                    fail("pos not constant on orbit of " + g.labels[orb.front()]);
                int total = g.splus[i] + g.sminus[i];
                if (total != g.splus[orb.front()] + g.sminus[orb.front()])
                    fail("zero-weight count not constant on orbit of " + g.labels[orb.front()]);
                ++plus_hist[g.splus[i]];
                ++minus_hist[g.sminus[i]];
            }
            if (plus_hist != minus_hist)
                fail("s histograms differ on orbit of " + g.labels[orb.front()]);
        }

        // Every move must be undone by a zero-weight move of the same wall.
        TorusSpec at = TorusSpec::wall(W);
        for (const SlideEdge& e : g.edges) {
            bool undone = false;
            for (const TangentVector& v : bases[e.to]) {
                if (sign_under(v, at) != Sign::zero) continue;
                try {
                    if (Traits::move(pts[e.to], v) == pts[e.from]) {
                        undone = true;
                        break;
                    }
                } catch (const std::exception&) {
                    // a failed candidate is not a violation by itself
                }
            }
            if (!undone)
                fail("no inverse move from " + g.labels[e.to] + " back to " + g.labels[e.from]);
        }
    } catch (const std::exception& err) {
        fail(err.what());
    }
    return rep;
}

template <class Traits>
SweepReport sweep_impl(int n) {
    SweepReport rep;
    rep.n = n;
    rep.family = Traits::family;

    auto pts = Traits::enumerate(n);
    std::vector<std::vector<TangentVector>> bases(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) bases[i] = Traits::basis(pts[i]);

    std::set<mpq_class> wall_set;
    for (const auto& b : bases) collect_walls(b, wall_set);
    std::vector<mpq_class> desc(wall_set.rbegin(), wall_set.rend());

    rep.per_wall.resize(desc.size());
    int wall_count = (int)desc.size();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_budget())
#endif
    for (int i = 0; i < wall_count; ++i)
        rep.per_wall[i] = verify_from<Traits>(pts, bases, n, desc[i]);

    auto counts = [&](const TorusSpec& s) {
        std::vector<int> c(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) c[i] = pos_count(bases[i], s);
        return c;
    };
    auto poly_of = [](const std::vector<int>& c) {
        QPoly p;
        for (int v : c) p += QPoly::monomial(v);
        return p;
    };
    int bound = Traits::size_bound(n);
    std::vector<int> c_inf = counts(TorusSpec::infinity_for(bound));
    std::vector<int> c_one = counts(TorusSpec::oneplus_for(bound));
    rep.at_infinity = poly_of(c_inf);
    rep.at_oneplus = poly_of(c_one);

    auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };
    // Chain the segments between walls pointwise: each generic stretch of
    // ratios is sampled identically from either end.
    std::vector<int> prev = c_inf;
    for (int i = 0; i < wall_count; ++i) {
        std::vector<int> up = counts(TorusSpec::wall(desc[i], TorusSpec::Side::plus));
        if (up != prev) {
            std::ostringstream os;
            os << "counts jump approaching wall " << desc[i].get_str() << " from above";
            fail(os.str());
        }
        prev = counts(TorusSpec::wall(desc[i], TorusSpec::Side::minus));
    }
    if (prev != c_one) fail("counts below the last wall differ from the ratio-1 side");
    if (rep.at_infinity != rep.at_oneplus) fail("the two limit polynomials differ");
    return rep;
}

}  // namespace

const char* family_name(PointFamily f) {
    switch (f) {
        case PointFamily::single: return "single";
        case PointFamily::pair: return "pair";
        case PointFamily::triple: return "triple";
    }
    return "?";
}

std::vector<mpq_class> walls(int n, PointFamily family) {
    std::set<mpq_class> out;
    switch (family) {
        case PointFamily::single:
            for (const auto& p : enumerate_partitions(n)) collect_walls(basis_single(p), out);
            break;
        case PointFamily::pair:
            for (const auto& p : enumerate_flags2(n)) collect_walls(basis_pair(p), out);
            break;
        case PointFamily::triple:
            for (const auto& p : enumerate_flags3(n)) collect_walls(basis_triple(p), out);
            break;
    }
    return {out.begin(), out.end()};
}

SlideRun slide_boxes(const YoungDiagram& d, Box gen, Box box) {
    Box t = gen - box;
    HF_CHECK(t.u != 0 && t.v != 0, "hop direction must not be axis-aligned");
    if (t.u > 0) return run_down_right(d, gen, box);
    SlideRun r = run_down_right(d.transpose(), flipped(gen), flipped(box));
    return {d, r.after.transpose(), flipped(r.step), flipped(r.inv_gen), flipped(r.inv_box)};
}

std::vector<SlideRun> slide_stops(const YoungDiagram& d, Box gen, Box box) {
    Box t = gen - box;
    HF_CHECK(t.u != 0 && t.v != 0, "hop direction must not be axis-aligned");
    std::vector<SlideRun> stops;
    if (t.u > 0) {
        run_stages(d, gen, box, std::numeric_limits<size_t>::max(), stops);
        return stops;
    }
    std::vector<SlideRun> raw;
    run_stages(d.transpose(), flipped(gen), flipped(box),
               std::numeric_limits<size_t>::max(), raw);
    for (const SlideRun& r : raw)
        stops.push_back({d, r.after.transpose(), flipped(r.step),
                         flipped(r.inv_gen), flipped(r.inv_box)});
    return stops;
}

Box box_image(const SlideRun& r, Box c) {
    HF_CHECK(r.before.contains(c), "box_image needs a box of the starting diagram");
    std::vector<Box> line = line_cells(c, r.step);
    int rank = 0;
    for (Box p : line) {
        if (p == c) break;
        if (r.before.contains(p)) ++rank;
    }
    int seen = 0;
    for (Box p : line) {
        if (!r.after.contains(p)) continue;
        if (seen == rank) return p;
        ++seen;
    }
    HF_CHECK(false, "line occupancy changed across the run");
    return c;
}

Box air_image(const SlideRun& r, Box c) {
    HF_CHECK(valid_cell(c) && !r.before.contains(c), "air_image needs an empty cell");
    std::vector<Box> line = line_cells(c, r.step);
    int rank = 0;
    for (Box p : line) {
        if (p == c) break;
        if (!r.before.contains(p)) ++rank;
    }
    int seen = 0;
    for (Box p : line) {
        if (r.after.contains(p)) continue;
        if (seen == rank) return p;
        ++seen;
    }
    HF_CHECK(false, "line occupancy changed across the run");
    return c;
}

bool cell_attracted(const SlideRun& r, Box c) { return air_image(r, c) != c; }

YoungDiagram slide(const YoungDiagram& g, const TangentVector& v, const mpq_class& W) {
    require_basis_member(basis_single(g), v, W);
    return slide_boxes(g, v.src, v.tgt).after;
}

Flag2 slide(const Flag2& f, const TangentVector& v, const mpq_class& W) {
    require_basis_member(basis_pair(f), v, W);
    return pair_move(f, v);
}

Flag3 slide(const Flag3& t, const TangentVector& v, const mpq_class& W) {
    require_basis_member(basis_triple(t), v, W);
    return triple_move(t, v);
}

int OrbitGraph::orbit_of(int point) const {
    for (int k = 0; k < (int)orbits.size(); ++k)
        if (std::binary_search(orbits[k].begin(), orbits[k].end(), point)) return k;
    return -1;
}

namespace {

template <class Traits>
OrbitGraph graph_entry(int n, const mpq_class& W) {
    auto pts = Traits::enumerate(n);
    std::vector<std::vector<TangentVector>> bases(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) bases[i] = Traits::basis(pts[i]);
    return graph_from<Traits>(pts, bases, n, W);
}

template <class Traits>
WallReport verify_entry(int n, const mpq_class& W) {
    auto pts = Traits::enumerate(n);
    std::vector<std::vector<TangentVector>> bases(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) bases[i] = Traits::basis(pts[i]);
    return verify_from<Traits>(pts, bases, n, W);
}

template <class Traits>
std::vector<std::vector<typename Traits::Point>> orbit_points(int n, const mpq_class& W) {
    auto pts = Traits::enumerate(n);
    std::vector<std::vector<TangentVector>> bases(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) bases[i] = Traits::basis(pts[i]);
    OrbitGraph g = graph_from<Traits>(pts, bases, n, W);
    std::vector<std::vector<typename Traits::Point>> out;
    for (const auto& orb : g.orbits) {
        std::vector<typename Traits::Point> members;
        for (int i : orb) members.push_back(pts[i]);
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace

OrbitGraph orbit_graph(int n, PointFamily family, const mpq_class& W) {
    switch (family) {
        case PointFamily::single: return graph_entry<SingleTraits>(n, W);
        case PointFamily::pair: return graph_entry<PairTraits>(n, W);
        case PointFamily::triple: return graph_entry<TripleTraits>(n, W);
    }
    throw std::invalid_argument("unknown family");
}

std::vector<std::vector<YoungDiagram>> orbits_single(int n, const mpq_class& W) {
    return orbit_points<SingleTraits>(n, W);
}

std::vector<std::vector<Flag2>> orbits_pair(int n, const mpq_class& W) {
    return orbit_points<PairTraits>(n, W);
}

std::vector<std::vector<Flag3>> orbits_triple(int n, const mpq_class& W) {
    return orbit_points<TripleTraits>(n, W);
}

WallReport verify_wall(int n, PointFamily family, const mpq_class& W) {
    switch (family) {
        case PointFamily::single: return verify_entry<SingleTraits>(n, W);
        case PointFamily::pair: return verify_entry<PairTraits>(n, W);
        case PointFamily::triple: return verify_entry<TripleTraits>(n, W);
    }
    throw std::invalid_argument("unknown family");
}

bool SweepReport::ok() const {
    if (!failures.empty()) return false;
    for (const auto& w : per_wall)
        if (!w.ok()) return false;
    return true;
}

SweepReport sweep(int n, PointFamily family) {
    switch (family) {
        case PointFamily::single: return sweep_impl<SingleTraits>(n);
        case PointFamily::pair: return sweep_impl<PairTraits>(n);
        case PointFamily::triple: return sweep_impl<TripleTraits>(n);
    }
    throw std::invalid_argument("unknown family");
}

std::string graph_to_json(const OrbitGraph& g) {
    nlohmann::ordered_json j;
    j["family"] = family_name(g.family);
    j["n"] = g.n;
    j["wall"] = g.wall.get_str();
    auto nodes = nlohmann::ordered_json::array();
    for (size_t i = 0; i < g.labels.size(); ++i) {
        nlohmann::ordered_json node;
        node["id"] = i;
        node["label"] = g.labels[i];
        node["pos"] = g.pos[i];
        node["s_plus"] = g.splus[i];
        node["s_minus"] = g.sminus[i];
        node["orbit"] = g.orbit_of((int)i);
        nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);
    auto edges = nlohmann::ordered_json::array();
    for (const SlideEdge& e : g.edges) {
        nlohmann::ordered_json edge;
        edge["from"] = e.from;
        edge["to"] = e.to;
        edge["kind"] = e.vec.kind == VecKind::F ? "F" : (e.vec.kind == VecKind::H2 ? "H2" : "H3");
        edge["src"] = {e.vec.src.u, e.vec.src.v};
        edge["tgt"] = {e.vec.tgt.u, e.vec.tgt.v};
        edges.push_back(std::move(edge));
    }
    j["edges"] = std::move(edges);
    j["orbits"] = g.orbits;
    return j.dump(2);
}

std::string graph_to_dot(const OrbitGraph& g) {
    std::ostringstream os;
    os << "digraph wallcross {\n";
    os << "  label=\"" << family_name(g.family) << " n=" << g.n << " W=" << g.wall.get_str()
       << "\";\n";
    os << "  node [shape=box];\n";
    for (size_t k = 0; k < g.orbits.size(); ++k) {
        os << "  subgraph cluster_" << k << " {\n";
        os << "    label=\"orbit " << k << "\";\n";
        for (int i : g.orbits[k])
            os << "    p" << i << " [label=\"" << g.labels[i] << "\\npos=" << g.pos[i] << " s=("
               << g.splus[i] << "," << g.sminus[i] << ")\"];\n";
        os << "  }\n";
    }
    for (const SlideEdge& e : g.edges) {
        os << "  p" << e.from << " -> p" << e.to << " [label=\"" << e.vec.src << "->" << e.vec.tgt
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace hilbflag
