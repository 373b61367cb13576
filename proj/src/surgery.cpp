#include "sutura/surgery.hpp"

#include "sutura/error.hpp"
#include "sutura/sfh.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace sutura {

namespace {

// which way the six coupon ports are turned for an upwards move
constexpr int kUpShift = 1;
// an upwards pinwheel has every half-arc leaving through the end of its side
constexpr bool kUpPinwheelAtEnd = false;

struct Layout {
    const Diagram& g;
    std::vector<int> rid;
    std::vector<ChordSides> sides;
    std::vector<std::vector<std::pair<int, int>>> cycle;  // per region: (chord, entry point)

    explicit Layout(const Diagram& d) : g(d), rid(region_of_arcs(d)), sides(chord_sides(d)) {
        int count = *std::max_element(rid.begin(), rid.end()) + 1;
        cycle.resize(static_cast<std::size_t>(count));
        std::vector<bool> seen(rid.size(), false);
        for (int k = 0; k < g.points(); ++k) {
            if (seen[static_cast<std::size_t>(k)]) continue;
            auto& cyc = cycle[static_cast<std::size_t>(rid[static_cast<std::size_t>(k)])];
            int arc = k;
            while (!seen[static_cast<std::size_t>(arc)]) {
                seen[static_cast<std::size_t>(arc)] = true;
                int s = g.wrap(arc + 1);
                cyc.emplace_back(g.chord_of(s), s);
                arc = g.mate(s);
            }
        }
    }

    bool bounds(int region, int chord) const {
        const auto& s = sides[static_cast<std::size_t>(chord)];
        return s.inner == region || s.outer == region;
    }
    int across(int chord, int region) const {
        const auto& s = sides[static_cast<std::size_t>(chord)];
        return s.inner == region ? s.outer : s.inner;
    }
    // position of a touch along the boundary cycle of a region
    std::optional<double> position(int region, const Touch& tc) const {
        const auto& cyc = cycle[static_cast<std::size_t>(region)];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (cyc[i].first != tc.chord) continue;
            int a = g.chord(tc.chord).first;
            return static_cast<double>(i) + (cyc[i].second == a ? tc.t : 1.0 - tc.t);
        }
        return std::nullopt;
    }
};

struct Segment {
    int region;
    double from, to;  // from = arc end, to = crossing
    std::size_t arc;
};

std::optional<std::vector<Segment>> segments(const Layout& L, const std::vector<AttachingArc>& arcs) {
    std::vector<Segment> out;
    for (std::size_t q = 0; q < arcs.size(); ++q) {
        const auto& c = arcs[q];
        const int nch = L.g.chords();
        for (const auto* tc : {&c.e1, &c.x, &c.e3})
            if (tc->chord < 0 || tc->chord >= nch || tc->t <= 0.0 || tc->t >= 1.0) return std::nullopt;
        if (c.r1 < 0 || c.r1 >= static_cast<int>(L.cycle.size()) || !L.bounds(c.r1, c.x.chord)) return std::nullopt;
        int r2 = L.across(c.x.chord, c.r1);
        auto p1 = L.position(c.r1, c.e1), px1 = L.position(c.r1, c.x);
        auto px2 = L.position(r2, c.x), p3 = L.position(r2, c.e3);
        if (!p1 || !px1 || !px2 || !p3) return std::nullopt;
        out.push_back({c.r1, *p1, *px1, q});
        out.push_back({r2, *p3, *px2, q});
    }
    return out;
}

bool crossing_free(const std::vector<Segment>& segs, const std::vector<AttachingArc>& arcs) {
    // touches on one chord must be distinct
    std::vector<std::pair<int, double>> all;
    for (const auto& c : arcs)
        for (const auto* tc : {&c.e1, &c.x, &c.e3}) all.emplace_back(tc->chord, tc->t);
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            if (segs[i].region != segs[j].region) continue;
            double lo = std::min(segs[i].from, segs[i].to), hi = std::max(segs[i].from, segs[i].to);
            auto inside = [&](double p) { return lo < p && p < hi; };
            if (inside(segs[j].from) != inside(segs[j].to)) return false;
        }
    return true;
}

void require(const BypassSystem& sys) {
    if (!realizable(sys)) throw Error(ErrorKind::ArcNotOnDiagram, "bypass system cannot be drawn on " + sys.base.str());
}

}  // namespace

std::vector<ChordSides> chord_sides(const Diagram& g) {
    auto rid = region_of_arcs(g);
    std::vector<ChordSides> out(static_cast<std::size_t>(g.chords()));
    for (int c = 0; c < g.chords(); ++c) {
        auto [a, b] = g.chord(c);
        out[static_cast<std::size_t>(c)] = {rid[static_cast<std::size_t>(a)], rid[static_cast<std::size_t>(b)]};
    }
    return out;
}

int far_region(const Diagram& g, const AttachingArc& c) {
    auto s = chord_sides(g)[static_cast<std::size_t>(c.x.chord)];
    return s.inner == c.r1 ? s.outer : s.inner;
}

ArcClass classify(const AttachingArc& c) {
    if (c.e1.chord == c.x.chord && c.x.chord == c.e3.chord) return ArcClass::Supertrivial;
    if (c.e1.chord == c.x.chord || c.x.chord == c.e3.chord) return ArcClass::SlightlyTrivial;
    return ArcClass::Nontrivial;
}

bool realizable(const BypassSystem& sys) {
    Layout L(sys.base);
    auto segs = segments(L, sys.arcs);
    return segs && crossing_free(*segs, sys.arcs);
}

DiagramOrZero surgery(const BypassSystem& sys, Dir dir) {
    require(sys);
    const Diagram& g = sys.base;
    if (sys.arcs.empty()) return g;
    Layout L(g);
    const int pts = g.points();
    const int shift = dir == Dir::Up ? kUpShift : -kUpShift;
    const int nodes = pts + 6 * static_cast<int>(sys.arcs.size());
    auto port = [pts](std::size_t q, int p) { return pts + 6 * static_cast<int>(q) + p; };

    std::vector<int> outside(static_cast<std::size_t>(nodes), -1);
    auto link = [&](int u, int v) {
        outside[static_cast<std::size_t>(u)] = v;
        outside[static_cast<std::size_t>(v)] = u;
    };
    struct Event {
        double t;
        int a_side, b_side;
    };
    std::vector<std::vector<Event>> on(static_cast<std::size_t>(g.chords()));
    for (std::size_t q = 0; q < sys.arcs.size(); ++q) {
        const auto& c = sys.arcs[q];
        int r2 = L.across(c.x.chord, c.r1);
        std::array<std::pair<const Touch*, int>, 3> hits{
            {{&c.e1, c.r1}, {&c.x, r2}, {&c.e3, L.across(c.e3.chord, r2)}}};
        for (int k = 0; k < 3; ++k) {
            const Touch& tc = *hits[static_cast<std::size_t>(k)].first;
            bool a_top = hits[static_cast<std::size_t>(k)].second == L.sides[static_cast<std::size_t>(tc.chord)].inner;
            int top = port(q, k), bottom = port(q, 5 - k);
            on[static_cast<std::size_t>(tc.chord)].push_back({tc.t, a_top ? top : bottom, a_top ? bottom : top});
        }
    }
    for (int ch = 0; ch < g.chords(); ++ch) {
        auto [a, b] = g.chord(ch);
        auto& ev = on[static_cast<std::size_t>(ch)];
        std::sort(ev.begin(), ev.end(), [](const Event& x, const Event& y) { return x.t < y.t; });
        int prev = a;
        for (const auto& e : ev) {
            link(prev, e.a_side);
            prev = e.b_side;
        }
        link(prev, b);
    }
    auto inside = [&](int node) {
        int q = (node - pts) / 6, p = (node - pts) % 6;
        return pts + 6 * q + (((5 - p + 2 * shift) % 6) + 6) % 6;
    };

    std::vector<bool> seen(static_cast<std::size_t>(nodes), false);
    std::vector<int> mates(static_cast<std::size_t>(pts), -1);
    for (int p = 0; p < pts; ++p) {
        if (mates[static_cast<std::size_t>(p)] >= 0) continue;
        seen[static_cast<std::size_t>(p)] = true;
        int cur = outside[static_cast<std::size_t>(p)];
        while (cur >= pts) {
            seen[static_cast<std::size_t>(cur)] = true;
            int nxt = inside(cur);
            seen[static_cast<std::size_t>(nxt)] = true;
            cur = outside[static_cast<std::size_t>(nxt)];
        }
        seen[static_cast<std::size_t>(cur)] = true;
        mates[static_cast<std::size_t>(p)] = cur;
        mates[static_cast<std::size_t>(cur)] = p;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return Zero{};
    return Diagram::from_mates(std::move(mates));
}

DiagramOrZero surgery(const Diagram& g, const AttachingArc& c, Dir dir) { return surgery(BypassSystem{g, {c}}, dir); }

DiagramOrZero surgery(const DiagramOrZero& g, const AttachingArc& c, Dir dir) {
    if (is_zero(g)) return Zero{};
    return surgery(diagram_of(g), c, dir);
}

std::array<Diagram, 3> bypass_triple(const Diagram& g, const AttachingArc& c) {
    if (classify(c) != ArcClass::Nontrivial) throw Error(ErrorKind::TrivialArc, "bypass triple needs three distinct chords");
    auto up = surgery(g, c, Dir::Up), down = surgery(g, c, Dir::Down);
    return {g, diagram_of(up), diagram_of(down)};
}

AttachingArc boundary_arc(const Diagram& g, int y) {
    auto rid = region_of_arcs(g);
    auto near = [&](int p) {
        auto [a, b] = g.chord(g.chord_of(p));
        return Touch{g.chord_of(p), g.wrap(p) == a ? 0.1 : 0.9};
    };
    return {near(y - 1), near(y), near(y + 1), rid[static_cast<std::size_t>(g.wrap(y - 1))]};
}

namespace {

std::vector<ArcInfo> find_arcs(const Diagram& g, const std::optional<BasisAnatomy>& an) {
    Layout L(g);
    auto chords_of = [&](int region) {
        std::vector<int> out;
        for (auto [c, s] : L.cycle[static_cast<std::size_t>(region)]) out.push_back(c);
        return out;
    };
    auto regs = regions(g);
    std::vector<ArcInfo> out;
    auto trivial = [&](AttachingArc c, bool direct) {
        ArcInfo info{c, classify(c), std::nullopt, std::nullopt, direct};
        if (is_zero(surgery(g, c, Dir::Up))) info.vanishes = Dir::Up;
        else if (is_zero(surgery(g, c, Dir::Down))) info.vanishes = Dir::Down;
        out.push_back(info);
    };
    for (int c2 = 0; c2 < g.chords(); ++c2) {
        const auto s = L.sides[static_cast<std::size_t>(c2)];
        for (int c1 : chords_of(s.inner)) {
            if (c1 == c2) continue;
            for (int c3 : chords_of(s.outer)) {
                if (c3 == c2) continue;
                ArcInfo info{{{c1, 0.5}, {c2, 0.5}, {c3, 0.5}, s.inner}, ArcClass::Nontrivial, std::nullopt, std::nullopt, false};
                if (an) {
                    int cr1 = an->created[static_cast<std::size_t>(c1)], cr3 = an->created[static_cast<std::size_t>(c3)];
                    int outer = cr1 < cr3 ? L.across(c1, s.inner) : L.across(c3, s.outer);
                    info.forwards = regs[static_cast<std::size_t>(outer)].sign < 0;
                }
                out.push_back(info);
            }
        }
        for (int r1 : {s.inner, s.outer}) {
            int r2 = L.across(c2, r1);
            for (int c3 : chords_of(r2)) {
                if (c3 == c2) continue;
                trivial({{c2, 0.3}, {c2, 0.6}, {c3, 0.5}, r1}, false);
                trivial({{c2, 0.6}, {c2, 0.3}, {c3, 0.5}, r1}, false);
            }
        }
        std::array<double, 3> t{0.25, 0.5, 0.75};
        do {
            trivial({{c2, t[0]}, {c2, t[1]}, {c2, t[2]}, s.inner}, t[1] == 0.5);
        } while (std::next_permutation(t.begin(), t.end()));
    }
    return out;
}

}  // namespace

std::vector<ArcInfo> find_attaching_arcs(const Diagram& g) { return find_arcs(g, std::nullopt); }

std::vector<ArcInfo> find_attaching_arcs(const Diagram& g, const Word& w) {
    auto an = anatomy(w);
    if (an.diagram != g) throw Error(ErrorKind::ArcNotOnDiagram, "diagram is not the basis diagram of " + w.str());
    return find_arcs(g, an);
}

Word elementary_move(const Word& w, MoveKind kind, int i, int j) {
    return kind == MoveKind::FE ? forward_move(w, i, j) : backward_move(w, i, j);
}

GeneralisedArc generalised_arc(const Word& w, MoveKind kind, int i, int j) {
    if (i < 1 || i > w.minus_count() || j < 1 || j > w.plus_count())
        throw Error(ErrorKind::ArcNotDefined, "index out of range");
    const int pm = w.position(false, i), pp = w.position(true, j);
    if ((kind == MoveKind::FE) != (pm < pp))
        throw Error(ErrorKind::ArcNotDefined, std::string(kind == MoveKind::FE ? "FA" : "BA") + " does not exist on " + w.str());
    auto an = anatomy(w);
    const int from = kind == MoveKind::FE ? an.base_minus_region[static_cast<std::size_t>(i - 1)]
                                          : an.base_plus_region[static_cast<std::size_t>(j - 1)];
    const int to = kind == MoveKind::FE ? an.root_plus_region[static_cast<std::size_t>(j - 1)]
                                        : an.root_minus_region[static_cast<std::size_t>(i - 1)];
    Layout L(an.diagram);
    const std::size_t nreg = L.cycle.size();
    std::vector<int> via(nreg, -1), prev(nreg, -1);
    std::deque<int> todo{from};
    prev[static_cast<std::size_t>(from)] = from;
    while (!todo.empty()) {
        int r = todo.front();
        todo.pop_front();
        for (auto [c, s] : L.cycle[static_cast<std::size_t>(r)]) {
            int nb = L.across(c, r);
            if (prev[static_cast<std::size_t>(nb)] >= 0) continue;
            prev[static_cast<std::size_t>(nb)] = r;
            via[static_cast<std::size_t>(nb)] = c;
            todo.push_back(nb);
        }
    }
    GeneralisedArc ga{kind, i, j, w, {}, {}};
    for (int r = to; r != from; r = prev[static_cast<std::size_t>(r)]) {
        ga.regions.push_back(r);
        ga.chords.push_back(via[static_cast<std::size_t>(r)]);
    }
    ga.regions.push_back(from);
    std::reverse(ga.regions.begin(), ga.regions.end());
    std::reverse(ga.chords.begin(), ga.chords.end());
    if (ga.chords.size() % 2 == 0) throw Error(ErrorKind::ArcNotDefined, "even crossing count");
    return ga;
}

BypassSystem arc_to_system(const GeneralisedArc& g) { return nicely_ordered_system(g.word, {g}); }

BypassSystem nicely_ordered_system(const Word& w, const std::vector<GeneralisedArc>& arcs) {
    const Diagram base = basis_diagram(w);
    if (arcs.empty()) return {base, {}};
    const bool fwd = arcs.front().kind == MoveKind::FE;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        if (arcs[k].kind != arcs.front().kind || arcs[k].word != w)
            throw Error(ErrorKind::NotNicelyOrdered, "mixed arcs");
        if (k == 0) continue;
        const auto &p = arcs[k - 1], &c = arcs[k];
        bool ok = fwd ? (p.i < c.i && p.j <= c.j) : (c.j < p.j && c.i <= p.i);
        if (!ok) throw Error(ErrorKind::NotNicelyOrdered, "index inequalities fail");
    }
    // each arc runs between two boundary arcs; order touches on a chord by the end inside it
    const int pts = base.points();
    const auto sides = chord_sides(base);
    const double eps = 1e-3;
    struct Slot {
        std::size_t arc;
        int which;  // 0 e1, 1 x, 2 e3
        double key;
    };
    std::vector<AttachingArc> out;
    std::vector<std::vector<Slot>> slots(static_cast<std::size_t>(base.chords()));
    const std::size_t n = arcs.size();
    for (std::size_t step = 0; step < n; ++step) {
        const auto& ga = fwd ? arcs[step] : arcs[n - 1 - step];
        const double p = static_cast<double>(step) + 1.0;
        int s_arc = fwd ? pts + 1 - 2 * ga.i : 2 * ga.j - 2;
        int e_arc = fwd ? 2 * ga.j : pts - 1 - 2 * ga.i;
        s_arc = base.wrap(s_arc);
        e_arc = base.wrap(e_arc);
        // later arcs sharing an end boundary arc go southwest (forwards) or northwest (backwards)
        const double lean = fwd ? 1.0 : -1.0;
        const double su = s_arc + 0.5;
        const double eu = e_arc + 0.5 + lean * eps * p;
        auto place = [&](int idx, int which, int ci, int order) {
            const int c = ga.chords[static_cast<std::size_t>(ci)];
            auto [a, b] = base.chord(c);
            double u = (su > a && su < b) ? su : eu;
            // crossing into the inner side
            bool into_inner = ga.regions[static_cast<std::size_t>(ci + 1)] == sides[static_cast<std::size_t>(c)].inner;
            double k = u - eps * eps * order * lean * (into_inner ? 1 : -1);
            slots[static_cast<std::size_t>(c)].push_back({static_cast<std::size_t>(idx), which, k});
        };
        const int m = static_cast<int>(ga.chords.size()) / 2;
        for (int k = 0; k < m; ++k) {
            auto ch = [&](int s) { return ga.chords[static_cast<std::size_t>(s)]; };
            int idx = static_cast<int>(out.size());
            out.push_back({{ch(2 * k), 0.5}, {ch(2 * k + 1), 0.5}, {ch(2 * k + 2), 0.5}, ga.regions[static_cast<std::size_t>(2 * k + 1)]});
            place(idx, 0, 2 * k, 1);
            place(idx, 1, 2 * k + 1, 0);
            place(idx, 2, 2 * k + 2, -1);
        }
    }
    for (int c = 0; c < base.chords(); ++c) {
        auto& sl = slots[static_cast<std::size_t>(c)];
        std::sort(sl.begin(), sl.end(), [](const Slot& x, const Slot& y) { return x.key < y.key; });
        const double cnt = static_cast<double>(sl.size()) + 1.0;
        for (std::size_t k = 0; k < sl.size(); ++k) {
            double t = static_cast<double>(k + 1) / cnt;
            auto& arc = out[sl[k].arc];
            (sl[k].which == 0 ? arc.e1 : sl[k].which == 1 ? arc.x : arc.e3).t = t;
        }
    }
    BypassSystem sys{base, out};
    if (!realizable(sys)) throw Error(ErrorKind::NotNicelyOrdered, "placement of the arcs on " + w.str() + " crosses");
    return sys;
}

namespace {

int pluses_before(const Word& w, int pos) {
    int c = 0;
    for (int p = 0; p < pos; ++p) c += w.plus(p);
    return c;
}

void check_pair(const Word& lo, const Word& hi) {
    if (!partial_leq(lo, hi)) throw Error(ErrorKind::NotComparable, lo.str() + " !<= " + hi.str());
}

}  // namespace

BypassSystem cfbs(const Word& lo, const Word& hi) {
    check_pair(lo, hi);
    std::vector<GeneralisedArc> arcs;
    for (int i = 1; i <= lo.minus_count(); ++i) {
        int a = pluses_before(lo, lo.position(false, i)), b = pluses_before(hi, hi.position(false, i));
        if (a < b) arcs.push_back(generalised_arc(lo, MoveKind::FE, i, b));
    }
    return nicely_ordered_system(lo, arcs);
}

BypassSystem cbbs(const Word& lo, const Word& hi) {
    check_pair(lo, hi);
    std::vector<GeneralisedArc> arcs;
    for (int j = hi.plus_count(); j >= 1; --j) {
        int pl = lo.position(true, j), ph = hi.position(true, j);
        int d = pl - pluses_before(lo, pl), g = ph - pluses_before(hi, ph);
        if (g < d) arcs.push_back(generalised_arc(hi, MoveKind::BE, d, j));
    }
    return nicely_ordered_system(hi, arcs);
}

namespace {

BypassSystem prune(BypassSystem sys, Dir dir, const Diagram& target) {
    for (std::size_t k = sys.arcs.size(); k-- > 0;) {
        BypassSystem trial = sys;
        trial.arcs.erase(trial.arcs.begin() + static_cast<std::ptrdiff_t>(k));
        auto r = surgery(trial, dir);
        if (!is_zero(r) && diagram_of(r) == target) sys = std::move(trial);
    }
    return sys;
}

}  // namespace

BypassSystem fbs(const Word& lo, const Word& hi) { return prune(cfbs(lo, hi), Dir::Up, basis_diagram(hi)); }

BypassSystem bbs(const Word& lo, const Word& hi) { return prune(cbbs(lo, hi), Dir::Down, basis_diagram(lo)); }

BypassSystem subsystem(const BypassSystem& sys, std::uint64_t mask) {
    BypassSystem out{sys.base, {}};
    for (std::size_t k = 0; k < sys.arcs.size(); ++k)
        if ((mask >> k) & 1u) out.arcs.push_back(sys.arcs[k]);
    return out;
}

std::map<Diagram, int> expand_subsets(const BypassSystem& sys, Dir dir) {
    require(sys);
    std::map<Diagram, int> parity;
    const std::uint64_t total = std::uint64_t{1} << sys.arcs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        auto r = surgery(subsystem(sys, mask), opposite(dir));
        if (!is_zero(r)) parity[diagram_of(r)] ^= 1;
    }
    std::erase_if(parity, [](const auto& kv) { return kv.second == 0; });
    return parity;
}

bool has_pinwheel(const BypassSystem& sys, Dir dir) {
    require(sys);
    if (sys.arcs.empty()) return false;
    Layout L(sys.base);
    auto segs = *segments(L, sys.arcs);
    const bool want_end = (dir == Dir::Up) == kUpPinwheelAtEnd;
    for (std::size_t region = 0; region < L.cycle.size(); ++region) {
        // events round the boundary: segment ends, and a marker where the disc boundary shows
        struct Ev {
            double pos;
            int seg;   // -1 for a boundary arc
            bool crossing;
        };
        std::vector<Ev> ev;
        for (std::size_t i = 0; i < L.cycle[region].size(); ++i) ev.push_back({static_cast<double>(i) + 0.9999, -1, false});
        for (std::size_t s = 0; s < segs.size(); ++s) {
            if (segs[s].region != static_cast<int>(region)) continue;
            ev.push_back({segs[s].from, static_cast<int>(s), false});
            ev.push_back({segs[s].to, static_cast<int>(s), true});
        }
        std::sort(ev.begin(), ev.end(), [](const Ev& a, const Ev& b) { return a.pos < b.pos; });
        const std::size_t m = ev.size();
        const std::size_t ncyc = L.cycle[region].size();
        auto partner = [&](std::size_t e) {
            for (std::size_t f = 0; f < m; ++f)
                if (f != e && ev[f].seg == ev[e].seg) return f;
            return e;
        };
        std::vector<bool> used(m, false);  // piece e -> e+1
        for (std::size_t start = 0; start < m; ++start) {
            if (used[start]) continue;
            bool boundary = false, at_end = true, at_start = true;
            std::vector<std::pair<double, double>> pieces;
            std::vector<int> side_segs;
            std::size_t piece = start;
            while (!used[piece]) {
                used[piece] = true;
                std::size_t e = (piece + 1) % m;
                double hi = ev[e].pos + (e == 0 ? static_cast<double>(ncyc) : 0.0);
                pieces.emplace_back(ev[piece].pos, hi);
                if (ev[e].seg < 0) {
                    boundary = true;
                    piece = e;
                    continue;
                }
                std::size_t f = partner(e);
                side_segs.push_back(ev[e].seg);
                // traversing the segment from e to f
                if (ev[f].crossing) at_start = false;
                else at_end = false;
                piece = f;
            }
            if (boundary || side_segs.empty() || !(want_end ? at_end : at_start)) continue;
            // the far half of each arc must stay off the face
            auto on_face = [&](double q) {
                for (auto [a, b] : pieces)
                    if ((q > a && q < b) || (q + static_cast<double>(ncyc) > a && q + static_cast<double>(ncyc) < b)) return true;
                return false;
            };
            bool clean = true;
            for (int s : side_segs) {
                const auto& c = sys.arcs[static_cast<std::size_t>(s / 2)];
                auto q = L.position(static_cast<int>(region), s % 2 == 0 ? c.e3 : c.e1);
                if (q && on_face(*q)) clean = false;
            }
            if (clean) return true;
        }
    }
    return false;
}

}  // namespace sutura

namespace sutura {

Diagram from_pair(const Word& lo, const Word& hi) {
    auto r = surgery(fbs(lo, hi), Dir::Down);
    if (is_zero(r)) throw Error(ErrorKind::ZeroElement, "down surgery vanished for " + lo.str() + ", " + hi.str());
    return diagram_of(r);
}

}  // namespace sutura
