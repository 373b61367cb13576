#include "sutura/stack.hpp"

#include "sutura/error.hpp"
#include "sutura/sfh.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace sutura {

namespace {

// the chords counted for a bypass cobordism follow the inner chord in boundary order
constexpr bool kCountAfterInner = true;

void same_size(const Diagram& g0, const Diagram& g1) {
    if (g0.chords() != g1.chords())
        throw Error(ErrorKind::SizeMismatch, std::to_string(g0.chords()) + " vs " + std::to_string(g1.chords()) + " chords");
}

}  // namespace

int SutureGraph::loops() const {
    const int nodes = 4 * chords;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
    for (auto [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<bool> seen(static_cast<std::size_t>(nodes), false);
    int count = 0;
    for (int s = 0; s < nodes; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++count;
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    stack.push_back(u);
                }
        }
    }
    return count;
}

SutureGraph suture_graph(const Diagram& g0, const Diagram& g1, int shift) {
    same_size(g0, g1);
    const int pts = g0.points();
    SutureGraph sg;
    sg.chords = g0.chords();
    for (int c = 0; c < g0.chords(); ++c) sg.edges.push_back(g0.chord(c));
    for (int c = 0; c < g1.chords(); ++c) {
        auto [a, b] = g1.chord(c);
        sg.edges.emplace_back(pts + a, pts + b);
    }
    for (int k = 0; k < pts; ++k) sg.edges.emplace_back(k, pts + g0.wrap(k + shift));
    return sg;
}

int m_geometric(const Diagram& g0, const Diagram& g1) { return suture_graph(g0, g1).loops() == 1 ? 1 : 0; }

int m_algebraic(const Diagram& g0, const Diagram& g1) {
    same_size(g0, g1);
    if (euler_class(g0) != euler_class(g1)) return 0;
    auto x0 = decompose(g0), x1 = decompose(g1);
    int count = 0;
    for (const auto& a : x0)
        for (const auto& b : x1) count += partial_leq(a, b);
    return count % 2;
}

std::pair<Diagram, Diagram> cancel_outermost(const Diagram& g0, const Diagram& g1) {
    same_size(g0, g1);
    // chords at the base point first
    const int pts = g0.points();
    if (g0.chords() > 1)
        for (int k = -1; k < pts - 1; ++k) {
            const int p = g0.wrap(k), q = g0.wrap(k + 1);
            if (g0.mate(p) == q && g1.mate(p) == q) return {remove_outermost(g0, p), remove_outermost(g1, p)};
        }
    throw Error(ErrorKind::NoCommonOutermost, g0.str() + " and " + g1.str());
}

bool arc_is_inner(const Diagram& g0, const Diagram& g1, const AttachingArc& c) {
    if (m(g0, g1) != 1) throw Error(ErrorKind::NotTight, g0.str() + " does not stack under " + g1.str());
    if (classify(c) != ArcClass::Nontrivial) throw Error(ErrorKind::TrivialArc, "arc meets fewer than three chords");
    return m(diagram_of(surgery(g0, c, Dir::Up)), g1) == 1;
}

namespace {

struct InMemo {
    std::mutex mu;
    std::map<std::pair<Diagram, Diagram>, std::vector<Diagram>> table;
};

InMemo& in_memo() {
    static InMemo memo;
    return memo;
}

}  // namespace

const std::vector<Diagram>& diagrams_in(const Diagram& g0, const Diagram& g1) {
    if (m(g0, g1) != 1) throw Error(ErrorKind::NotTight, g0.str() + " does not stack under " + g1.str());
    auto& memo = in_memo();
    {
        std::lock_guard lock(memo.mu);
        if (auto it = memo.table.find({g0, g1}); it != memo.table.end()) return it->second;
    }
    std::set<Diagram> seen{g0};
    std::deque<Diagram> todo{g0};
    while (!todo.empty()) {
        Diagram d = todo.front();
        todo.pop_front();
        for (const auto& info : find_attaching_arcs(d)) {
            if (info.cls != ArcClass::Nontrivial) continue;
            const Diagram up = diagram_of(surgery(d, info.arc, Dir::Up));
            if (seen.count(up) || m(up, g1) != 1) continue;
            seen.insert(up);
            todo.push_back(up);
        }
    }
    std::lock_guard lock(memo.mu);
    return memo.table.emplace(std::pair(g0, g1), std::vector<Diagram>(seen.begin(), seen.end())).first->second;
}

bool diagram_exists_in(const Diagram& g, const Diagram& g0, const Diagram& g1) {
    const auto& in = diagrams_in(g0, g1);
    return std::binary_search(in.begin(), in.end(), g);
}

bool BoundedCategory::has(int a, int b) const {
    return std::binary_search(morphisms.begin(), morphisms.end(), std::pair(a, b));
}

std::vector<std::pair<int, int>> BoundedCategory::hasse() const {
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(objects.size());
    for (auto [a, b] : morphisms) {
        if (a == b) continue;
        bool cover = true;
        for (int c = 0; c < n && cover; ++c)
            if (c != a && c != b && has(a, c) && has(c, b)) cover = false;
        if (cover) out.emplace_back(a, b);
    }
    return out;
}

namespace {

void close_flags(BoundedCategory& cat) {
    std::sort(cat.morphisms.begin(), cat.morphisms.end());
    const int n = static_cast<int>(cat.objects.size());
    cat.reflexive = cat.transitive = cat.antisymmetric = true;
    for (int a = 0; a < n; ++a) {
        cat.reflexive = cat.reflexive && cat.has(a, a);
        for (int b = 0; b < n; ++b) {
            if (a != b && cat.has(a, b) && cat.has(b, a)) cat.antisymmetric = false;
            for (int c = 0; c < n; ++c)
                if (cat.has(a, b) && cat.has(b, c) && !cat.has(a, c)) cat.transitive = false;
        }
    }
}

}  // namespace

BoundedCategory bounded_category(const Diagram& g0, const Diagram& g1) {
    BoundedCategory cat{g0, g1, diagrams_in(g0, g1), {}};
    const int n = static_cast<int>(cat.objects.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto &x = cat.objects[static_cast<std::size_t>(a)], &y = cat.objects[static_cast<std::size_t>(b)];
            if (a == b || (m(g0, y) == 1 && diagram_exists_in(y, x, g1) && diagram_exists_in(x, g0, y)))
                cat.morphisms.emplace_back(a, b);
        }
    close_flags(cat);
    return cat;
}

BoundedCategory word_category(const Word& lo, const Word& hi) {
    auto members = interval(lo, hi).members;
    BoundedCategory cat{basis_diagram(lo), basis_diagram(hi), {}, {}};
    std::vector<std::pair<Diagram, Word>> by;
    for (const auto& w : members) by.emplace_back(basis_diagram(w), w);
    std::sort(by.begin(), by.end());
    for (const auto& [d, w] : by) cat.objects.push_back(d);
    const int n = static_cast<int>(by.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (partial_leq(by[static_cast<std::size_t>(a)].second, by[static_cast<std::size_t>(b)].second))
                cat.morphisms.emplace_back(a, b);
    close_flags(cat);
    return cat;
}

bool poset_isomorphic(const BoundedCategory& A, const BoundedCategory& B) {
    const int n = static_cast<int>(A.objects.size());
    if (n != static_cast<int>(B.objects.size()) || A.morphisms.size() != B.morphisms.size()) return false;
    auto signature = [n](const BoundedCategory& c, int v) {
        int below = 0, above = 0;
        for (int u = 0; u < n; ++u) {
            below += c.has(u, v);
            above += c.has(v, u);
        }
        return std::pair(below, above);
    };
    std::vector<std::pair<int, int>> sa(static_cast<std::size_t>(n)), sb(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        sa[static_cast<std::size_t>(v)] = signature(A, v);
        sb[static_cast<std::size_t>(v)] = signature(B, v);
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return sa[static_cast<std::size_t>(x)] < sa[static_cast<std::size_t>(y)]; });
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto extend = [&](auto&& self, int k) -> bool {
        if (k == n) return true;
        const int v = order[static_cast<std::size_t>(k)];
        for (int u = 0; u < n; ++u) {
            if (used[static_cast<std::size_t>(u)] || sb[static_cast<std::size_t>(u)] != sa[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                const int p = order[static_cast<std::size_t>(j)], q = image[static_cast<std::size_t>(p)];
                ok = A.has(p, v) == B.has(q, u) && A.has(v, p) == B.has(u, q);
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = u;
            used[static_cast<std::size_t>(u)] = true;
            if (self(self, k + 1)) return true;
            used[static_cast<std::size_t>(u)] = false;
        }
        return false;
    };
    return extend(extend, 0);
}

namespace {

// chords round the boundary of a region, in the order the region is walked
std::vector<int> chord_cycle(const Diagram& g, int region) {
    const auto rid = region_of_arcs(g);
    int start = -1;
    for (int k = 0; k < g.points() && start < 0; ++k)
        if (rid[static_cast<std::size_t>(k)] == region) start = k;
    std::vector<int> out;
    int arc = start;
    do {
        const int s = g.wrap(arc + 1);
        out.push_back(g.chord_of(s));
        arc = g.mate(s);
    } while (arc != start);
    return out;
}

int between(const std::vector<int>& cyc, int inner, int outer) {
    const auto n = static_cast<std::ptrdiff_t>(cyc.size());
    const auto i = std::find(cyc.begin(), cyc.end(), inner) - cyc.begin();
    const auto o = std::find(cyc.begin(), cyc.end(), outer) - cyc.begin();
    auto d = kCountAfterInner ? (o - i + n) % n : (i - o + n) % n;
    return static_cast<int>(d) - 1;
}

}  // namespace

BypassCobordism bypass_cobordism_category(const Diagram& g0, const AttachingArc& c) {
    if (classify(c) != ArcClass::Nontrivial) throw Error(ErrorKind::TrivialArc, "arc meets fewer than three chords");
    const auto sides = chord_sides(g0);
    auto across = [&](int chord, int region) {
        const auto& s = sides[static_cast<std::size_t>(chord)];
        return s.inner == region ? s.outer : s.inner;
    };
    const int r1 = c.r1, r2 = across(c.x.chord, r1);
    const auto rs = regions(g0);
    BypassCobordism out;
    for (auto [r, outer] : {std::pair(r1, c.e1.chord), std::pair(r2, c.e3.chord)}) {
        int k = between(chord_cycle(g0, r), c.x.chord, outer) + 1;
        if (rs[static_cast<std::size_t>(r)].sign > 0) out.n_minus = k;
        else out.n_plus = k;
    }
    out.category = bounded_category(g0, diagram_of(surgery(g0, c, Dir::Up)));
    return out;
}

}  // namespace sutura
