#include "sutura/sfh.hpp"

#include "sutura/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace sutura {

namespace {

struct Built {
    std::vector<int> mates;
    std::vector<int> step_at;  // per point: which step drew its chord
};

Built build(const Word& w) {
    const int n = w.size();
    const int pts = 2 * (n + 1);
    Built b{std::vector<int>(static_cast<std::size_t>(pts), -1), std::vector<int>(static_cast<std::size_t>(pts), n)};
    auto md = [pts](int p) { return ((p % pts) + pts) % pts; };
    auto join = [&](int p, int q, int step) {
        p = md(p), q = md(q);
        b.mates[static_cast<std::size_t>(p)] = q;
        b.mates[static_cast<std::size_t>(q)] = p;
        b.step_at[static_cast<std::size_t>(p)] = step;
        b.step_at[static_cast<std::size_t>(q)] = step;
    };
    int i = 0, j = 0;
    for (int s = 0; s < n; ++s) {
        bool leading = s == 0 || w.plus(s - 1) != w.plus(s);
        if (w.minus(s)) {
            ++i;
            if (leading) join(1 - 2 * i, 2 * j, s);
            else join(1 - 2 * i, 2 - 2 * i, s);
        } else {
            ++j;
            if (leading) join(-2 * i, 2 * j - 1, s);
            else join(2 * j - 2, 2 * j - 1, s);
        }
    }
    std::vector<int> rest;
    for (int p = 0; p < pts; ++p)
        if (b.mates[static_cast<std::size_t>(p)] < 0) rest.push_back(p);
    join(rest.at(0), rest.at(1), n);
    return b;
}

}  // namespace

Diagram basis_diagram(const Word& w) { return Diagram::from_mates(build(w).mates); }

Diagram basis_diagram_from_root(const Word& w) {
    auto b = build(w.reversed());
    const int pts = static_cast<int>(b.mates.size());
    const int r = 2 * w.plus_count() + 1;
    auto flip = [&](int p) { return (((r - p) % pts) + pts) % pts; };
    std::vector<int> m(b.mates.size());
    for (int p = 0; p < pts; ++p) m[static_cast<std::size_t>(flip(p))] = flip(b.mates[static_cast<std::size_t>(p)]);
    return Diagram::from_mates(std::move(m));
}

BasisAnatomy anatomy(const Word& w) {
    auto b = build(w);
    BasisAnatomy a;
    a.diagram = Diagram::from_mates(b.mates);
    const int pts = a.diagram.points();
    a.root = 2 * w.plus_count() + 1;
    a.created.assign(static_cast<std::size_t>(a.diagram.chords()), 0);
    for (int p = 0; p < pts; ++p)
        a.created[static_cast<std::size_t>(a.diagram.chord_of(p))] = b.step_at[static_cast<std::size_t>(p)];
    a.region_of_arc = region_of_arcs(a.diagram);
    auto at = [&](int arc) { return a.region_of_arc[static_cast<std::size_t>(a.diagram.wrap(arc))]; };
    for (int i = 1; i <= w.minus_count(); ++i) {
        a.base_minus_region.push_back(at(pts + 1 - 2 * i));
        a.root_minus_region.push_back(at(pts - 1 - 2 * i));
    }
    for (int j = 1; j <= w.plus_count(); ++j) {
        a.base_plus_region.push_back(at(2 * j - 2));
        a.root_plus_region.push_back(at(2 * j));
    }
    return a;
}

std::pair<Diagram, Diagram> boundary_bypass(const Diagram& g, int y) {
    y = g.wrap(y);
    const int x = g.wrap(y - 1), z = g.wrap(y + 1);
    const int X = g.mate(x), Y = g.mate(y), Z = g.mate(z);
    if (Y == x || Y == z) throw Error(ErrorKind::TrivialArc, "chord at the boundary is already outermost");
    auto with = [&](std::initializer_list<std::pair<int, int>> fresh) {
        std::vector<int> m = g.mates();
        for (auto [p, q] : fresh) {
            m[static_cast<std::size_t>(p)] = q;
            m[static_cast<std::size_t>(q)] = p;
        }
        return Diagram::from_mates(std::move(m));
    };
    return {with({{x, y}, {z, X}, {Z, Y}}), with({{y, z}, {x, Z}, {Y, X}})};
}

Diagram remove_outermost(const Diagram& g, int p) {
    p = g.wrap(p);
    if (g.mate(p) != g.wrap(p + 1)) throw Error(ErrorKind::NoCommonOutermost, "no chord on that boundary pair");
    auto keep = survivor_map(g.points(), p);
    std::vector<int> m(static_cast<std::size_t>(g.points() - 2));
    for (int x = 0; x < g.points(); ++x) {
        int k = keep[static_cast<std::size_t>(x)];
        if (k >= 0) m[static_cast<std::size_t>(k)] = keep[static_cast<std::size_t>(g.mate(x))];
    }
    return Diagram::from_mates(std::move(m));
}

namespace {

struct Memo {
    std::shared_mutex mu;
    std::unordered_map<Diagram, Element> map;

    std::optional<Element> find(const Diagram& g) {
        std::shared_lock lock(mu);
        if (auto it = map.find(g); it != map.end()) return it->second;
        return std::nullopt;
    }
    void put(const Diagram& g, const Element& x) {
        std::unique_lock lock(mu);
        map.emplace(g, x);
    }
};

Memo& base_memo() {
    static Memo m;
    return m;
}

Memo& root_memo() {
    static Memo m;
    return m;
}

Element dec_base(const Diagram& g) {
    if (g.chords() == 1) return Element{Word{}};
    if (auto hit = base_memo().find(g)) return *hit;
    Element out;
    const int last = g.points() - 1;
    if (g.mate(0) == 1) {
        out = dec_base(remove_outermost(g, 0)).prefixed(true);
    } else if (g.mate(0) == last) {
        out = dec_base(remove_outermost(g, last)).prefixed(false);
    } else {
        auto [minus_side, plus_side] = boundary_bypass(g, 0);
        out = dec_base(remove_outermost(minus_side, last)).prefixed(false);
        out += dec_base(remove_outermost(plus_side, 0)).prefixed(true);
    }
    base_memo().put(g, out);
    return out;
}

Element dec_root(const Diagram& g) {
    if (g.chords() == 1) return Element{Word{}};
    if (auto hit = root_memo().find(g)) return *hit;
    const int e = euler_class(g);
    const int r = g.chords() + e;  // 2 n_plus + 1
    Element out;
    if (g.mate(r) == g.wrap(r - 1)) {
        out = dec_root(remove_outermost(g, r - 1)).suffixed(true);
    } else if (g.mate(r) == g.wrap(r + 1)) {
        out = dec_root(remove_outermost(g, r)).suffixed(false);
    } else {
        auto [ends_plus, ends_minus] = boundary_bypass(g, r);
        out = dec_root(remove_outermost(ends_plus, r - 1)).suffixed(true);
        out += dec_root(remove_outermost(ends_minus, r)).suffixed(false);
    }
    root_memo().put(g, out);
    return out;
}

}  // namespace

Element decompose(const DiagramOrZero& g) {
    if (is_zero(g)) return {};
    return dec_base(diagram_of(g));
}

Element decompose_from_root(const DiagramOrZero& g) {
    if (is_zero(g)) return {};
    return dec_root(diagram_of(g));
}

bool is_basis(const Diagram& g) { return decompose(g).size() == 1; }

std::vector<std::pair<Diagram, Element>> decompose_cache_snapshot() {
    auto& m = base_memo();
    std::shared_lock lock(m.mu);
    std::vector<std::pair<Diagram, Element>> out(m.map.begin(), m.map.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

void decompose_cache_seed(const Diagram& g, const Element& x) { base_memo().put(g, x); }

std::string GradedOperator::name() const {
    switch (kind) {
        case OpKind::BPlus: return "B+";
        case OpKind::BMinus: return "B-";
        case OpKind::APlus: return "A+";
        case OpKind::AMinus: return "A-";
        case OpKind::BMinusWest: return "B-west" + std::to_string(index);
        case OpKind::APlusWest: return "A+west" + std::to_string(index);
        case OpKind::BPlusEast: return "B+east" + std::to_string(index);
        case OpKind::AMinusEast: return "A-east" + std::to_string(index);
    }
    return "?";
}

std::pair<int, int> GradedOperator::shift() const {
    switch (kind) {
        case OpKind::BPlus:
        case OpKind::BPlusEast: return {0, 1};
        case OpKind::BMinus:
        case OpKind::BMinusWest: return {1, 0};
        case OpKind::APlus:
        case OpKind::APlusWest: return {-1, 0};
        case OpKind::AMinus:
        case OpKind::AMinusEast: return {0, -1};
    }
    return {0, 0};
}

namespace {

void check_index(const GradedOperator& op, int n_minus, int n_plus) {
    bool west = op.kind == OpKind::BMinusWest || op.kind == OpKind::APlusWest;
    bool east = op.kind == OpKind::BPlusEast || op.kind == OpKind::AMinusEast;
    int hi = west ? n_minus : n_plus;
    if ((west || east) && (op.index < 0 || op.index > hi))
        throw Error(ErrorKind::IndexOutOfRange, op.name() + " needs index in 0.." + std::to_string(hi));
}

std::optional<Word> apply_word(const GradedOperator& op, const Word& w) {
    check_index(op, w.minus_count(), w.plus_count());
    switch (op.kind) {
        case OpKind::BPlus: return w.prepend(true);
        case OpKind::BMinus: return w.prepend(false);
        case OpKind::APlus:
            if (!w.empty() && w.minus(0)) return w.erase(0);
            return std::nullopt;
        case OpKind::AMinus:
            if (!w.empty() && w.plus(0)) return w.erase(0);
            return std::nullopt;
        case OpKind::BMinusWest:
        case OpKind::BPlusEast: {
            bool sign = op.kind == OpKind::BPlusEast;
            int at = w.position(sign, op.index + 1);
            return w.insert(at < 0 ? w.size() : at, sign);
        }
        case OpKind::APlusWest:
        case OpKind::AMinusEast: {
            bool sign = op.kind == OpKind::AMinusEast;
            int count = sign ? w.plus_count() : w.minus_count();
            if (op.index < count) return w.erase(w.position(sign, op.index + 1));
            if (!w.empty() && w.plus(w.size() - 1) == sign) return w.erase(w.size() - 1);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace

Element apply_operator(const GradedOperator& op, const Element& x) {
    Element out;
    for (const auto& w : x)
        if (auto v = apply_word(op, w)) out.toggle(*v);
    return out;
}

DiagramOrZero apply_operator(const GradedOperator& op, const Diagram& g) {
    const int n = g.chords() - 1;
    const int e = euler_class(g);
    check_index(op, (n - e) / 2, (n + e) / 2);
    const int i = op.index;
    switch (op.kind) {
        case OpKind::BPlus: return create_at(g, 0);
        case OpKind::BMinus: return create_at(g, -1);
        case OpKind::APlus: return annihilate_at(g, 0);
        case OpKind::AMinus: return annihilate_at(g, -1);
        case OpKind::BMinusWest: return create_at(g, -2 * i - 3);
        case OpKind::APlusWest: return annihilate_at(g, -2 * i - 2);
        case OpKind::BPlusEast: return create_at(g, 2 * i + 2);
        case OpKind::AMinusEast: return annihilate_at(g, 2 * i + 1);
    }
    return Zero{};
}

std::pair<Word, Word> phi(const DiagramOrZero& g) {
    auto x = decompose(g);
    if (x.empty()) throw Error(ErrorKind::ZeroElement, "the zero diagram has no extremal words");
    return {x.front(), x.back()};
}

Element merge_elements(const std::optional<Element>& x1, const std::optional<Element>& x2) {
    auto terms = [](const std::optional<Element>& x) {
        std::vector<std::optional<Diagram>> out;
        if (!x) out.emplace_back(std::nullopt);
        else
            for (const auto& w : *x) out.emplace_back(basis_diagram(w));
        return out;
    };
    Element out;
    for (const auto& a : terms(x1))
        for (const auto& b : terms(x2)) out += decompose(merge(a, b));
    return out;
}

namespace {

Element rotate_geometric(const Word& w) { return decompose(rotate_points(basis_diagram(w), kRotationStep)); }

Element rotate_explicit(const Word& w) {
    // blocks (-)^a (+)^b
    std::vector<std::pair<int, int>> blocks;
    for (int p = 0; p < w.size();) {
        int a = 0, b = 0;
        while (p < w.size() && w.minus(p)) ++a, ++p;
        while (p < w.size() && w.plus(p)) ++b, ++p;
        blocks.emplace_back(a, b);
    }
    if (blocks.empty()) return Element{w};
    const int k = static_cast<int>(blocks.size());
    Element out;
    // a composition is a subset of the k-1 gaps
    for (std::uint64_t cut = 0; cut < (std::uint64_t{1} << (k - 1)); ++cut) {
        std::vector<std::pair<int, int>> g;  // (A, B) per group
        g.emplace_back(0, 0);
        for (int m = 0; m < k; ++m) {
            if (m > 0 && ((cut >> (m - 1)) & 1u)) g.emplace_back(0, 0);
            g.back().first += blocks[static_cast<std::size_t>(m)].first;
            g.back().second += blocks[static_cast<std::size_t>(m)].second;
        }
        const std::size_t T = g.size();
        Word t;
        auto put = [&](int plus, int minus) {
            t = t.concat(Word::repeat(true, plus)).concat(Word::repeat(false, minus));
        };
        if (T == 1) {
            put(g[0].second, g[0].first);
        } else {
            if (g[0].second < 1 || g[T - 1].first < 1) continue;
            put(g[0].second - 1, g[0].first + 1);
            for (std::size_t m = 1; m + 1 < T; ++m) put(g[m].second, g[m].first);
            put(g[T - 1].second + 1, g[T - 1].first - 1);
        }
        out.toggle(t);
    }
    return out;
}

std::size_t index_in(const std::vector<Word>& ws, const Word& w) {
    return static_cast<std::size_t>(std::lower_bound(ws.begin(), ws.end(), w) - ws.begin());
}

BitMatrix minors(int n, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, BitMatrix> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find({n, k}); it != memo.end()) return it->second;
    }
    auto ws = all_words(n - k, k);
    const std::size_t dim = ws.size();
    BitMatrix r(dim, std::vector<std::uint8_t>(dim, 0));
    if (k == 0 || k == n) {
        for (std::size_t c = 0; c < dim; ++c) r[c][c] = 1;
    } else {
        for (std::size_t c = 0; c < dim; ++c) {
            const Word& w = ws[c];
            int j = 0;
            while (w.minus(j)) ++j;
            Word u;
            for (int p = j + 1; p < w.size(); ++p) u = u.append(w.plus(p));
            // rows +x
            auto sub = all_words(n - k, k - 1);
            auto m1 = minors(n - 1, k - 1);
            auto col = index_in(sub, Word::repeat(false, j).concat(u));
            for (std::size_t x = 0; x < sub.size(); ++x)
                if (m1[x][col]) r[index_in(ws, sub[x].prepend(true))][c] = 1;
            if (!u.empty() && u.minus(0)) {
                Word tail = u.erase(0);
                auto sub2 = all_words(tail.minus_count(), tail.plus_count());
                auto m2 = minors(n - j - 2, k - 1);
                auto col2 = index_in(sub2, tail);
                Word head = Word::repeat(false, j + 1).append(true);
                for (std::size_t x = 0; x < sub2.size(); ++x)
                    if (m2[x][col2]) r[index_in(ws, head.concat(sub2[x]))][c] = 1;
            }
        }
    }
    std::lock_guard lock(mu);
    memo.emplace(std::pair{n, k}, r);
    return r;
}

Element rotate_minors(const Word& w) {
    auto ws = all_words(w.minus_count(), w.plus_count());
    auto m = minors(w.size(), w.plus_count());
    auto c = index_in(ws, w);
    Element out;
    for (std::size_t x = 0; x < ws.size(); ++x)
        if (m[x][c]) out.toggle(ws[x]);
    return out;
}

}  // namespace

Element rotation(const Element& x, RotationImpl impl) {
    Element out;
    for (const auto& w : x) {
        switch (impl) {
            case RotationImpl::Geometric: out += rotate_geometric(w); break;
            case RotationImpl::Minors: out += rotate_minors(w); break;
            case RotationImpl::Explicit: out += rotate_explicit(w); break;
        }
    }
    return out;
}

BitMatrix rotation_matrix(int n, int k, RotationImpl impl) {
    if (k < 0 || k > n) throw Error(ErrorKind::IndexOutOfRange, "need 0 <= k <= n");
    if (impl == RotationImpl::Minors) return minors(n, k);
    auto ws = all_words(n - k, k);
    BitMatrix r(ws.size(), std::vector<std::uint8_t>(ws.size(), 0));
    for (std::size_t c = 0; c < ws.size(); ++c)
        for (const auto& v : rotation(Element{ws[c]}, impl)) r[index_in(ws, v)][c] = 1;
    return r;
}

}  // namespace sutura
