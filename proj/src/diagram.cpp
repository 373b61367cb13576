#include "sutura/diagram.hpp"

#include "sutura/error.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

namespace sutura {

std::string_view kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::CrossingChords: return "CrossingChords";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::OddStep: return "OddStep";
    case ErrorKind::BothNull: return "BothNull";
    case ErrorKind::GradingMismatch: return "GradingMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::ArcNotOnDiagram: return "ArcNotOnDiagram";
    case ErrorKind::TrivialArc: return "TrivialArc";
    case ErrorKind::MoveUndefined: return "MoveUndefined";
    case ErrorKind::ArcNotDefined: return "ArcNotDefined";
    case ErrorKind::NotNicelyOrdered: return "NotNicelyOrdered";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NoCommonOutermost: return "NoCommonOutermost";
    case ErrorKind::NotTight: return "NotTight";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::CapExceeded: return "CapExceeded";
    }
    return "Unknown";
}

Diagram::Diagram() : mate_{1, 0} { index_chords(); }

Diagram::Diagram(std::vector<int> mates, bool) : mate_(std::move(mates)) { index_chords(); }

void Diagram::index_chords() {
    cid_.assign(mate_.size(), -1);
    int next = 0;
    for (std::size_t p = 0; p < mate_.size(); ++p) {
        auto q = static_cast<std::size_t>(mate_[p]);
        if (q > p) {
            cid_[p] = next;
            cid_[q] = next;
            ++next;
        }
    }
}

Diagram Diagram::from_mates(std::vector<int> mates) {
    const int n = static_cast<int>(mates.size());
    if (n == 0 || n % 2 != 0) throw Error(ErrorKind::BadPartition, "need a positive even number of points");
    for (int p = 0; p < n; ++p) {
        int q = mates[static_cast<std::size_t>(p)];
        if (q < 0 || q >= n || q == p || mates[static_cast<std::size_t>(q)] != p)
            throw Error(ErrorKind::BadPartition, "pairing is not a fixed-point-free involution");
    }
    // stack check: walking clockwise, every chord must close the most recent open one
    std::vector<int> open;
    for (int p = 0; p < n; ++p) {
        int q = mates[static_cast<std::size_t>(p)];
        if (q > p) {
            open.push_back(p);
        } else {
            if (open.empty() || open.back() != q)
                throw Error(ErrorKind::CrossingChords, "chords cross");
            open.pop_back();
        }
    }
    for (int p = 0; p < n; ++p)
        if ((p + mates[static_cast<std::size_t>(p)]) % 2 == 0)
            throw Error(ErrorKind::CrossingChords, "chord joins points of equal parity");
    return Diagram(std::move(mates), true);
}

Diagram Diagram::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    const int n = 2 * static_cast<int>(pairs.size());
    std::vector<int> m(static_cast<std::size_t>(n), -1);
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw Error(ErrorKind::BadPartition, "label out of range");
        if (m[static_cast<std::size_t>(a)] != -1 || m[static_cast<std::size_t>(b)] != -1)
            throw Error(ErrorKind::BadPartition, "label used twice");
        m[static_cast<std::size_t>(a)] = b;
        m[static_cast<std::size_t>(b)] = a;
    }
    return from_mates(std::move(m));
}

Diagram Diagram::parse(std::string_view text) {
    std::vector<std::pair<int, int>> pairs;
    auto read_int = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw Error(ErrorKind::ParseError, "bad integer '" + std::string(s) + "'");
        return v;
    };
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        auto dash = item.find('-');
        if (dash == std::string_view::npos)
            throw Error(ErrorKind::ParseError, "expected a-b, got '" + std::string(item) + "'");
        pairs.emplace_back(read_int(item.substr(0, dash)), read_int(item.substr(dash + 1)));
        pos = comma + 1;
    }
    return from_pairs(pairs);
}

std::vector<std::pair<int, int>> Diagram::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < points(); ++p)
        if (mate_[static_cast<std::size_t>(p)] > p) out.emplace_back(p, mate_[static_cast<std::size_t>(p)]);
    return out;
}

std::pair<int, int> Diagram::chord(int id) const {
    for (int p = 0; p < points(); ++p)
        if (cid_[static_cast<std::size_t>(p)] == id) return {p, mate_[static_cast<std::size_t>(p)]};
    throw Error(ErrorKind::IndexOutOfRange, "no chord " + std::to_string(id));
}

std::string Diagram::str() const {
    std::string s;
    for (auto [a, b] : pairs()) {
        if (!s.empty()) s += ',';
        s += std::to_string(a) + '-' + std::to_string(b);
    }
    return s;
}

std::string to_string(const DiagramOrZero& d) { return is_zero(d) ? std::string("0") : diagram_of(d).str(); }

std::vector<int> region_of_arcs(const Diagram& g) {
    const int n = g.points();
    std::vector<int> rid(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int k = 0; k < n; ++k) {
        if (rid[static_cast<std::size_t>(k)] != -1) continue;
        int arc = k;
        while (rid[static_cast<std::size_t>(arc)] == -1) {
            rid[static_cast<std::size_t>(arc)] = next;
            arc = g.mate(arc + 1);
        }
        ++next;
    }
    return rid;
}

std::vector<Region> regions(const Diagram& g) {
    auto rid = region_of_arcs(g);
    int count = *std::max_element(rid.begin(), rid.end()) + 1;
    std::vector<Region> out(static_cast<std::size_t>(count));
    for (int r = 0; r < count; ++r) out[static_cast<std::size_t>(r)].id = r;
    for (int k = 0; k < g.points(); ++k) {
        auto& r = out[static_cast<std::size_t>(rid[static_cast<std::size_t>(k)])];
        r.arcs.push_back(k);
        r.sign = arc_sign(k);
        // the chord leaving the end of arc k bounds this region
        r.chords.push_back(g.chord_of(k + 1));
    }
    for (auto& r : out) {
        std::sort(r.chords.begin(), r.chords.end());
        r.chords.erase(std::unique(r.chords.begin(), r.chords.end()), r.chords.end());
    }
    return out;
}

int euler_class(const Diagram& g) {
    int e = 0;
    for (const auto& r : regions(g)) e += r.sign;
    return e;
}

namespace {

void fill(std::vector<int>& m, int lo, int hi, const std::function<void()>& done) {
    if (lo > hi) {
        done();
        return;
    }
    for (int q = lo + 1; q <= hi; q += 2) {
        m[static_cast<std::size_t>(lo)] = q;
        m[static_cast<std::size_t>(q)] = lo;
        fill(m, lo + 1, q - 1, [&] { fill(m, q + 1, hi, done); });
    }
}

}  // namespace

std::vector<Diagram> enumerate_diagrams(int n) {
    std::vector<Diagram> out;
    if (n < 1) return out;
    std::vector<int> m(static_cast<std::size_t>(2 * n), -1);
    fill(m, 0, 2 * n - 1, [&] { out.push_back(Diagram::from_mates(m)); });
    return out;
}

std::vector<Diagram> enumerate_diagrams(int n, int e) {
    std::vector<Diagram> out;
    for (auto& d : enumerate_diagrams(n))
        if (euler_class(d) == e) out.push_back(d);
    return out;
}

Diagram rotate_points(const Diagram& g, int steps) {
    if (steps % 2 != 0) throw Error(ErrorKind::OddStep, "rotation must move the base point by an even step");
    std::vector<int> m(static_cast<std::size_t>(g.points()));
    for (int p = 0; p < g.points(); ++p)
        m[static_cast<std::size_t>(g.wrap(p + steps))] = g.wrap(g.mate(p) + steps);
    return Diagram::from_mates(std::move(m));
}

std::vector<int> survivor_map(int big, int p) {
    p = ((p % big) + big) % big;
    std::vector<int> out(static_cast<std::size_t>(big), -1);
    int q = (p + 1) % big;
    for (int x = 0; x < big; ++x) {
        if (x == p || x == q) continue;
        int y;
        if (p == big - 1) y = (x == big - 2) ? 0 : x;
        else if (p == 0) y = x - 2;
        else y = x < p ? x : x - 2;
        out[static_cast<std::size_t>(x)] = y;
    }
    return out;
}

DiagramOrZero annihilate_at(const Diagram& g, int p) {
    const int n = g.points();
    p = g.wrap(p);
    int q = g.wrap(p + 1);
    int a = g.mate(p), b = g.mate(q);
    if (a == q) return Zero{};
    if (n == 2) return Zero{};
    // at the base point this undoes creation on the far side: A+ B- = 1, A- B+ = 1
    auto keep = survivor_map(n, p);
    if (p == 0)
        for (int x = 2; x < n; ++x) keep[static_cast<std::size_t>(x)] = x < n - 2 ? x : x - (n - 2);
    else if (p == n - 1)
        for (int x = 1; x < n - 1; ++x) keep[static_cast<std::size_t>(x)] = x >= 2 ? x - 2 : x + n - 4;
    std::vector<int> m(static_cast<std::size_t>(n - 2), -1);
    for (int x = 0; x < n; ++x) {
        if (x == p || x == q || x == a || x == b) continue;
        m[static_cast<std::size_t>(keep[static_cast<std::size_t>(x)])] = keep[static_cast<std::size_t>(g.mate(x))];
    }
    int ka = keep[static_cast<std::size_t>(a)], kb = keep[static_cast<std::size_t>(b)];
    m[static_cast<std::size_t>(ka)] = kb;
    m[static_cast<std::size_t>(kb)] = ka;
    return Diagram::from_mates(std::move(m));
}

Diagram create_at(const Diagram& g, int p) {
    const int big = g.points() + 2;
    p = ((p % big) + big) % big;
    int q = (p + 1) % big;
    auto keep = survivor_map(big, p);
    std::vector<int> up(static_cast<std::size_t>(g.points()), -1);
    for (int x = 0; x < big; ++x)
        if (keep[static_cast<std::size_t>(x)] >= 0) up[static_cast<std::size_t>(keep[static_cast<std::size_t>(x)])] = x;
    std::vector<int> m(static_cast<std::size_t>(big), -1);
    m[static_cast<std::size_t>(p)] = q;
    m[static_cast<std::size_t>(q)] = p;
    for (int y = 0; y < g.points(); ++y)
        m[static_cast<std::size_t>(up[static_cast<std::size_t>(y)])] = up[static_cast<std::size_t>(g.mate(y))];
    return Diagram::from_mates(std::move(m));
}

Diagram merge(const std::optional<Diagram>& left, const std::optional<Diagram>& right) {
    const int n1 = left ? left->chords() : 0;
    const int n2 = right ? right->chords() : 0;
    const int n = n1 + n2 + 1;
    std::vector<int> m(static_cast<std::size_t>(2 * n), -1);
    const int pivot = 2 * n1 + 1;
    m[0] = pivot;
    m[static_cast<std::size_t>(pivot)] = 0;
    if (left) {
        // left piece on 1..2n1, its base point at 2n1
        auto place = [&](int x) { return x == 0 ? 2 * n1 : x; };
        for (int x = 0; x < 2 * n1; ++x) m[static_cast<std::size_t>(place(x))] = place(left->mate(x));
    }
    if (right) {
        const int off = 2 * n1 + 2;
        for (int x = 0; x < 2 * n2; ++x) m[static_cast<std::size_t>(off + x)] = off + right->mate(x);
    }
    return Diagram::from_mates(std::move(m));
}

std::pair<std::optional<Diagram>, std::optional<Diagram>> unique_split(const Diagram& g) {
    const int pivot = g.mate(0);
    const int n1 = (pivot - 1) / 2;
    const int n2 = g.chords() - n1 - 1;
    std::optional<Diagram> left, right;
    if (n1 > 0) {
        std::vector<int> m(static_cast<std::size_t>(2 * n1));
        auto back = [&](int x) { return x == 2 * n1 ? 0 : x; };
        for (int x = 1; x <= 2 * n1; ++x) m[static_cast<std::size_t>(back(x))] = back(g.mate(x));
        left = Diagram::from_mates(std::move(m));
    }
    if (n2 > 0) {
        const int off = 2 * n1 + 2;
        std::vector<int> m(static_cast<std::size_t>(2 * n2));
        for (int x = 0; x < 2 * n2; ++x) m[static_cast<std::size_t>(x)] = g.mate(off + x) - off;
        right = Diagram::from_mates(std::move(m));
    }
    return {left, right};
}

}  // namespace sutura
