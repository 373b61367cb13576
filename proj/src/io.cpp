#include "sutura/io.hpp"

#include "sutura/error.hpp"
#include "sutura/sfh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace sutura::io {

std::string word_text(const Word& w) { return w.empty() ? "()" : w.str(); }

Word parse_word(std::string_view s) {
    if (s == "()") return Word{};
    return Word::parse(s);
}

json to_json(const Diagram& g) {
    json pairs = json::array();
    for (auto [a, b] : g.pairs()) pairs.push_back({a, b});
    json rs = json::array();
    for (const auto& r : regions(g)) rs.push_back({{"sign", r.sign}, {"arcs", r.arcs}});
    return {{"N", g.chords()}, {"pairs", pairs}, {"euler_class", euler_class(g)}, {"regions", rs}};
}

Diagram diagram_from_json(const json& j) {
    try {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        Diagram g = Diagram::from_pairs(pairs);
        if (j.contains("N") && j["N"].get<int>() != g.chords()) throw Error(ErrorKind::ParseError, "N does not match pairs");
        return g;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

json to_json(const Element& x) {
    json out = json::array();
    for (const auto& w : x) out.push_back(word_text(w));
    return out;
}

Element element_from_json(const json& j) {
    try {
        Element x;
        for (const auto& s : j) x.toggle(parse_word(s.get<std::string>()));
        return x;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

namespace {

json touch_json(const Touch& t) { return {t.chord, t.t}; }
Touch touch_from(const json& j) { return {j.at(0).get<int>(), j.at(1).get<double>()}; }

}  // namespace

json to_json(const BypassSystem& sys) {
    json arcs = json::array();
    for (const auto& c : sys.arcs)
        arcs.push_back({{"e1", touch_json(c.e1)}, {"x", touch_json(c.x)}, {"e3", touch_json(c.e3)}, {"r1", c.r1}});
    return {{"diagram", sys.base.str()}, {"arcs", arcs}};
}

BypassSystem system_from_json(const json& j) {
    try {
        BypassSystem sys{Diagram::parse(j.at("diagram").get<std::string>()), {}};
        for (const auto& a : j.at("arcs"))
            sys.arcs.push_back({touch_from(a.at("e1")), touch_from(a.at("x")), touch_from(a.at("e3")), a.at("r1").get<int>()});
        return sys;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

json to_json(const BoundedCategory& c) {
    json objs = json::array();
    for (const auto& g : c.objects) objs.push_back(g.str());
    json hasse = json::array();
    for (auto [a, b] : c.hasse()) hasse.push_back({a, b});
    json mor = json::array();
    for (auto [a, b] : c.morphisms) mor.push_back({a, b});
    return {{"lo", c.lo.str()},
            {"hi", c.hi.str()},
            {"objects", objs},
            {"hasse", hasse},
            {"morphisms", mor},
            {"reflexive", c.reflexive},
            {"transitive", c.transitive},
            {"antisymmetric", c.antisymmetric}};
}

BoundedCategory category_from_json(const json& j) {
    try {
        BoundedCategory c;
        c.lo = Diagram::parse(j.at("lo").get<std::string>());
        c.hi = Diagram::parse(j.at("hi").get<std::string>());
        for (const auto& s : j.at("objects")) c.objects.push_back(Diagram::parse(s.get<std::string>()));
        const int n = static_cast<int>(c.objects.size());
        if (j.contains("morphisms")) {
            for (const auto& p : j["morphisms"]) c.morphisms.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        } else {
            std::vector<std::vector<char>> reach(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
            for (int a = 0; a < n; ++a) reach[a][a] = 1;
            for (const auto& p : j.at("hasse")) reach.at(p.at(0).get<std::size_t>()).at(p.at(1).get<std::size_t>()) = 1;
            for (int k = 0; k < n; ++k)
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (reach[a][k] && reach[k][b]) reach[a][b] = 1;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (reach[a][b]) c.morphisms.emplace_back(a, b);
        }
        std::sort(c.morphisms.begin(), c.morphisms.end());
        for (auto [a, b] : c.morphisms)
            if (a < 0 || b < 0 || a >= n || b >= n) throw Error(ErrorKind::ParseError, "morphism index out of range");
        c.reflexive = c.transitive = c.antisymmetric = true;
        for (int a = 0; a < n; ++a) c.reflexive = c.reflexive && c.has(a, a);
        for (auto [a, b] : c.morphisms) {
            if (a != b && c.has(b, a)) c.antisymmetric = false;
            for (int k = 0; k < n; ++k)
                if (c.has(b, k) && !c.has(a, k)) c.transitive = false;
        }
        return c;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

json to_json(const Report& r) {
    auto check = [](const Check& c) {
        return json{{"name", c.name}, {"grading", {c.n_minus, c.n_plus}}, {"pass", c.pass}};
    };
    json checks = json::array(), failures = json::array();
    for (const auto& c : r.checks) checks.push_back(check(c));
    for (const auto& c : r.failures) failures.push_back(check(c));
    json out{{"checks", checks}, {"failures", failures}};
    if (!r.notes.empty()) out["notes"] = r.notes;
    return out;
}

namespace {

std::string num(double v) {
    if (std::abs(v) < 5e-4) v = 0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::optional<int> root_of(const Diagram& g) {
    if (!is_basis(g)) return std::nullopt;
    return g.wrap(root_point(g.chords(), euler_class(g)));
}

}  // namespace

std::string render_svg(const Diagram& g) {
    constexpr double size = 400, cx = 200, cy = 200, rad = 160;
    const int pts = g.points();
    auto at = [&](int p, double r) {
        const double th = 2 * std::numbers::pi * p / pts;
        return std::pair{cx + r * std::sin(th), cy - r * std::cos(th)};
    };
    auto xy = [&](std::pair<double, double> q) { return num(q.first) + " " + num(q.second); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
       << size << " " << size << "\">\n";
    std::vector<char> seen(static_cast<std::size_t>(pts), 0);
    for (int start = 0; start < pts; ++start) {
        if (seen[start]) continue;
        std::string d = "M " + xy(at(start, rad));
        int a = start;
        do {
            seen[a] = 1;
            d += " A " + num(rad) + " " + num(rad) + " 0 0 1 " + xy(at(a + 1, rad));
            const int q = g.mate(a + 1);
            d += " L " + xy(at(q, rad));
            a = q;
        } while (a != start);
        os << "  <path d=\"" << d << " Z\" fill=\"" << (arc_sign(start) > 0 ? "#dbe8f6" : "#f6dfd8")
           << "\" stroke=\"none\" class=\"" << (arc_sign(start) > 0 ? "plus" : "minus") << "\"/>\n";
    }
    os << "  <circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(rad)
       << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1.5\"/>\n";
    for (auto [a, b] : g.pairs()) {
        auto [x1, y1] = at(a, rad);
        auto [x2, y2] = at(b, rad);
        os << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
           << "\" stroke=\"#000\" stroke-width=\"2\"/>\n";
    }
    const auto root = root_of(g);
    for (int p = 0; p < pts; ++p) {
        auto [x, y] = at(p, rad);
        if (p == 0)
            os << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"6\" fill=\"#000\" class=\"base\"/>\n";
        else if (root && p == *root)
            os << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y)
               << "\" r=\"6\" fill=\"#fff\" stroke=\"#000\" stroke-width=\"2\" class=\"root\"/>\n";
        else
            os << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\"#000\"/>\n";
        auto [lx, ly] = at(p, rad + 18);
        os << "  <text x=\"" << num(lx) << "\" y=\"" << num(ly + 4)
           << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" << p << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_ascii(const Diagram& g) {
    const int pts = g.points();
    auto col = [](int p) { return 4 * p + 2; };
    // a chord sits one row above everything it encloses
    std::vector<int> height(static_cast<std::size_t>(g.chords()), 1);
    auto ps = g.pairs();
    std::vector<int> order(ps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return ps[x].second - ps[x].first < ps[y].second - ps[y].first; });
    int top = 1;
    for (int c : order) {
        auto [a, b] = ps[c];
        for (int d : order)
            if (ps[d].first > a && ps[d].second < b) height[c] = std::max(height[c], height[d] + 1);
        top = std::max(top, height[c]);
    }
    const int width = col(pts - 1) + 3;
    std::vector<std::string> rows(static_cast<std::size_t>(top), std::string(static_cast<std::size_t>(width), ' '));
    for (std::size_t c = 0; c < ps.size(); ++c) {
        auto [a, b] = ps[c];
        const int r = top - height[c];
        for (int x = col(a); x <= col(b); ++x) rows[r][x] = '-';
        rows[r][col(a)] = rows[r][col(b)] = '+';
        for (int y = r + 1; y < top; ++y) rows[y][col(a)] = rows[y][col(b)] = '|';
    }
    std::string labels(static_cast<std::size_t>(width), ' '), marks = labels;
    for (int p = 0; p < pts; ++p) {
        const std::string s = std::to_string(p);
        labels.replace(static_cast<std::size_t>(col(p)), s.size(), s);
        if (p + 1 < pts) labels[col(p) + 2] = arc_sign(p) > 0 ? '+' : '-';
    }
    labels[0] = arc_sign(pts - 1) > 0 ? '+' : '-';
    marks[col(0)] = '*';
    if (auto root = root_of(g); root && *root != 0) marks[col(*root)] = 'o';
    rows.push_back(labels);
    rows.push_back(marks);
    std::string out;
    for (auto& r : rows) {
        r.erase(r.find_last_not_of(' ') + 1);
        out += r + "\n";
    }
    return out;
}

void save_decompose_cache(std::ostream& os) {
    for (const auto& [g, x] : decompose_cache_snapshot()) {
        os << g.str();
        for (const auto& w : x) os << ' ' << word_text(w);
        os << '\n';
    }
}

std::size_t load_decompose_cache(std::istream& is) {
    std::size_t loaded = 0;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string key, tok;
        if (!(ls >> key)) continue;
        try {
            Diagram g = Diagram::parse(key);
            Element x;
            while (ls >> tok) x.toggle(parse_word(tok));
            const int e = euler_class(g);
            bool fits = !x.empty();
            for (const auto& w : x) fits = fits && w.size() == g.chords() - 1 && w.euler() == e;
            if (!fits) continue;
            decompose_cache_seed(g, x);
            ++loaded;
        } catch (const Error&) {
            // stale or hand-edited lines are skipped
        }
    }
    return loaded;
}

}  // namespace sutura::io
