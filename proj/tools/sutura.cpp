#include "sutura/error.hpp"
#include "sutura/io.hpp"
#include "sutura/sfh.hpp"
#include "sutura/stack.hpp"
#include "sutura/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace sutura;
using io::json;

namespace {

constexpr const char* kWordTag = "w:";

// sign strings like -+ travel tagged until parsed
std::vector<std::string> protect_words(int argc, char** argv) {
    std::vector<std::string> out;
    bool literal = false;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--" && !literal) {
            literal = true;
            continue;
        }
        const bool signs = !a.empty() && a.find_first_not_of("-+") == std::string::npos;
        if (signs || (literal && !a.empty() && a[0] == '-')) a = kWordTag + a;
        out.push_back(a);
    }
    return out;
}

std::string untag(const std::string& s) { return s.rfind(kWordTag, 0) == 0 ? s.substr(2) : s; }

Word word_arg(const std::string& s) { return io::parse_word(untag(s)); }
Diagram diagram_arg(const std::string& s) { return Diagram::parse(untag(s)); }

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::filesystem::path cache_file() {
    const char* dir = std::getenv("SUTURA_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::filesystem::path(dir) / "decompose.kv";
}

void load_cache() {
    auto path = cache_file();
    if (path.empty()) return;
    std::ifstream in(path);
    if (in) io::load_decompose_cache(in);
}

void save_cache() {
    auto path = cache_file();
    if (path.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        io::save_decompose_cache(out);
    }
    std::filesystem::rename(tmp, path, ec);
}

std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

int cmd_enumerate(int n, std::optional<int> e, int cap, const std::string& fmt) {
    if (n < 1) throw Error(ErrorKind::ParseError, "N must be at least 1");
    if (n > cap) throw Error(ErrorKind::CapExceeded, "N = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
    auto ds = e ? enumerate_diagrams(n, *e) : enumerate_diagrams(n);
    std::vector<long long> row;
    for (int k = 0; k < n; ++k) row.push_back(narayana(n, 2 * k - (n - 1)));
    if (fmt == "json") {
        json rows = json::array();
        for (const auto& g : ds) {
            auto [lo, hi] = phi(g);
            rows.push_back({{"diagram", g.str()},
                            {"euler_class", euler_class(g)},
                            {"basis", is_basis(g)},
                            {"phi", {io::word_text(lo), io::word_text(hi)}}});
        }
        json out{{"N", n}, {"euler_class", e ? json(*e) : json(nullptr)}, {"diagrams", rows}, {"count", ds.size()},
                 {"catalan", catalan(n)}, {"narayana", row}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::size_t w = 0;
    for (const auto& g : ds) w = std::max(w, g.str().size());
    for (const auto& g : ds) {
        auto [lo, hi] = phi(g);
        std::cout << pad(g.str(), w) << "  e=" << pad(std::to_string(euler_class(g)), 3) << " basis=" << (is_basis(g) ? "yes" : "no ")
                  << "  phi=(" << io::word_text(lo) << ", " << io::word_text(hi) << ")\n";
    }
    if (e) {
        std::cout << ds.size() << " of " << catalan(n) << "\n";
    } else {
        std::cout << catalan(n) << " =";
        for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? "+" : " ") << row[k];
        std::cout << "\n";
    }
    return 0;
}

int cmd_decompose(const std::string& arg, const std::string& fmt) {
    Diagram g = diagram_arg(arg);
    auto x = decompose(g);
    if (fmt == "json") {
        auto [lo, hi] = phi(g);
        json out{{"diagram", g.str()}, {"element", io::to_json(x)}, {"phi", {io::word_text(lo), io::word_text(hi)}}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& w : x) std::cout << io::word_text(w) << "\n";
    return 0;
}

int cmd_frompair(const std::string& lo, const std::string& hi, const std::string& fmt) {
    Diagram g = from_pair(word_arg(lo), word_arg(hi));
    if (fmt == "json") {
        auto j = io::to_json(g);
        j["diagram"] = g.str();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << g.str() << "\n";
    return 0;
}

int cmd_stack(const std::string& a, const std::string& b, const std::string& fmt) {
    Diagram g0 = diagram_arg(a), g1 = diagram_arg(b);
    const int loops = suture_graph(g0, g1).loops();
    const int mg = m_geometric(g0, g1), ma = m_algebraic(g0, g1);
    const bool tight = loops == 1;
    if (fmt == "json") {
        json out{{"bottom", g0.str()}, {"top", g1.str()}, {"status", tight ? "tight" : "overtwisted"},
                 {"loops", loops},      {"m_geometric", mg}, {"m_algebraic", ma}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (tight ? "tight" : "overtwisted") << ", " << loops << (loops == 1 ? " loop" : " loops") << "\n";
        std::cout << "m_geometric=" << mg << " m_algebraic=" << ma << "\n";
    }
    return mg == ma ? 0 : 1;
}

int cmd_category(const std::string& a, const std::string& b, const std::string& fmt) {
    auto c = bounded_category(diagram_arg(a), diagram_arg(b));
    if (fmt == "json") {
        std::cout << io::to_json(c).dump(2) << "\n";
        return 0;
    }
    std::cout << c.objects.size() << " objects\n";
    for (std::size_t i = 0; i < c.objects.size(); ++i) std::cout << "  " << i << ": " << c.objects[i].str() << "\n";
    auto h = c.hasse();
    std::cout << h.size() << " covering morphisms\n";
    for (auto [x, y] : h) std::cout << "  " << x << " -> " << y << "\n";
    std::cout << "poset: " << (c.reflexive && c.transitive && c.antisymmetric ? "yes" : "no") << "\n";
    return 0;
}

int cmd_verify(const std::string& level, std::uint64_t seed, int shift, const std::string& fmt) {
    VerifyOptions opt;
    opt.level = level == "full" ? Level::Full : Level::Quick;
    opt.seed = seed;
    opt.connector_shift = shift;
    auto rep = run_verification(opt);
    if (fmt == "json") {
        std::cout << io::to_json(rep).dump(2) << "\n";
    } else {
        for (const auto& f : rep.failures)
            std::cout << "FAIL " << f.name << " (" << f.n_minus << "," << f.n_plus << ")\n";
        for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
        std::cout << rep.checks.size() << " checks, " << rep.failures.size() << " failures\n";
    }
    return rep.ok() ? 0 : 1;
}

int cmd_render(const std::string& arg, const std::string& fmt) {
    Diagram g = diagram_arg(arg);
    if (fmt == "svg") std::cout << io::render_svg(g);
    else if (fmt == "json") std::cout << io::to_json(g).dump(2) << "\n";
    else std::cout << io::render_ascii(g);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chord diagrams, bypasses and contact categories"};
    app.fallthrough();
    app.require_subcommand(1);
    std::string fmt = "text", level = "quick";
    int cap = 10, shift = kConnectorShift;
    std::uint64_t seed = 0;
    app.add_option("--format", fmt, "output format")->check(CLI::IsMember({"text", "json", "svg", "ascii"}));
    app.add_option("--cap", cap, "largest N for enumerate")->check(CLI::NonNegativeNumber);
    app.add_option("--level", level, "verify depth")->check(CLI::IsMember({"quick", "full"}));
    app.add_option("--seed", seed, "seed for randomized sweeps");

    int n = 0;
    std::optional<int> e;
    auto* en = app.add_subcommand("enumerate", "list the diagrams with N chords");
    en->add_option("N", n)->required();
    en->add_option("e", e, "euler class");

    std::string d0, d1;
    auto* de = app.add_subcommand("decompose", "basis words of a diagram");
    de->add_option("diagram", d0)->required();

    auto* fp = app.add_subcommand("frompair", "the diagram with extreme words lo, hi");
    fp->add_option("lo", d0)->required();
    fp->add_option("hi", d1)->required();

    auto* st = app.add_subcommand("stack", "stack the first diagram under the second");
    st->add_option("bottom", d0)->required();
    st->add_option("top", d1)->required();

    auto* ca = app.add_subcommand("category", "the category bounded by two diagrams");
    ca->add_option("bottom", d0)->required();
    ca->add_option("top", d1)->required();

    auto* ve = app.add_subcommand("verify", "run the property sweeps");
    ve->add_option("--connector-shift", shift)->group("");

    auto* re = app.add_subcommand("render", "draw a diagram");
    re->add_option("diagram", d0)->required();

    auto args = protect_words(argc, argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& h) {
        return app.exit(h);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }

    try {
        if (fmt == "svg" && !re->parsed()) throw UsageError("svg output is only available for render");
        if (fmt == "ascii" && !re->parsed()) fmt = "text";
        load_cache();
        int rc = 0;
        if (en->parsed()) rc = cmd_enumerate(n, e, cap, fmt);
        else if (de->parsed()) rc = cmd_decompose(d0, fmt);
        else if (fp->parsed()) rc = cmd_frompair(d0, d1, fmt);
        else if (st->parsed()) rc = cmd_stack(d0, d1, fmt);
        else if (ca->parsed()) rc = cmd_category(d0, d1, fmt);
        else if (ve->parsed()) rc = cmd_verify(level, seed, shift, fmt);
        else rc = cmd_render(d0, fmt);
        save_cache();
        return rc;
    } catch (const UsageError& u) {
        std::cerr << "usage: " << u.what() << "\n";
        return 2;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
