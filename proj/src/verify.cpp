#include "sutura/verify.hpp"

#include "sutura/error.hpp"
#include "sutura/sfh.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>

namespace sutura {

namespace {

struct Bounds {
    int diagram_n, word_n, basis_n, phi_n, tangle_n, ops_n, triple_n, rot_n, merge_n;
    int system_n, stack_n, direction_n, category_n, cobordism_n;
    int simplicial_n, complex_n, rank_n;
};

Bounds bounds(Level level) {
    if (level == Level::Full) return {8, 8, 7, 7, 6, 6, 6, 6, 5, 5, 6, 5, 5, 5, 6, 8, 6};
    return {5, 5, 4, 5, 5, 4, 5, 4, 4, 4, 5, 4, 4, 4, 5, 5, 5};
}

// SFH(N, e) sits over words with these sign counts
std::pair<int, int> grading(int chords, int e) { return {(chords - 1 - e) / 2, (chords - 1 + e) / 2}; }

Word block(bool first_plus, int a, int b) { return Word::repeat(first_plus, a).concat(Word::repeat(!first_plus, b)); }

std::map<int, std::vector<Diagram>> by_euler(int chords) {
    std::map<int, std::vector<Diagram>> out;
    for (const auto& g : enumerate_diagrams(chords)) out[euler_class(g)].push_back(g);
    return out;
}

// runs body per (N, e) and records one check per grading
void per_class(Report& rep, const std::string& name, int lo, int hi, const std::function<bool(int, const std::vector<Diagram>&)>& body) {
    for (int n = lo; n <= hi; ++n)
        for (const auto& [e, ds] : by_euler(n)) {
            bool pass = false;
            try {
                pass = body(n, ds);
            } catch (const Error&) {
                pass = false;
            }
            auto [nm, np] = grading(n, e);
            rep.add({name, nm, np, pass});
        }
}

void per_grading(Report& rep, const std::string& name, int lo, int hi, const std::function<bool(int, int)>& body) {
    for (int n = lo; n <= hi; ++n)
        for (int k = 0; k <= n; ++k) {
            bool pass = false;
            try {
                pass = body(n - k, k);
            } catch (const Error&) {
                pass = false;
            }
            rep.add({name, n - k, k, pass});
        }
}

void merge_into(Report& out, const Report& r) {
    for (const auto& c : r.checks) out.add(c);
    out.notes.insert(out.notes.end(), r.notes.begin(), r.notes.end());
}

Report diagram_suite(const Bounds& b) {
    Report rep;
    for (int n = 1; n <= b.diagram_n; ++n) {
        long long total = static_cast<long long>(enumerate_diagrams(n).size());
        rep.add({"catalan count N=" + std::to_string(n), n - 1, 0, total == catalan(n)});
    }
    per_class(rep, "euler classes follow the narayana row", 1, b.diagram_n,
              [](int n, const std::vector<Diagram>& ds) { return static_cast<long long>(ds.size()) == narayana(n, euler_class(ds.front())); });
    per_class(rep, "rotation by two has order N", 1, b.diagram_n, [](int n, const std::vector<Diagram>& ds) {
        for (const auto& g : ds) {
            Diagram h = g;
            for (int t = 0; t < n; ++t) h = rotate_points(h, 2);
            if (h != g) return false;
        }
        return true;
    });
    per_class(rep, "text form round-trips", 1, b.diagram_n, [](int, const std::vector<Diagram>& ds) {
        return std::all_of(ds.begin(), ds.end(), [](const Diagram& g) { return Diagram::parse(g.str()) == g; });
    });
    per_class(rep, "split inverts merge", 2, b.diagram_n, [](int, const std::vector<Diagram>& ds) {
        return std::all_of(ds.begin(), ds.end(), [](const Diagram& g) {
            auto [l, r] = unique_split(g);
            return merge(l, r) == g;
        });
    });
    per_class(rep, "regions partition the boundary arcs", 1, b.diagram_n, [](int, const std::vector<Diagram>& ds) {
        for (const auto& g : ds) {
            std::vector<int> count(static_cast<std::size_t>(g.points()), 0);
            for (const auto& r : regions(g))
                for (int a : r.arcs) {
                    if (arc_sign(a) != r.sign) return false;
                    ++count[a];
                }
            if (std::any_of(count.begin(), count.end(), [](int c) { return c != 1; })) return false;
        }
        return true;
    });
    return rep;
}

Report word_suite(const Bounds& b) {
    Report rep;
    per_grading(rep, "narayana closed form matches the recursion", 0, b.word_n, [](int nm, int np) {
        return narayana(nm + np + 1, np - nm) == narayana_recursive(nm + np + 1, np - nm);
    });
    per_grading(rep, "comparable pairs are counted by narayana", 0, b.word_n, [](int nm, int np) {
        return static_cast<long long>(comparable_pairs(nm, np).size()) == narayana(nm + np + 1, np - nm);
    });
    per_grading(rep, "monotone functions round-trip", 0, b.word_n, [](int nm, int np) {
        for (const auto& [lo, hi] : comparable_pairs(nm, np))
            if (monotone_to_pair(pair_to_monotone(lo, hi)) != std::pair(lo, hi)) return false;
        return true;
    });
    per_grading(rep, "partial order definitions agree", 0, std::min(b.word_n, 7), [](int nm, int np) {
        auto ws = all_words(nm, np);
        for (const auto& x : ws)
            for (const auto& y : ws)
                if (partial_leq(x, y) != partial_leq_prefix(x, y)) return false;
        return true;
    });
    return rep;
}

Report sfh_suite(const Bounds& b) {
    Report rep;
    per_grading(rep, "basis diagrams decompose to themselves", 0, b.basis_n, [](int nm, int np) {
        for (const auto& w : all_words(nm, np))
            if (decompose(basis_diagram(w)) != Element{w} || basis_diagram_from_root(w) != basis_diagram(w)) return false;
        return true;
    });
    per_class(rep, "base and root decompositions agree", 1, b.phi_n, [](int, const std::vector<Diagram>& ds) {
        return std::all_of(ds.begin(), ds.end(), [](const Diagram& g) { return decompose(g) == decompose_from_root(g); });
    });
    per_class(rep, "phi is a bijection onto comparable pairs with the sandwich property", 1, b.phi_n,
              [](int n, const std::vector<Diagram>& ds) {
                  std::set<std::pair<Word, Word>> seen;
                  for (const auto& g : ds) {
                      auto x = decompose(g);
                      auto [lo, hi] = phi(g);
                      for (const auto& w : x)
                          if (!partial_leq(lo, w) || !partial_leq(w, hi)) return false;
                      if (from_pair(lo, hi) != g) return false;
                      seen.insert({lo, hi});
                  }
                  auto [nm, np] = grading(n, euler_class(ds.front()));
                  std::set<std::pair<Word, Word>> want;
                  for (const auto& p : comparable_pairs(nm, np)) want.insert(p);
                  return seen == want;
              });
    per_class(rep, "non-basis decompositions have even size", 1, b.phi_n, [](int, const std::vector<Diagram>& ds) {
        return std::all_of(ds.begin(), ds.end(), [](const Diagram& g) { return is_basis(g) || decompose(g).size() % 2 == 0; });
    });
    per_class(rep, "only the extremes are comparable to everything", 1, b.tangle_n, [](int, const std::vector<Diagram>& ds) {
        for (const auto& g : ds) {
            auto x = decompose(g);
            if (x.size() == 1) continue;
            auto [lo, hi] = phi(g);
            for (const auto& w : x) {
                int below = 0, above = 0;
                for (const auto& v : x) {
                    below += partial_leq(v, w);
                    above += partial_leq(w, v);
                }
                const bool all = below + above == static_cast<int>(x.size()) + 1;
                if ((w == lo || w == hi) != all) return false;
                if (!all && (below % 2 || above % 2)) return false;
            }
        }
        return true;
    });
    per_grading(rep, "creation and annihilation relations", 0, b.ops_n, [](int nm, int np) {
        for (const auto& w : all_words(nm, np)) {
            Element x{w};
            if (apply_operator({OpKind::APlus}, apply_operator({OpKind::BMinus}, x)) != x) return false;
            if (apply_operator({OpKind::AMinus}, apply_operator({OpKind::BPlus}, x)) != x) return false;
            if (!apply_operator({OpKind::APlus}, apply_operator({OpKind::BPlus}, x)).empty()) return false;
            if (!apply_operator({OpKind::AMinus}, apply_operator({OpKind::BMinus}, x)).empty()) return false;
        }
        return true;
    });
    per_class(rep, "bypass triples sum to zero", 2, b.triple_n, [](int, const std::vector<Diagram>& ds) {
        for (const auto& g : ds)
            for (const auto& info : find_attaching_arcs(g)) {
                if (info.cls != ArcClass::Nontrivial) continue;
                auto t = bypass_triple(g, info.arc);
                if (!(decompose(t[0]) + decompose(t[1]) + decompose(t[2])).empty()) return false;
            }
        return true;
    });
    per_grading(rep, "rotation implementations agree and have order n+1", 0, b.rot_n, [](int nm, int np) {
        const int n = nm + np;
        auto g = rotation_matrix(n, np, RotationImpl::Geometric);
        if (rotation_matrix(n, np, RotationImpl::Minors) != g || rotation_matrix(n, np, RotationImpl::Explicit) != g) return false;
        for (const auto& w : all_words(nm, np)) {
            Element x{w};
            for (int t = 0; t <= n; ++t) x = rotation(x);
            if (x != Element{w}) return false;
        }
        return true;
    });
    for (int total = 1; total <= b.merge_n; ++total) {
        std::set<std::vector<Word>> images;
        bool pass = true;
        std::size_t count = 0;
        for (int n1 = 0; n1 < total; ++n1) {
            std::vector<std::optional<Diagram>> left, right;
            if (n1 == 0) left.emplace_back(std::nullopt);
            for (const auto& g : n1 ? enumerate_diagrams(n1) : std::vector<Diagram>{}) left.emplace_back(g);
            const int n2 = total - 1 - n1;
            if (n2 == 0) right.emplace_back(std::nullopt);
            for (const auto& g : n2 ? enumerate_diagrams(n2) : std::vector<Diagram>{}) right.emplace_back(g);
            for (const auto& a : left)
                for (const auto& c : right) {
                    auto x = merge_elements(a ? std::optional(decompose(*a)) : std::nullopt, c ? std::optional(decompose(*c)) : std::nullopt);
                    pass = pass && x == decompose(merge(a, c));
                    images.insert(x.words());
                    ++count;
                }
        }
        pass = pass && images.size() == count && static_cast<long long>(count) == catalan(total);
        rep.add({"merge images are disjoint, total " + std::to_string(total), total - 1, 0, pass});
    }
    return rep;
}

int m_shifted(const Diagram& a, const Diagram& b, int shift) {
    if (shift == kConnectorShift) return m(a, b);
    return suture_graph(a, b, shift).loops() == 1 ? 1 : 0;
}

Report surgery_suite(const Bounds& b, const VerifyOptions& opt) {
    Report rep;
    per_grading(rep, "forwards system surgeries reach both ends", 0, b.system_n, [](int nm, int np) {
        for (const auto& [lo, hi] : comparable_pairs(nm, np)) {
            auto f = fbs(lo, hi);
            auto up = surgery(f, Dir::Up), down = surgery(f, Dir::Down);
            if (is_zero(up) || diagram_of(up) != basis_diagram(hi)) return false;
            if (is_zero(down) || diagram_of(down) != from_pair(lo, hi)) return false;
        }
        return true;
    });
    per_grading(rep, "forwards systems have no pinwheels", 0, b.system_n, [](int nm, int np) {
        for (const auto& [lo, hi] : comparable_pairs(nm, np)) {
            auto f = fbs(lo, hi);
            if (has_pinwheel(f, Dir::Up) || has_pinwheel(f, Dir::Down)) return false;
        }
        return true;
    });
    // no pinwheel means the attachment is tight; tallied per grading of the base
    std::mt19937_64 rng(opt.seed);
    std::map<std::pair<int, int>, bool> random_ok;
    int drawn = 0, free_cases = 0;
    while (drawn < opt.random_cases) {
        auto sys = random_system(rng, 6);
        if (!sys) continue;
        ++drawn;
        auto g = grading(sys->base.chords(), euler_class(sys->base));
        bool ok = true;
        for (Dir d : {Dir::Up, Dir::Down}) {
            if (has_pinwheel(*sys, d)) continue;
            ++free_cases;
            auto r = surgery(*sys, d);
            ok = ok && !is_zero(r) &&
                 (d == Dir::Up ? m_shifted(sys->base, diagram_of(r), opt.connector_shift)
                               : m_shifted(diagram_of(r), sys->base, opt.connector_shift)) == 1;
        }
        auto [it, fresh] = random_ok.emplace(g, ok);
        if (!fresh) it->second = it->second && ok;
    }
    for (const auto& [g, ok] : random_ok) rep.add({"random systems without pinwheels are tight", g.first, g.second, ok});
    rep.notes.push_back("random systems: " + std::to_string(drawn) + " drawn, " + std::to_string(free_cases) +
                        " pinwheel-free attachments, seed " + std::to_string(opt.seed));
    return rep;
}

Report stack_suite(const Bounds& b, int shift) {
    Report rep;
    for (int n = 1; n <= b.stack_n; ++n) {
        auto classes = by_euler(n);
        for (const auto& [e, ds] : classes) {
            bool agree = true, self = true, orth = true;
            for (const auto& a : ds) {
                self = self && m_shifted(a, a, shift) == 1;
                for (const auto& c : ds) agree = agree && m_shifted(a, c, shift) == m_algebraic(a, c);
                for (const auto& [f, other] : classes)
                    if (f != e)
                        for (const auto& c : other) orth = orth && m_shifted(a, c, shift) == 0;
            }
            auto [nm, np] = grading(n, e);
            rep.add({"geometric and algebraic stacking agree", nm, np, agree});
            rep.add({"a diagram stacks on itself", nm, np, self});
            rep.add({"different euler classes never stack", nm, np, orth});
        }
    }
    per_grading(rep, "stacking basis diagrams is the partial order", 0, b.stack_n - 1, [shift](int nm, int np) {
        auto ws = all_words(nm, np);
        for (const auto& x : ws)
            for (const auto& y : ws)
                if (m_shifted(basis_diagram(x), basis_diagram(y), shift) != (partial_leq(x, y) ? 1 : 0)) return false;
        return true;
    });
    per_class(rep, "bypass related diagrams stack in cyclic order", 2, b.direction_n, [shift](int, const std::vector<Diagram>& ds) {
        for (const auto& g : ds)
            for (const auto& info : find_attaching_arcs(g)) {
                if (info.cls != ArcClass::Nontrivial) continue;
                auto up = diagram_of(surgery(g, info.arc, Dir::Up));
                auto down = diagram_of(surgery(g, info.arc, Dir::Down));
                if (m_shifted(g, up, shift) != 1 || m_shifted(up, down, shift) != 1 || m_shifted(down, g, shift) != 1) return false;
                if (m_shifted(up, g, shift) != 0 || m_shifted(down, up, shift) != 0 || m_shifted(g, down, shift) != 0) return false;
            }
        return true;
    });
    per_class(rep, "stacking is invariant under rotation", 1, b.direction_n, [shift](int, const std::vector<Diagram>& ds) {
        for (const auto& x : ds)
            for (const auto& y : ds)
                if (m_shifted(rotate_points(x, kRotationStep), rotate_points(y, kRotationStep), shift) != m_shifted(x, y, shift))
                    return false;
        return true;
    });
    return rep;
}

Report category_suite(const Bounds& b) {
    Report rep;
    per_class(rep, "a diagram bounds the trivial category", 1, b.category_n, [](int, const std::vector<Diagram>& ds) {
        for (const auto& g : ds) {
            auto c = bounded_category(g, g);
            if (c.objects.size() != 1 || c.morphisms.size() != 1) return false;
        }
        return true;
    });
    per_grading(rep, "basis categories are word intervals", 0, b.category_n, [](int nm, int np) {
        for (const auto& [lo, hi] : comparable_pairs(nm, np)) {
            auto c = bounded_category(basis_diagram(lo), basis_diagram(hi));
            auto w = word_category(lo, hi);
            if (c.objects != w.objects || c.morphisms != w.morphisms || !poset_isomorphic(c, w)) return false;
            if (!c.reflexive || !c.transitive || !c.antisymmetric) return false;
        }
        return true;
    });
    per_class(rep, "bypass cobordism categories match the count formula", 2, b.cobordism_n, [](int, const std::vector<Diagram>& ds) {
        for (const auto& g : ds)
            for (const auto& info : find_attaching_arcs(g)) {
                if (info.cls != ArcClass::Nontrivial) continue;
                auto bc = bypass_cobordism_category(g, info.arc);
                auto w = word_category(block(false, bc.n_minus, bc.n_plus), block(true, bc.n_plus, bc.n_minus));
                if (!poset_isomorphic(bc.category, w)) return false;
            }
        return true;
    });
    return rep;
}

Report simplicial_suite(const Bounds& b) {
    Report rep;
    merge_into(rep, verify_simplicial_identities(b.simplicial_n));
    merge_into(rep, verify_double_complex(b.complex_n));
    merge_into(rep, verify_homology_trivial(b.complex_n, b.rank_n));
    return rep;
}

}  // namespace

std::optional<BypassSystem> random_system(std::mt19937_64& rng, int max_chords) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const int kind = pick(0, 2);
    try {
        if (kind == 1) {
            auto ws = all_words(pick(2, max_chords - 1));
            const Word w = ws[static_cast<std::size_t>(pick(0, static_cast<int>(ws.size()) - 1))];
            const bool fwd = pick(0, 1) == 1;
            std::vector<std::pair<int, int>> cand;
            for (int i = 1; i <= w.minus_count(); ++i)
                for (int j = 1; j <= w.plus_count(); ++j)
                    if (forward_move_defined(w, i, j) == fwd) cand.emplace_back(i, j);
            if (cand.empty()) return std::nullopt;
            std::shuffle(cand.begin(), cand.end(), rng);
            cand.resize(std::min<std::size_t>(cand.size(), static_cast<std::size_t>(pick(1, 3))));
            if (fwd) std::sort(cand.begin(), cand.end());
            else
                std::sort(cand.begin(), cand.end(), [](auto x, auto y) { return x.second != y.second ? x.second > y.second : x.first > y.first; });
            std::vector<GeneralisedArc> arcs;
            for (auto [i, j] : cand) arcs.push_back(generalised_arc(w, fwd ? MoveKind::FE : MoveKind::BE, i, j));
            return nicely_ordered_system(w, arcs);
        }
        auto ds = enumerate_diagrams(pick(2, max_chords));
        BypassSystem sys{ds[static_cast<std::size_t>(pick(0, static_cast<int>(ds.size()) - 1))], {}};
        auto arcs = find_attaching_arcs(sys.base);
        for (int k = 0; k <= (kind == 2 ? 1 : 0); ++k)
            sys.arcs.push_back(arcs[static_cast<std::size_t>(pick(0, static_cast<int>(arcs.size()) - 1))].arc);
        if (!realizable(sys)) return std::nullopt;
        return sys;
    } catch (const Error&) {
        return std::nullopt;
    }
}

Report run_verification(const VerifyOptions& opt) {
    const Bounds b = bounds(opt.level);
    std::vector<std::function<Report()>> suites{
        [&] { return diagram_suite(b); },
        [&] { return word_suite(b); },
        [&] { return sfh_suite(b); },
        [&] { return surgery_suite(b, opt); },
        [&] { return stack_suite(b, opt.connector_shift); },
        [&] { return category_suite(b); },
        [&] { return simplicial_suite(b); },
    };
    std::vector<Report> parts(suites.size());
    if (opt.parallel) {
        std::vector<std::future<Report>> fs;
        for (auto& s : suites) fs.push_back(std::async(std::launch::async, s));
        for (std::size_t i = 0; i < fs.size(); ++i) parts[i] = fs[i].get();
    } else {
        for (std::size_t i = 0; i < suites.size(); ++i) parts[i] = suites[i]();
    }
    Report out;
    for (const auto& p : parts) merge_into(out, p);
    return out;
}

}  // namespace sutura
