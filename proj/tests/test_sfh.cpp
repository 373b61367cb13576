#include "sutura/error.hpp"
#include "sutura/sfh.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace sutura;

namespace {

std::vector<GradedOperator> ops_for(const Word& w) {
    std::vector<GradedOperator> out{{OpKind::BPlus}, {OpKind::BMinus}, {OpKind::APlus}, {OpKind::AMinus}};
    for (int i = 0; i <= w.minus_count(); ++i) {
        out.push_back({OpKind::BMinusWest, i});
        out.push_back({OpKind::APlusWest, i});
    }
    for (int j = 0; j <= w.plus_count(); ++j) {
        out.push_back({OpKind::BPlusEast, j});
        out.push_back({OpKind::AMinusEast, j});
    }
    return out;
}

BitMatrix rows(std::initializer_list<const char*> rs) {
    BitMatrix m;
    for (const char* r : rs) {
        std::vector<std::uint8_t> row;
        for (const char* c = r; *c; ++c) row.push_back(*c == '1');
        m.push_back(row);
    }
    return m;
}

}  // namespace

TEST(Sfh, BasisDiagramExamples) {
    EXPECT_EQ(basis_diagram("-+"_w), Diagram::from_pairs({{5, 0}, {4, 1}, {2, 3}}));
    EXPECT_EQ(basis_diagram("-+-++"_w), Diagram::from_pairs({{11, 0}, {10, 1}, {9, 2}, {8, 3}, {4, 5}, {6, 7}}));
    EXPECT_EQ(basis_diagram(Word{}), Diagram{});
}

TEST(Sfh, RootConstructionAgrees) {
    for (int n = 0; n <= 8; ++n)
        for (const auto& w : all_words(n)) EXPECT_EQ(basis_diagram_from_root(w), basis_diagram(w)) << w.str();
}

TEST(Sfh, BasisDiagramsDecomposeToThemselves) {
    for (int n = 0; n <= 8; ++n)
        for (const auto& w : all_words(n)) {
            auto g = basis_diagram(w);
            EXPECT_EQ(decompose(g), Element{w}) << w.str();
            EXPECT_EQ(decompose_from_root(g), Element{w}) << w.str();
            EXPECT_EQ(euler_class(g), w.euler());
            EXPECT_TRUE(is_basis(g));
        }
}

TEST(Sfh, BothDecompositionsAgree) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_diagrams(n)) EXPECT_EQ(decompose(g), decompose_from_root(g)) << g.str();
}

TEST(Sfh, PhiIsABijectionOntoComparablePairs) {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::pair<Word, Word>> seen;
        int basis = 0;
        for (const auto& g : enumerate_diagrams(n)) {
            auto x = decompose(g);
            ASSERT_FALSE(x.empty());
            auto [lo, hi] = phi(g);
            EXPECT_TRUE(partial_leq(lo, hi));
            for (const auto& w : x) {
                EXPECT_TRUE(partial_leq(lo, w));
                EXPECT_TRUE(partial_leq(w, hi));
            }
            seen.insert({lo, hi});
            basis += is_basis(g);
        }
        EXPECT_EQ(static_cast<long long>(seen.size()), catalan(n));
        EXPECT_EQ(basis, 1 << (n - 1));
    }
    EXPECT_THROW(phi(Zero{}), Error);
}

TEST(Sfh, WordOperatorsMatchDiagramOperators) {
    for (int n = 0; n <= 5; ++n)
        for (const auto& w : all_words(n))
            for (const auto& op : ops_for(w)) {
                auto g = apply_operator(op, basis_diagram(w));
                EXPECT_EQ(decompose(g), apply_operator(op, Element{w})) << op.name() << " on " << w.str();
            }
}

TEST(Sfh, OperatorRelations) {
    for (int n = 0; n <= 5; ++n)
        for (const auto& w : all_words(n)) {
            Element x{w};
            EXPECT_EQ(apply_operator({OpKind::APlus}, apply_operator({OpKind::BMinus}, x)), x);
            EXPECT_EQ(apply_operator({OpKind::AMinus}, apply_operator({OpKind::BPlus}, x)), x);
            EXPECT_TRUE(apply_operator({OpKind::APlus}, apply_operator({OpKind::BPlus}, x)).empty());
            EXPECT_TRUE(apply_operator({OpKind::AMinus}, apply_operator({OpKind::BMinus}, x)).empty());
        }
    EXPECT_THROW(apply_operator({OpKind::BMinusWest, 3}, Element{"-+"_w}), Error);
}

TEST(Sfh, MergeOfBasisElements) {
    for (int n1 = 0; n1 <= 3; ++n1)
        for (int n2 = 0; n2 <= 3; ++n2)
            for (const auto& a : all_words(n1))
                for (const auto& b : all_words(n2)) {
                    auto got = merge_elements(Element{a}, Element{b});
                    EXPECT_EQ(got, decompose(merge(basis_diagram(a), basis_diagram(b))));
                }
    for (const auto& w : all_words(3)) {
        EXPECT_EQ(merge_elements(std::nullopt, Element{w}), Element{w.prepend(true)});
        EXPECT_EQ(merge_elements(Element{w}, std::nullopt), Element{w.prepend(false)});
    }
    EXPECT_EQ(merge_elements(std::nullopt, std::nullopt), Element{Word{}});
}

TEST(Sfh, RotationSmallCases) {
    EXPECT_EQ(rotation(Element{"-+"_w}), Element{"+-"_w});
    EXPECT_EQ(rotation(Element{"+-"_w}), (Element{"-+"_w, "+-"_w}));
    EXPECT_EQ(rotation_matrix(2, 1), rows({"01", "11"}));
    EXPECT_EQ(rotation_matrix(3, 1), rows({"010", "001", "111"}));
    EXPECT_EQ(rotation_matrix(3, 2), rows({"010", "001", "111"}));
    EXPECT_EQ(rotation_matrix(4, 1), rows({"0100", "0010", "0001", "1111"}));
    EXPECT_EQ(rotation_matrix(4, 3), rotation_matrix(4, 1));
    auto r53 = rows({"0100000000", "0000010000", "0000001000", "0000111000", "0010010000", "0000000010",
                     "0000000110", "0001001010", "0000000001", "1111111111"});
    EXPECT_EQ(rotation_matrix(5, 3), r53);
    EXPECT_NE(rotation_matrix(5, 2), r53);
}

TEST(Sfh, RotationImplementationsAgree) {
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            auto g = rotation_matrix(n, k, RotationImpl::Geometric);
            EXPECT_EQ(rotation_matrix(n, k, RotationImpl::Minors), g) << n << "," << k;
            EXPECT_EQ(rotation_matrix(n, k, RotationImpl::Explicit), g) << n << "," << k;
        }
}

TEST(Sfh, RotationHasOrderNPlusOne) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : all_words(n)) {
            Element x{w};
            for (int t = 0; t <= n; ++t) x = rotation(x);
            EXPECT_EQ(x, Element{w});
        }
}

TEST(Sfh, AnatomyRegions) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : all_words(n)) {
            auto a = anatomy(w);
            auto rs = regions(a.diagram);
            std::set<int> base, root;
            for (int r : a.base_minus_region) EXPECT_EQ(rs[static_cast<std::size_t>(r)].sign, -1);
            for (int r : a.base_plus_region) EXPECT_EQ(rs[static_cast<std::size_t>(r)].sign, 1);
            for (int r : a.root_minus_region) EXPECT_EQ(rs[static_cast<std::size_t>(r)].sign, -1);
            for (int r : a.root_plus_region) EXPECT_EQ(rs[static_cast<std::size_t>(r)].sign, 1);
            base.insert(a.base_minus_region.begin(), a.base_minus_region.end());
            base.insert(a.base_plus_region.begin(), a.base_plus_region.end());
            root.insert(a.root_minus_region.begin(), a.root_minus_region.end());
            root.insert(a.root_plus_region.begin(), a.root_plus_region.end());
            EXPECT_EQ(static_cast<int>(base.size()), n);
            EXPECT_EQ(static_cast<int>(root.size()), n);
            std::set<int> steps(a.created.begin(), a.created.end());
            EXPECT_EQ(static_cast<int>(steps.size()), n + 1);
        }
}

TEST(Sfh, SixDiagramsOfFourChords) {
    std::multiset<std::vector<Word>> got, want{{"--+"_w}, {"-+-"_w}, {"+--"_w}, {"--+"_w, "-+-"_w},
                                               {"--+"_w, "+--"_w}, {"-+-"_w, "+--"_w}};
    for (const auto& g : enumerate_diagrams(4, -1)) got.insert(decompose(g).words());
    EXPECT_EQ(got, want);
    EXPECT_EQ(decompose(Diagram{}), Element{Word{}});
    EXPECT_TRUE(decompose(Zero{}).empty());
}

TEST(Sfh, DecompositionIsInjectiveAndEven) {
    for (int n = 1; n <= 7; ++n) {
        std::set<Element, decltype([](const Element& a, const Element& b) { return a.words() < b.words(); })> seen;
        for (const auto& g : enumerate_diagrams(n)) {
            auto x = decompose(g);
            EXPECT_FALSE(x.empty());
            EXPECT_TRUE(seen.insert(x).second) << g.str();
            if (!is_basis(g)) EXPECT_EQ(x.size() % 2, 0u) << g.str();
        }
    }
}

TEST(Sfh, Tangledness) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_diagrams(n)) {
            auto x = decompose(g);
            if (x.size() == 1) continue;
            auto [lo, hi] = phi(g);
            for (const auto& w : x) {
                int below = 0, above = 0;
                for (const auto& v : x) {
                    below += partial_leq(v, w);
                    above += partial_leq(w, v);
                }
                bool all = below + above == static_cast<int>(x.size()) + 1;
                if (w == lo || w == hi) {
                    EXPECT_TRUE(all);
                } else {
                    EXPECT_EQ(below % 2, 0) << g.str() << " " << w.str();
                    EXPECT_EQ(above % 2, 0) << g.str() << " " << w.str();
                    EXPECT_FALSE(all);
                }
            }
        }
}

TEST(Sfh, OutermostChordsAtBaseAndRoot) {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : enumerate_diagrams(n)) {
            auto x = decompose(g);
            auto [lo, hi] = phi(g);
            const int pts = g.points(), root = root_point(n, euler_class(g));
            auto all_start = [&](bool s) {
                return std::all_of(x.begin(), x.end(), [&](const Word& w) { return w.plus(0) == s; });
            };
            auto all_end = [&](bool s) {
                return std::all_of(x.begin(), x.end(), [&](const Word& w) { return w.plus(w.size() - 1) == s; });
            };
            bool plus_base = g.mate(0) == 1, minus_base = g.mate(0) == pts - 1;
            EXPECT_EQ(plus_base, all_start(true));
            EXPECT_EQ(plus_base, lo.plus(0) && hi.plus(0));
            EXPECT_EQ(minus_base, all_start(false));
            EXPECT_EQ(minus_base, !lo.plus(0) && !hi.plus(0));
            bool plus_root = g.mate(g.wrap(root - 1)) == root, minus_root = g.mate(root) == g.wrap(root + 1);
            EXPECT_EQ(plus_root, all_end(true)) << g.str();
            EXPECT_EQ(minus_root, all_end(false)) << g.str();
        }
}

TEST(Sfh, DirectSumOfCreationImages) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& w : all_words(n)) {
            Element x{w};
            bool via_plus = apply_operator({OpKind::BPlus}, apply_operator({OpKind::AMinus}, x)) == x;
            bool via_minus = apply_operator({OpKind::BMinus}, apply_operator({OpKind::APlus}, x)) == x;
            EXPECT_NE(via_plus, via_minus) << w.str();
        }
}

TEST(Sfh, MergeImagesAreDisjoint) {
    auto side = [](int c) {
        std::vector<std::optional<Diagram>> out;
        if (c == 0) out.emplace_back(std::nullopt);
        else
            for (const auto& g : enumerate_diagrams(c)) out.emplace_back(g);
        return out;
    };
    for (int total = 1; total <= 5; ++total) {
        std::map<std::vector<Word>, std::pair<int, int>> owner;
        for (int n1 = 0; n1 < total; ++n1)
            for (const auto& a : side(n1))
                for (const auto& b : side(total - 1 - n1)) {
                    auto x = merge_elements(a ? std::optional(decompose(*a)) : std::nullopt,
                                            b ? std::optional(decompose(*b)) : std::nullopt);
                    EXPECT_EQ(x, decompose(merge(a, b)));
                    const int e = (a ? euler_class(*a) : 1) + (b ? euler_class(*b) : -1);
                    EXPECT_EQ(x.front().euler(), e);
                    EXPECT_TRUE(owner.emplace(x.words(), std::pair(n1, e)).second);
                }
        EXPECT_EQ(static_cast<long long>(owner.size()), catalan(total));
    }
}
