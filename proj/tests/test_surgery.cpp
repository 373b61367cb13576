#include "sutura/error.hpp"
#include "sutura/sfh.hpp"
#include "sutura/surgery.hpp"

#include <gtest/gtest.h>

using namespace sutura;

namespace {

Element dec(const DiagramOrZero& d) { return decompose(d); }

std::vector<ArcInfo> nontrivial(const Diagram& g) {
    std::vector<ArcInfo> out;
    for (auto& a : find_attaching_arcs(g))
        if (a.cls == ArcClass::Nontrivial) out.push_back(a);
    return out;
}

int adjacent_block_moves(const Word& w, bool forwards) {
    // a*b for every adjacent pair of blocks -^a +^b (or +^b -^a)
    std::vector<std::pair<bool, int>> blocks;
    for (int p = 0; p < w.size(); ++p) {
        if (blocks.empty() || blocks.back().first != w.plus(p)) blocks.emplace_back(w.plus(p), 0);
        ++blocks.back().second;
    }
    int total = 0;
    for (std::size_t k = 0; k + 1 < blocks.size(); ++k)
        if (blocks[k].first != forwards) total += blocks[k].second * blocks[k + 1].second;
    return total;
}

}  // namespace

TEST(Surgery, SimplestTriple) {
    auto g = basis_diagram("-+"_w);
    auto arcs = nontrivial(g);
    ASSERT_EQ(arcs.size(), 1u);
    auto t = bypass_triple(g, arcs[0].arc);
    EXPECT_NE(t[0], t[1]);
    EXPECT_NE(t[1], t[2]);
    EXPECT_NE(t[0], t[2]);
    EXPECT_EQ(t[1], basis_diagram("+-"_w));
    EXPECT_TRUE((dec(t[0]) + dec(t[1]) + dec(t[2])).empty());
}

TEST(Surgery, VacuumHasOnlySupertrivialArcs) {
    for (const auto& a : find_attaching_arcs(Diagram{})) EXPECT_EQ(a.cls, ArcClass::Supertrivial);
    EXPECT_FALSE(find_attaching_arcs(Diagram{}).empty());
}

TEST(Surgery, TriplesSumToZero) {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : enumerate_diagrams(n))
            for (const auto& a : nontrivial(g)) {
                auto t = bypass_triple(g, a.arc);
                EXPECT_NE(t[0], t[1]);
                EXPECT_NE(t[1], t[2]);
                EXPECT_NE(t[0], t[2]);
                EXPECT_EQ(euler_class(t[1]), euler_class(g));
                EXPECT_EQ(euler_class(t[2]), euler_class(g));
                EXPECT_TRUE((dec(t[0]) + dec(t[1]) + dec(t[2])).empty()) << g.str();
            }
}

TEST(Surgery, CoArcReturns) {
    for (int n = 2; n <= 5; ++n)
        for (const auto& g : enumerate_diagrams(n))
            for (const auto& a : nontrivial(g)) {
                auto up = diagram_of(surgery(g, a.arc, Dir::Up));
                auto down = diagram_of(surgery(g, a.arc, Dir::Down));
                bool found = false;
                for (const auto& b : nontrivial(up)) {
                    auto back = surgery(up, b.arc, Dir::Down);
                    auto on = surgery(up, b.arc, Dir::Up);
                    if (!is_zero(back) && diagram_of(back) == g && !is_zero(on) && diagram_of(on) == down) found = true;
                }
                EXPECT_TRUE(found) << g.str();
            }
}

TEST(Surgery, TrivialArcsVanishOneWay) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : enumerate_diagrams(n))
            for (const auto& a : find_attaching_arcs(g)) {
                if (a.cls == ArcClass::Nontrivial) continue;
                auto up = surgery(g, a.arc, Dir::Up), down = surgery(g, a.arc, Dir::Down);
                ASSERT_TRUE(a.vanishes.has_value()) << g.str();
                auto kept = *a.vanishes == Dir::Up ? down : up;
                ASSERT_FALSE(is_zero(kept));
                EXPECT_EQ(diagram_of(kept), g);
                EXPECT_EQ(has_pinwheel({g, {a.arc}}, Dir::Up), is_zero(up));
                EXPECT_EQ(has_pinwheel({g, {a.arc}}, Dir::Down), is_zero(down));
            }
}

TEST(Surgery, BoundaryArcMatchesLocalRewrite) {
    for (int n = 2; n <= 5; ++n)
        for (const auto& g : enumerate_diagrams(n))
            for (int y = 0; y < g.points(); ++y) {
                if (g.mate(y) == g.wrap(y - 1) || g.mate(y) == g.wrap(y + 1)) continue;
                auto [a, b] = boundary_bypass(g, y);
                auto c = boundary_arc(g, y);
                auto up = diagram_of(surgery(g, c, Dir::Up)), down = diagram_of(surgery(g, c, Dir::Down));
                EXPECT_TRUE((up == a && down == b) || (up == b && down == a)) << g.str() << " at " << y;
            }
}

TEST(Surgery, ArcsMatchElementaryMoves) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_words(n)) {
            auto g = basis_diagram(w);
            int fwd = 0, bwd = 0;
            for (const auto& a : find_attaching_arcs(g, w)) {
                if (a.cls != ArcClass::Nontrivial) continue;
                ASSERT_TRUE(a.forwards.has_value());
                (*a.forwards ? fwd : bwd)++;
            }
            EXPECT_EQ(fwd, adjacent_block_moves(w, true)) << w.str();
            EXPECT_EQ(bwd, adjacent_block_moves(w, false)) << w.str();
        }
}

TEST(Surgery, GeneralisedArcsRealiseMoves) {
    for (int n = 2; n <= 6; ++n)
        for (const auto& w : all_words(n))
            for (int i = 1; i <= w.minus_count(); ++i)
                for (int j = 1; j <= w.plus_count(); ++j) {
                    bool fwd = forward_move_defined(w, i, j);
                    auto kind = fwd ? MoveKind::FE : MoveKind::BE;
                    auto sys = arc_to_system(generalised_arc(w, kind, i, j));
                    auto got = surgery(sys, fwd ? Dir::Up : Dir::Down);
                    ASSERT_FALSE(is_zero(got)) << w.str() << " " << i << "," << j;
                    EXPECT_EQ(diagram_of(got), basis_diagram(elementary_move(w, kind, i, j)))
                        << w.str() << (fwd ? " FE" : " BE") << i << "," << j;
                    EXPECT_THROW(generalised_arc(w, fwd ? MoveKind::BE : MoveKind::FE, i, j), Error);
                }
}

TEST(Surgery, WordExamples) {
    EXPECT_EQ(elementary_move("---++++"_w, MoveKind::FE, 3, 2), "--++-++"_w);
    EXPECT_EQ(elementary_move("---++++"_w, MoveKind::FE, 2, 2), "-++--++"_w);
    EXPECT_EQ(elementary_move("--++--++"_w, MoveKind::FE, 1, 4), "++++----"_w);
    auto sys = arc_to_system(generalised_arc("--++--++"_w, MoveKind::FE, 1, 4));
    EXPECT_EQ(diagram_of(surgery(sys, Dir::Up)), basis_diagram("++++----"_w));
}

TEST(Surgery, NicelyOrderedPair) {
    Word w = "--++--++"_w;
    auto sys = nicely_ordered_system(w, {generalised_arc(w, MoveKind::FE, 2, 2), generalised_arc(w, MoveKind::FE, 4, 4)});
    EXPECT_EQ(diagram_of(surgery(sys, Dir::Up)), basis_diagram("-++--++-"_w));
    EXPECT_THROW(nicely_ordered_system(w, {generalised_arc(w, MoveKind::FE, 4, 4), generalised_arc(w, MoveKind::FE, 2, 2)}),
                 Error);
}

TEST(Surgery, PairSystems) {
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& [lo, hi] : comparable_pairs(n - k, k)) {
                auto lo_g = basis_diagram(lo), hi_g = basis_diagram(hi);
                auto c = cfbs(lo, hi);
                EXPECT_EQ(diagram_of(surgery(c, Dir::Up)), hi_g) << lo.str() << " " << hi.str();
                auto f = fbs(lo, hi);
                EXPECT_EQ(diagram_of(surgery(f, Dir::Up)), hi_g);
                for (std::size_t drop = 0; drop < f.arcs.size(); ++drop) {
                    auto sub = f;
                    sub.arcs.erase(sub.arcs.begin() + static_cast<std::ptrdiff_t>(drop));
                    auto r = surgery(sub, Dir::Up);
                    EXPECT_TRUE(is_zero(r) || diagram_of(r) != hi_g);
                }
                auto b = cbbs(lo, hi);
                EXPECT_EQ(diagram_of(surgery(b, Dir::Down)), lo_g) << lo.str() << " " << hi.str();
                auto from_down = surgery(f, Dir::Down);
                auto from_up = surgery(bbs(lo, hi), Dir::Up);
                ASSERT_FALSE(is_zero(from_down));
                EXPECT_EQ(phi(from_down), std::pair(lo, hi));
                EXPECT_EQ(from_up, from_down) << lo.str() << " " << hi.str();
                EXPECT_EQ(from_pair(lo, hi), diagram_of(from_down));
                EXPECT_FALSE(has_pinwheel(f, Dir::Up));
                EXPECT_FALSE(has_pinwheel(f, Dir::Down));
            }
    EXPECT_TRUE(fbs("-+"_w, "-+"_w).arcs.empty());
    EXPECT_THROW(cfbs("+-"_w, "-+"_w), Error);
}

TEST(Surgery, FromPairExamples) {
    EXPECT_EQ(decompose(from_pair("--++"_w, "+-+-"_w)), (Element{"--++"_w, "-++-"_w, "+--+"_w, "+-+-"_w}));
    for (const auto& w : all_words(4)) EXPECT_EQ(from_pair(w, w), basis_diagram(w));
}

TEST(Surgery, ExpandDownOverUp) {
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& [lo, hi] : comparable_pairs(n - k, k)) {
                auto f = fbs(lo, hi);
                Element sum;
                for (const auto& [d, one] : expand_subsets(f, Dir::Down)) sum += decompose(d);
                EXPECT_EQ(sum, decompose(surgery(f, Dir::Down)));
            }
    auto g = basis_diagram("-+"_w);
    EXPECT_EQ(expand_subsets({g, {}}, Dir::Down).size(), 1u);
}

TEST(Surgery, StabilityOfForwardsSubsets) {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& [lo, hi] : comparable_pairs(n - k, k)) {
                auto c = cfbs(lo, hi);
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.arcs.size()); ++mask) {
                    auto r = surgery(subsystem(c, mask), Dir::Up);
                    ASSERT_FALSE(is_zero(r));
                    EXPECT_TRUE(is_basis(diagram_of(r)));
                }
            }
}
