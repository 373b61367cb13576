#include "sutura/error.hpp"
#include "sutura/sfh.hpp"
#include "sutura/simplicial.hpp"

#include <gtest/gtest.h>

using namespace sutura;

namespace {

void expect_clean(const Report& r) {
    for (const auto& f : r.failures) ADD_FAILURE() << f.name << " at (" << f.n_minus << "," << f.n_plus << ")";
    EXPECT_FALSE(r.checks.empty());
}

// delete the k-th sign s (0-based among signs s), or nothing
std::optional<Word> drop(const Word& w, bool s, int k) {
    std::string t = w.str();
    int seen = 0;
    for (std::size_t p = 0; p < t.size(); ++p)
        if ((t[p] == '+') == s && seen++ == k) {
            t.erase(p, 1);
            return Word::parse(t);
        }
    return std::nullopt;
}

}  // namespace

TEST(Simplicial, FaceExamples) {
    EXPECT_EQ(face(0, Side::West, Element{"-+"_w}), Element{"+"_w});
    EXPECT_TRUE(face(1, Side::West, Element{"-+"_w}).empty());
    EXPECT_EQ(boundary(Side::West, Element{"-+"_w}), Element{"+"_w});
    EXPECT_TRUE(boundary(Side::West, Element{"+-"_w}).empty());
    EXPECT_TRUE(boundary(Side::West, Element{"++"_w}).empty());
    EXPECT_THROW(face(2, Side::West, Element{"-+"_w}), Error);
    EXPECT_THROW(degeneracy(3, Side::East, Element{"-+"_w}), Error);
}

TEST(Simplicial, FacesDeleteSigns) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : all_words(n))
            for (Side side : {Side::West, Side::East}) {
                const bool s = side == Side::East;
                const int top = s ? w.plus_count() : w.minus_count();
                for (int i = 0; i < top; ++i) EXPECT_EQ(face(i, side, Element{w}), Element{*drop(w, s, i)});
                Element last = face(top, side, Element{w});
                if (w.plus(w.size() - 1) == s) EXPECT_EQ(last, Element{*drop(w, s, top - 1)});
                else EXPECT_TRUE(last.empty());
            }
}

TEST(Simplicial, FaceAfterDegeneracyIsIdentity) {
    for (int n = 0; n <= 6; ++n)
        for (const auto& w : all_words(n))
            for (Side side : {Side::West, Side::East}) {
                const int top = side == Side::West ? w.minus_count() : w.plus_count();
                for (int j = 0; j <= top; ++j) {
                    EXPECT_EQ(face(j, side, degeneracy(j, side, Element{w})), Element{w});
                    EXPECT_EQ(face(j + 1, side, degeneracy(j, side, Element{w})), Element{w});
                }
            }
}

TEST(Simplicial, Identities) { expect_clean(verify_simplicial_identities(6)); }

TEST(Simplicial, DoubleComplex) { expect_clean(verify_double_complex(8)); }

TEST(Simplicial, PartialDerivativeOnWordsEndingInPlus) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& w : all_words(n)) {
            if (!w.plus(n - 1)) continue;
            Element want;
            for (int k = 0; k < w.minus_count(); ++k) want.toggle(*drop(w, false, k));
            EXPECT_EQ(boundary(Side::West, Element{w}), want) << w.str();
        }
}

TEST(Simplicial, ChainHomotopy) {
    auto homotopic = [](Side side, const Word& w) {
        Element x{w};
        return homotopy(side, boundary(side, x)) + boundary(side, homotopy(side, x));
    };
    EXPECT_EQ(homotopic(Side::West, "+-"_w), Element{"+-"_w});
    EXPECT_EQ(boundary(Side::West, Element{"-+-"_w}), Element{"+-"_w});
    // the empty word is the one exception: its slot carries homology
    EXPECT_TRUE(homotopic(Side::West, Word{}).empty());
    EXPECT_TRUE(homotopic(Side::East, Word{}).empty());
    auto rep = verify_homology_trivial(8, 6);
    expect_clean(rep);
    EXPECT_EQ(rep.notes.size(), 2u);
}

TEST(Simplicial, Gf2Rank) {
    EXPECT_EQ(gf2_rank({}), 0u);
    EXPECT_EQ(gf2_rank({{0b011}, {0b110}, {0b101}}), 2u);
    EXPECT_EQ(gf2_rank({{0b001}, {0b010}, {0b100}}), 3u);
    std::vector<std::vector<std::uint64_t>> wide{{0, 1}, {1, 1}, {1, 0}};
    EXPECT_EQ(gf2_rank(wide), 2u);
}
