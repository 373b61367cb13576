#include "sutura/io.hpp"
#include "sutura/verify.hpp"

#include <gtest/gtest.h>

using namespace sutura;

TEST(Verify, QuickSweepPasses) {
    auto rep = run_verification({});
    for (const auto& f : rep.failures) ADD_FAILURE() << f.name << " (" << f.n_minus << "," << f.n_plus << ")";
    EXPECT_GT(rep.checks.size(), 100u);
}

TEST(Verify, ParallelAndSequentialAgree) {
    VerifyOptions a, b;
    a.random_cases = b.random_cases = 200;
    b.parallel = false;
    EXPECT_EQ(io::to_json(run_verification(a)).dump(), io::to_json(run_verification(b)).dump());
}

TEST(Verify, WrongConnectorShiftIsCaught) {
    VerifyOptions opt;
    opt.connector_shift = -kConnectorShift;
    opt.random_cases = 200;
    auto rep = run_verification(opt);
    bool stacking = false;
    for (const auto& f : rep.failures) stacking = stacking || f.name == "geometric and algebraic stacking agree";
    EXPECT_TRUE(stacking);
}

TEST(Verify, RandomSystemsFollowTheSeed) {
    std::mt19937_64 a(7), b(7);
    int made = 0;
    for (int i = 0; i < 50; ++i) {
        auto x = random_system(a, 6), y = random_system(b, 6);
        ASSERT_EQ(x.has_value(), y.has_value());
        if (!x) continue;
        ++made;
        EXPECT_EQ(io::to_json(*x), io::to_json(*y));
        EXPECT_TRUE(realizable(*x));
        EXPECT_LE(x->base.chords(), 6);
    }
    EXPECT_GT(made, 10);
}
