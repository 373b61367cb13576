#pragma once

#include "sutura/simplicial.hpp"
#include "sutura/stack.hpp"
#include "sutura/surgery.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace sutura {

enum class Level { Quick, Full };

struct VerifyOptions {
    Level level = Level::Quick;
    std::uint64_t seed = 0;
    int random_cases = 1000;
    int connector_shift = kConnectorShift;
    bool parallel = true;
};

// every property sweep, grouped by module; checks are reported per grading (n_minus, n_plus)
Report run_verification(const VerifyOptions& opt);

// a realizable system on at most max_chords chords; nullopt when the draw was unusable
std::optional<BypassSystem> random_system(std::mt19937_64& rng, int max_chords);

}  // namespace sutura
