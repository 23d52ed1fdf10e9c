// Working-precision ladder and run configuration.
#pragma once

#include <array>
#include <vector>

#include "anaring/rational.hpp"

namespace anaring {

// Fixed ladder; tri-state operations escalate through it before reporting
// Undecidable so behavior is reproducible across runs and platforms.
inline constexpr std::array<int, 5> kPrecisionLadder = {53, 128, 256, 512, 1024};

struct Config {
    int precision_start = 53;
    int precision_cap = 1024;
    Rational tolerance = Rational(mpz_class(1), mpz_class(1) << 53);  // isolation width
    int mult_cap = 16;

    // Ladder slice [start, cap].
    std::vector<int> ladder() const {
        std::vector<int> out;
        for (int p : kPrecisionLadder)
            if (p >= precision_start && p <= precision_cap) out.push_back(p);
        if (out.empty()) out.push_back(precision_start);
        return out;
    }
};

}  // namespace anaring
