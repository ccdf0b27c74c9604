#pragma once

// Closed-form error term for the model parabola region P_2 at odd R = N:
//   N(N) = (8/3) N^2 + E(N),
//   E(N) = 1/3 + 2 sqrt(N*) - 4 sum_{d | N, d = 3 mod 4} Lr(d)
// where N* is the greatest square divisor of N and Lr(d) is the exact
// rational part of L(1, chi_{-d}), i.e. L = Lr(d) pi / sqrt(d).  Since N* is
// a perfect square, E(N) is an exact rational with 3 E(N) an integer.
//
// Shortcut evaluations:
//   - every prime factor of N is 1 mod 4:  E = 1/3 + 2 sqrt(N*)
//   - N odd squarefree:  E = 7/3 - 4 sum_{d | N, d = 3 mod 4} w_d h(-d),
//     with w_3 = 1/3 and w_d = 1 otherwise

#include <cstdint>
#include <vector>

#include "paralat/rational.hpp"

namespace paralat::formula {

// exact E(N); N odd, 1 <= N <= 1e7
Rat error_term_exact(uint64_t N);

// E(N) when all prime factors of N are 1 mod 4; throws naming the first
// offending prime otherwise
Rat error_term_cor_4k1(uint64_t N);

// E(N) for odd squarefree N via class numbers
Rat error_term_cor_sqfree(uint64_t N);

struct FormulaMismatch {
    uint64_t N;
    Rat formula_value;  // (8/3) N^2 + E(N)
    i128 count;         // direct lattice count
};

// compares the closed form against the direct count for every odd N <= N_max;
// exact comparison, so any nonempty result is a genuine disagreement
std::vector<FormulaMismatch> verify_formula_range(uint64_t N_max, int jobs = 1);

}  // namespace paralat::formula
