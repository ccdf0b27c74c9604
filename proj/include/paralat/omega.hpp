#pragma once

// Extremal-error constructions: explicit boundary lattice families and
// scans for large positive / very negative normalized errors E(N)/sqrt(N).

#include <cstdint>
#include <utility>
#include <vector>

#include "paralat/lattice.hpp"
#include "paralat/rational.hpp"

namespace paralat::omega {

// the 4M points (kM, +-(M^2 - k^2)), k = -M..M, all lying on the boundary
// of the dilation R = M^2 of P_2; sorted by (x, y)
std::vector<std::pair<long long, long long>> boundary_family_2d(long long M);

struct OmegaRecord {
    uint64_t N;
    Rat error;          // E(N), exact
    double normalized;  // E(N) / sqrt(N)
};

// odd squarefree N <= N_max, sorted ascending by normalized error, so the
// strongest negative excursions come first; ties broken by N
std::vector<OmegaRecord> omega_minus_scan(uint64_t N_max, int jobs = 1);

struct OmegaPlusResult {
    std::vector<OmegaRecord> records;  // N = M^2, normalized = E(M^2)/M = 2 + 1/(3M)
    std::vector<long long> skipped;    // M with a prime factor not = 1 mod 4
};

// the square-radius family: admissible M (every prime factor = 1 mod 4)
OmegaPlusResult omega_plus_family(long long M_max);

struct BoundaryGrowthRecord {
    long long R;
    i128 count;
    double ratio;  // count / R
};

// boundary lattice counts for the d = 3 paraboloid over Q1 at perfect-square
// radii; Q1 must be primitive integral binary, every R a perfect square
std::vector<BoundaryGrowthRecord> boundary_growth_3d(const lattice::RatQuadForm& Q1, const Rat& c,
                                                     const std::vector<long long>& R_list);

}  // namespace paralat::omega
