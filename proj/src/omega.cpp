#include "paralat/omega.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "paralat/arith.hpp"
#include "paralat/dirichlet.hpp"
#include "paralat/formula.hpp"
#include "paralat/parallel.hpp"

namespace paralat::omega {

std::vector<std::pair<long long, long long>> boundary_family_2d(long long M) {
    if (M < 1 || M > 1'000'000)
        throw std::invalid_argument("boundary_family_2d: M must be in [1, 1e6]");
    std::vector<std::pair<long long, long long>> pts;
    pts.reserve((size_t)(4 * M));
    for (long long k = -M; k <= M; ++k) {
        long long y = M * M - k * k;
        pts.push_back({k * M, y});
        if (y != 0) pts.push_back({k * M, -y});
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<OmegaRecord> omega_minus_scan(uint64_t N_max, int jobs) {
    if (N_max < 1 || N_max > 1'000'000)
        throw std::invalid_argument("omega_minus_scan: N_max must be in [1, 1e6]");
    std::vector<uint64_t> Ns;
    for (uint64_t N = 1; N <= N_max; N += 2) Ns.push_back(N);

    std::vector<char> keep(Ns.size(), 0);
    std::vector<Rat> errs(Ns.size());

    parallel_workers(jobs, [&](int t, int nt) {
        std::unordered_map<uint64_t, long long> hcache;  // per-worker h(-d) memo
        for (size_t i = (size_t)t; i < Ns.size(); i += (size_t)nt) {
            uint64_t N = Ns[i];
            bool squarefree = true;
            for (const auto& [p, e] : arith::factorize(N)) {
                (void)p;
                if (e > 1) {
                    squarefree = false;
                    break;
                }
            }
            if (!squarefree) continue;
            // E(N) = 7/3 - 4 sum_{d | N, d = 3 mod 4} w_d h(-d), w_3 = 1/3
            Rat E(7, 3);
            for (uint64_t d : arith::divisors_congruent(N, 3, 4)) {
                long long h;
                auto it = hcache.find(d);
                if (it != hcache.end()) {
                    h = it->second;
                } else {
                    h = dirichlet::class_number(d);
                    hcache.emplace(d, h);
                }
                Rat wd = (d == 3) ? Rat(1, 3) : Rat(1);
                E -= Rat(4) * wd * Rat(h);
            }
            keep[i] = 1;
            errs[i] = E;
        }
    });

    std::vector<OmegaRecord> out;
    for (size_t i = 0; i < Ns.size(); ++i) {
        if (!keep[i]) continue;
        double norm = errs[i].to_double() / std::sqrt((double)Ns[i]);
        out.push_back({Ns[i], errs[i], norm});
    }
    std::sort(out.begin(), out.end(), [](const OmegaRecord& a, const OmegaRecord& b) {
        if (a.normalized != b.normalized) return a.normalized < b.normalized;
        return a.N < b.N;
    });
    return out;
}

OmegaPlusResult omega_plus_family(long long M_max) {
    if (M_max < 1 || M_max > 3000)
        throw std::invalid_argument("omega_plus_family: M_max must be in [1, 3000]");
    OmegaPlusResult res;
    for (long long M = 1; M <= M_max; ++M) {
        bool admissible = true;
        for (const auto& [p, e] : arith::factorize((uint64_t)M)) {
            (void)e;
            if (p % 4 != 1) {
                admissible = false;
                break;
            }
        }
        if (!admissible) {
            res.skipped.push_back(M);
            continue;
        }
        uint64_t N = (uint64_t)M * (uint64_t)M;
        Rat E = formula::error_term_cor_4k1(N);
        res.records.push_back({N, E, E.to_double() / (double)M});
    }
    return res;
}

std::vector<BoundaryGrowthRecord> boundary_growth_3d(const lattice::RatQuadForm& Q1, const Rat& c,
                                                     const std::vector<long long>& R_list) {
    long long a, b, cc;
    if (!Q1.integral_binary(&a, &b, &cc))
        throw std::invalid_argument("boundary_growth_3d: Q1 must be integral binary");
    if (std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(cc)) != 1)
        throw std::invalid_argument("boundary_growth_3d: Q1 must be primitive");
    for (long long R : R_list) {
        i128 r;
        if (R < 1 || !is_square128(R, &r))
            throw std::invalid_argument("boundary_growth_3d: non-square radius " + std::to_string(R) +
                                        " rejected");
    }
    lattice::ParaboloidSpec spec = lattice::ParaboloidSpec::centered(3, Q1, c);
    std::vector<BoundaryGrowthRecord> out;
    out.reserve(R_list.size());
    for (long long R : R_list) {
        i128 cnt = lattice::boundary_count(spec, R);
        out.push_back({R, cnt, (double)((long double)cnt / (long double)R)});
    }
    return out;
}

}  // namespace paralat::omega
