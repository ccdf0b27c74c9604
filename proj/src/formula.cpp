#include "paralat/formula.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "paralat/arith.hpp"
#include "paralat/dirichlet.hpp"
#include "paralat/lattice.hpp"
#include "paralat/parallel.hpp"

namespace paralat::formula {

namespace {

void require_odd(uint64_t N, const char* fn) {
    if (N == 0 || N % 2 == 0)
        throw std::invalid_argument(std::string(fn) + ": N must be odd and >= 1");
    if (N > 10'000'000) throw std::invalid_argument(std::string(fn) + ": N must be <= 1e7");
}

Rat error_term_exact_impl(uint64_t N, std::unordered_map<uint64_t, Rat>* cache) {
    require_odd(N, "error_term_exact");
    uint64_t nstar = arith::greatest_square_divisor(N);
    Rat E = Rat(1, 3) + Rat(2 * (long long)isqrt64(nstar));
    for (uint64_t d : arith::divisors_congruent(N, 3, 4)) {
        Rat lr;
        if (cache) {
            auto it = cache->find(d);
            if (it != cache->end()) {
                lr = it->second;
            } else {
                lr = dirichlet::l_value(d).rational_part;
                cache->emplace(d, lr);
            }
        } else {
            lr = dirichlet::l_value(d).rational_part;
        }
        E -= Rat(4) * lr;
    }
    return E;
}

}  // namespace

Rat error_term_exact(uint64_t N) { return error_term_exact_impl(N, nullptr); }

Rat error_term_cor_4k1(uint64_t N) {
    require_odd(N, "error_term_cor_4k1");
    for (const auto& [p, e] : arith::factorize(N)) {
        (void)e;
        if (p % 4 != 1)
            throw std::invalid_argument("error_term_cor_4k1: prime " + std::to_string(p) +
                                        " = 3 mod 4 divides N");
    }
    uint64_t nstar = arith::greatest_square_divisor(N);
    return Rat(1, 3) + Rat(2 * (long long)isqrt64(nstar));
}

Rat error_term_cor_sqfree(uint64_t N) {
    require_odd(N, "error_term_cor_sqfree");
    for (const auto& [p, e] : arith::factorize(N)) {
        (void)p;
        if (e > 1)
            throw std::invalid_argument("error_term_cor_sqfree: N must be squarefree, got " +
                                        std::to_string(N));
    }
    Rat E(7, 3);
    for (uint64_t d : arith::divisors_congruent(N, 3, 4)) {
        if (d == 1) continue;  // cannot happen (1 = 1 mod 4); kept for clarity of the d > 1 sum
        Rat wd = (d == 3) ? Rat(1, 3) : Rat(1);
        E -= Rat(4) * wd * Rat(dirichlet::class_number(d));
    }
    return E;
}

std::vector<FormulaMismatch> verify_formula_range(uint64_t N_max, int jobs) {
    if (N_max < 1 || N_max > 100'000)
        throw std::invalid_argument("verify_formula_range: N_max must be in [1, 1e5]");
    std::vector<uint64_t> Ns;
    for (uint64_t N = 1; N <= N_max; N += 2) Ns.push_back(N);

    std::vector<char> bad(Ns.size(), 0);
    std::vector<Rat> fvals(Ns.size());
    std::vector<i128> counts(Ns.size());

    parallel_workers(jobs, [&](int t, int nt) {
        std::unordered_map<uint64_t, Rat> cache;  // per-worker L-value memo
        for (size_t i = (size_t)t; i < Ns.size(); i += (size_t)nt) {
            uint64_t N = Ns[i];
            Rat F = Rat(8, 3) * Rat((long long)N) * Rat((long long)N) +
                    error_term_exact_impl(N, &cache);
            i128 cnt = lattice::count_parabola_2d(Rat((long long)N));
            if (F != Rat(cnt)) {
                bad[i] = 1;
                fvals[i] = F;
                counts[i] = cnt;
            }
        }
    });

    std::vector<FormulaMismatch> out;
    for (size_t i = 0; i < Ns.size(); ++i) {
        if (bad[i]) out.push_back({Ns[i], fvals[i], counts[i]});
    }
    return out;
}

}  // namespace paralat::formula
