#pragma once

// Elementary multiplicative machinery: factorization, divisor enumeration,
// square parts, and the Kronecker symbol in its full extension (m <= 0 and
// even m included).
//
// Size contract: factorization accepts 1 <= n <= 2^63.  Trial division runs
// to 1e6; cofactors beyond that are split by Miller-Rabin + Pollard rho, so
// 64-bit semiprimes are still exact.

#include <cstdint>
#include <vector>

namespace paralat::arith {

struct PrimePower {
    uint64_t p;
    int e;
};

using Factorization = std::vector<PrimePower>;

bool is_prime_u64(uint64_t n);

// prime factorization, primes ascending; throws std::invalid_argument for
// n == 0 or n > 2^63
Factorization factorize(uint64_t n);

// largest perfect square dividing n (n >= 1)
uint64_t greatest_square_divisor(uint64_t n);

// all divisors of n, ascending
std::vector<uint64_t> divisors(uint64_t n);

// divisors of n congruent to r mod m, ascending (m >= 1)
std::vector<uint64_t> divisors_congruent(uint64_t n, uint64_t r, uint64_t m);

// Kronecker symbol (D|m), full extension: multiplicative in m over the
// factorization m = u * 2^e * odd with (D|2) from the mod-8 rule,
// (D|-1) = sign rule, (D|0) = [|D| == 1].
int kronecker(long long D, long long m);

}  // namespace paralat::arith
