#include "paralat/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "paralat/int128.hpp"

namespace paralat::arith {

namespace {

constexpr uint64_t TRIAL_BOUND = 1'000'000;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t n) {
    return (uint64_t)((u128)a * b % n);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t n) {
    uint64_t r = 1;
    a %= n;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, n);
        a = mulmod(a, a, n);
        e >>= 1;
    }
    return r;
}

// Brent's cycle-finding variant; n odd composite, returns a proper factor.
uint64_t pollard_rho(uint64_t n) {
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        uint64_t power = 1, lam = 1;
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = (mulmod(y, y, n) + c) % n;
            ++lam;
            uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle closed without a factor; retry with new c
            d = std::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        primes.push_back(n);
        return;
    }
    uint64_t d = pollard_rho(n);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin base set for the full 64-bit range
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Factorization factorize(uint64_t n) {
    if (n == 0 || n > (1ull << 63))
        throw std::invalid_argument("factorize: n must be in [1, 2^63]");
    Factorization out;
    auto strip = [&](uint64_t p) {
        if (n % p != 0) return;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    };
    strip(2);
    for (uint64_t p = 3; p <= TRIAL_BOUND && p * p <= n; p += 2) strip(p);
    if (n > 1) {
        if (n < TRIAL_BOUND * TRIAL_BOUND) {
            // no factor below 1e6 and n < 1e12, so n is prime
            out.push_back({n, 1});
        } else {
            std::vector<uint64_t> primes;
            factor_rec(n, primes);
            std::sort(primes.begin(), primes.end());
            for (size_t i = 0; i < primes.size();) {
                size_t j = i;
                while (j < primes.size() && primes[j] == primes[i]) ++j;
                out.push_back({primes[i], (int)(j - i)});
                i = j;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.p < b.p; });
    return out;
}

uint64_t greatest_square_divisor(uint64_t n) {
    uint64_t sq = 1;
    for (const auto& [p, e] : factorize(n)) {
        for (int i = 0; i + 1 < e; i += 2) sq *= p * p;
    }
    return sq;
}

std::vector<uint64_t> divisors(uint64_t n) {
    std::vector<uint64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        size_t base = out.size();
        uint64_t pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint64_t> divisors_congruent(uint64_t n, uint64_t r, uint64_t m) {
    if (m == 0) throw std::invalid_argument("divisors_congruent: modulus must be >= 1");
    std::vector<uint64_t> out;
    for (uint64_t d : divisors(n)) {
        if (d % m == r % m) out.push_back(d);
    }
    return out;
}

int kronecker(long long D, long long m) {
    if (m == 0) return (D == 1 || D == -1) ? 1 : 0;
    int s = 1;
    if (m < 0) {
        m = -m;
        if (D < 0) s = -s;
    }
    if ((D & 1) == 0 && (m & 1) == 0) return 0;
    int twos = 0;
    while ((m & 1) == 0) {
        m >>= 1;
        ++twos;
    }
    if (twos & 1) {
        long long d8 = ((D % 8) + 8) % 8;
        if (d8 == 3 || d8 == 5) s = -s;
    }
    // m odd > 0 from here: Jacobi symbol via reciprocity
    long long a = D % m;
    if (a < 0) a += m;
    while (a != 0) {
        int t = 0;
        while ((a & 1) == 0) {
            a >>= 1;
            ++t;
        }
        if (t & 1) {
            long long m8 = m % 8;
            if (m8 == 3 || m8 == 5) s = -s;
        }
        if ((a % 4 == 3) && (m % 4 == 3)) s = -s;
        long long tmp = a;
        a = m % tmp;
        m = tmp;
    }
    return m == 1 ? s : 0;
}

}  // namespace paralat::arith
