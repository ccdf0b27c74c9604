#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

using paralat::Rat;
using paralat::i128;
namespace lattice = paralat::lattice;

namespace oracles {

std::vector<std::pair<uint64_t, int>> factor_trial(uint64_t n) {
    std::vector<std::pair<uint64_t, int>> out;
    for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

uint64_t square_divisor_search(uint64_t n) {
    for (uint64_t k = (uint64_t)std::sqrt((double)n) + 1; k >= 1; --k) {
        if (k * k <= n && n % (k * k) == 0) return k * k;
    }
    return 1;
}

std::vector<uint64_t> divisors_scan(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t i = 1; i <= n; ++i)
        if (n % i == 0) out.push_back(i);
    return out;
}

namespace {

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
    unsigned __int128 acc = 1, base = b % m;
    while (e) {
        if (e & 1) acc = acc * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return (uint64_t)acc;
}

}  // namespace

int legendre_euler(long long a, uint64_t p) {
    long long r = a % (long long)p;
    if (r < 0) r += (long long)p;
    if (r == 0) return 0;
    uint64_t v = powmod((uint64_t)r, (p - 1) / 2, p);
    return v == 1 ? 1 : -1;
}

namespace {

// chi_{-d}(n) assembled from scratch: factor n by trial division, use
// Euler's criterion at each odd prime, and the mod 8 rule at 2
int chi_minus_d(uint64_t d, uint64_t n) {
    if (n == 0) return 0;
    long long md = -(long long)d;
    int s = 1;
    for (auto [p, e] : factor_trial(n)) {
        int v;
        if (p == 2) {
            long long r = ((md % 8) + 8) % 8;
            if (r % 2 == 0) return 0;
            v = (r == 1 || r == 7) ? 1 : -1;
        } else {
            v = legendre_euler(md, p);
        }
        if (v == 0) return 0;
        if (e % 2 == 1) s *= v;
    }
    return s;
}

std::vector<Rat> shift_of(const lattice::ParaboloidSpec& spec) {
    if (!spec.rational_beta)
        throw std::invalid_argument("oracle box scan needs a rational shift");
    return spec.beta_rat;
}

// per-coordinate half-width of { Q(x) <= B }: sqrt(B * (A^{-1})_{ii})
long long coord_bound(const lattice::RatQuadForm& Q, const Rat& B, int i) {
    double b = B.to_double() * Q.inverse_diag(i).to_double();
    return (long long)std::ceil(std::sqrt(std::max(0.0, b))) + 2;
}

}  // namespace

i128 region_count_box(const lattice::ParaboloidSpec& spec, const Rat& R) {
    auto beta = shift_of(spec);
    int k = spec.d - 1;
    Rat B = spec.c * R * R;
    std::vector<long long> lo(k), hi(k);
    for (int i = 0; i < k; ++i) {
        Rat s = R * beta[i];
        long long w = coord_bound(spec.Q, B, i);
        lo[i] = (long long)(Rat(-w) - s).ceil();
        hi[i] = (long long)(Rat(w) - s).floor();
    }
    i128 total = 0;
    std::vector<long long> n(k, 0);
    std::vector<Rat> x(k);
    auto rec = [&](auto&& self, int dim) -> void {
        if (dim == k) {
            for (int i = 0; i < k; ++i) x[i] = Rat(n[i]) + R * beta[i];
            Rat t = (B - spec.Q.eval(x)) / R;
            if (t.sign() >= 0) total += 2 * (i128)t.floor() + 1;
            return;
        }
        for (n[dim] = lo[dim]; n[dim] <= hi[dim]; ++n[dim]) self(self, dim + 1);
    };
    rec(rec, 0);
    return total;
}

i128 boundary_count_box(const lattice::ParaboloidSpec& spec, const Rat& R) {
    auto beta = shift_of(spec);
    int k = spec.d - 1;
    Rat B = spec.c * R * R;
    std::vector<long long> lo(k), hi(k);
    for (int i = 0; i < k; ++i) {
        Rat s = R * beta[i];
        long long w = coord_bound(spec.Q, B, i);
        lo[i] = (long long)(Rat(-w) - s).ceil();
        hi[i] = (long long)(Rat(w) - s).floor();
    }
    i128 total = 0;
    std::vector<long long> n(k, 0);
    std::vector<Rat> x(k);
    auto rec = [&](auto&& self, int dim) -> void {
        if (dim == k) {
            for (int i = 0; i < k; ++i) x[i] = Rat(n[i]) + R * beta[i];
            Rat t = (B - spec.Q.eval(x)) / R;
            if (t.sign() < 0) return;
            if (t.is_zero())
                total += 1;
            else if (t.is_integer())
                total += 2;
            return;
        }
        for (n[dim] = lo[dim]; n[dim] <= hi[dim]; ++n[dim]) self(self, dim + 1);
    };
    rec(rec, 0);
    return total;
}

long long rep_count_box(const lattice::RatQuadForm& Q, long long n) {
    long long b0 = coord_bound(Q, Rat(n), 0);
    long long b1 = coord_bound(Q, Rat(n), 1);
    long long total = 0;
    std::vector<Rat> v(2);
    for (long long x = -b0; x <= b0; ++x)
        for (long long y = -b1; y <= b1; ++y) {
            v[0] = Rat(x);
            v[1] = Rat(y);
            if (Q.eval(v) == Rat(n)) ++total;
        }
    return total;
}

double l_series_truncated(uint64_t d, uint64_t periods) {
    // chi_{-d} is periodic mod 4d and sums to zero over a full period, so
    // stopping at a period boundary leaves a tail of order d / (4 d periods)
    long double acc = 0;
    uint64_t limit = 4 * d * periods;
    for (uint64_t n = 1; n <= limit; ++n) acc += (long double)chi_minus_d(d, n) / (long double)n;
    return (double)acc;
}

std::vector<std::array<long long, 3>> reduced_forms_scan(long long D) {
    std::vector<std::array<long long, 3>> out;
    for (long long a = 1; 3 * a * a <= -D; ++a) {
        for (long long b = -a; b <= a; ++b) {
            long long num = b * b - D;
            if (num % (4 * a)) continue;
            long long c = num / (4 * a);
            if (c < a) continue;
            if ((b == -a || a == c) && b < 0) continue;
            out.push_back({a, b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::complex<double> gauss_sum_naive(long long m, long long N) {
    std::complex<double> acc = 0;
    const double tau = 8.0 * std::atan(1.0);
    for (long long n = 0; n < N; ++n) {
        long long r = (__int128)m * n % N * n % N;
        acc += std::polar(1.0, tau * (double)r / (double)N);
    }
    return acc;
}

}  // namespace oracles
