#include "paralat/dirichlet.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "paralat/arith.hpp"
#include "paralat/int128.hpp"

namespace paralat::dirichlet {

namespace {
constexpr long double PI_L = 3.14159265358979323846264338327950288L;
}

std::complex<double> gauss_sum_direct(uint64_t m, uint64_t N) {
    if (m == 0) throw std::invalid_argument("gauss_sum_direct: m must be >= 1");
    if (N == 0 || N > 1'000'000)
        throw std::invalid_argument("gauss_sum_direct: N must be in [1, 1e6]");
    uint64_t mr = m % N;
    long double re = 0, im = 0, cre = 0, cim = 0;
    for (uint64_t n = 1; n <= N; ++n) {
        uint64_t r = (uint64_t)((u128)mr * ((u128)(n % N) * (n % N) % N) % N);
        long double ph = 2.0L * PI_L * (long double)r / (long double)N;
        // Kahan accumulation; the terms are unit vectors and cancellation is
        // the whole point of the sum
        long double tr = cosl(ph) - cre;
        long double sr = re + tr;
        cre = (sr - re) - tr;
        re = sr;
        long double ti = sinl(ph) - cim;
        long double si = im + ti;
        cim = (si - im) - ti;
        im = si;
    }
    return {(double)re, (double)im};
}

double gauss_sum_im_closed(uint64_t m, uint64_t N) {
    if (m == 0) throw std::invalid_argument("gauss_sum_im_closed: m must be >= 1");
    if (N == 0 || N % 2 == 0)
        throw std::invalid_argument("gauss_sum_im_closed: N must be odd");
    uint64_t g = std::gcd(m, N);
    uint64_t dm = N / g;
    if (dm % 4 == 1) return 0.0;
    int jac = arith::kronecker((long long)(m / g), (long long)dm);
    return (double)jac * (double)N / std::sqrt((double)dm);
}

std::vector<BinaryFormClass> reduced_forms(long long D) {
    if (D >= 0) throw std::invalid_argument("reduced_forms: discriminant must be negative");
    long long r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1)
        throw std::invalid_argument("reduced_forms: discriminant must be 0 or 1 mod 4");
    if (D < -1'000'000'000'000LL)
        throw std::invalid_argument("reduced_forms: |D| must be <= 1e12");
    std::vector<BinaryFormClass> out;
    long long absD = -D;
    for (long long a = 1; 3 * a * a <= absD; ++a) {
        for (long long b = -a; b <= a; ++b) {
            long long num = b * b + absD;  // b^2 - D
            if (num % (4 * a) != 0) continue;
            long long c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (-b == a || a == c)) continue;  // canonical sign choice
            out.push_back({a, b, c});
        }
    }
    // the a-loop already emits in (a, b, c) order except for b signs; sort anyway
    std::sort(out.begin(), out.end(), [](const BinaryFormClass& x, const BinaryFormClass& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    });
    return out;
}

long long class_number(uint64_t d) {
    if (d < 3 || d % 4 != 3)
        throw std::invalid_argument("class_number: -d fundamental requires d = 3 mod 4, d >= 3");
    for (const auto& [p, e] : arith::factorize(d)) {
        (void)p;
        if (e > 1)
            throw std::invalid_argument("class_number: -d fundamental requires d squarefree, got d = " +
                                        std::to_string(d));
    }
    return (long long)reduced_forms(-(long long)d).size();
}

LValue l_value(uint64_t d) {
    if (d < 3 || d % 4 != 3)
        throw std::invalid_argument("l_value: requires d = 3 mod 4, d >= 3");
    uint64_t nstar = arith::greatest_square_divisor(d);
    uint64_t f = isqrt64(nstar);
    uint64_t s = d / nstar;  // squarefree, = 3 mod 4 since f^2 = 1 mod 4... see below
    // d = s f^2 with f^2 = 1 mod 8 or 4; f odd because d is odd, so f^2 = 1 mod 4
    // and s = d = 3 mod 4: -s is fundamental
    long long h0 = class_number(s);
    long long w = (s == 3) ? 6 : 2;
    Rat rp = Rat(2 * h0, w) * Rat((long long)f);
    for (const auto& [p, e] : arith::factorize(f)) {
        (void)e;
        rp *= Rat(1) - Rat(arith::kronecker(-(long long)s, (long long)p), (long long)p);
    }
    double value = rp.to_double() * (double)(PI_L / sqrtl((long double)d));
    return {d, rp, value, -(long long)s, f};
}

}  // namespace paralat::dirichlet
