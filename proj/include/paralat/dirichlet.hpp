#pragma once

// Quadratic Gauss sums, reduced binary quadratic forms, class numbers of
// imaginary quadratic fields, and L(1, chi_{-d}) for d = 3 mod 4.
//
// The L-value is exact up to the factor pi/sqrt(d): for -d = D0 f^2 with D0
// fundamental,
//   L(1, chi_{-d}) = [ f * (2 h(D0) / w(D0)) * prod_{p | f} (1 - (D0|p)/p) ] * pi / sqrt(d)
// and the bracket is the rational_part below.  w(-3) = 6, w(-4) = 4, else 2.

#include <complex>
#include <cstdint>
#include <vector>

#include "paralat/rational.hpp"

namespace paralat::dirichlet {

struct BinaryFormClass {
    long long a, b, c;
    long long discriminant() const { return b * b - 4 * a * c; }
};

struct LValue {
    uint64_t d;        // character modulus determinant: chi_{-d}
    Rat rational_part; // L(1,chi_{-d}) * sqrt(d) / pi, exact
    double value;      // L(1,chi_{-d})
    long long d0;      // fundamental discriminant, -d = d0 * f^2
    uint64_t f;
};

// sum_{n=1}^{N} e(m n^2 / N) by direct evaluation; N <= 1e6
std::complex<double> gauss_sum_direct(uint64_t m, uint64_t N);

// Im G(m; N) for odd N in closed form: with d_m = N / gcd(m, N),
// 0 when d_m = 1 mod 4, and (m/gcd | d_m) * N / sqrt(d_m) when d_m = 3 mod 4
double gauss_sum_im_closed(uint64_t m, uint64_t N);

// reduced primitive-and-imprimitive forms of discriminant D < 0
// (|b| <= a <= c, and b >= 0 when |b| = a or a = c), sorted by (a, b, c)
std::vector<BinaryFormClass> reduced_forms(long long D);

// h(-d) for fundamental -d, i.e. d = 3 mod 4 squarefree, d >= 3
long long class_number(uint64_t d);

LValue l_value(uint64_t d);

}  // namespace paralat::dirichlet
