#pragma once

// Farey dissection of the unit interval and truncated exponential sums over
// lattice points under an integral binary form cap:
//   theta(x; alpha, beta, N) = sum_{Q(n1,n2) <= N} e(alpha n1 + beta n2 + x Q(n1,n2)).
//
// The dissection order is floor(sqrt(N)) throughout: farey_locate(x, order)
// returns the unique fraction a/q (q <= order) whose mediant arc
//   [ (a + a^-)/(q + q^-), (a + a^+)/(q + q^+) )
// contains x mod 1, where a^-/q^- and a^+/q^+ are the Farey neighbors.
//
// The scaled sup statistics are
//   prop31_ratio = |theta| (q + N |q x - a|) / (N log^2 N)
//   hl_ratio     = |sum_{|n| <= N} e(n^2 x)| sqrt(q) / N
// finite and slowly varying in N when the corresponding bounds hold.

#include <complex>
#include <cstdint>
#include <vector>

#include "paralat/lattice.hpp"
#include "paralat/rational.hpp"

namespace paralat::expsum {

struct FareyArc {
    long long a;
    long long q;
    Rat lo, hi;  // arc [lo, hi) around a/q; lo can be negative at the 0/1 cusp
};

// exact dissection; x is reduced mod 1; 1 <= order <= 1e9
FareyArc farey_locate_rat(const Rat& x, long long order);

// double entry point: x is converted to its exact dyadic rational first
FareyArc farey_locate(double x, long long order);

// frac(t * m) in [0, 1) from the exact dyadic expansion of t, so phases stay
// accurate when t * m is far above 1; requires |m| <= 2^45
long double frac_mul(double t, i128 m);

// sum over the finitely many Q(v) = n of e(alpha v1 + beta v2)
std::complex<double> weighted_rep_sum(const lattice::RatQuadForm& Q, long long n, double alpha,
                                      double beta);

// truncated theta sum; Q integral binary, 0 <= N <= 1e6
std::complex<double> theta_partial_sum(const lattice::RatQuadForm& Q, double alpha, double beta,
                                       double x, long long N);

double prop31_ratio(const lattice::RatQuadForm& Q, double alpha, double beta, double x, long long N);

double hl_ratio(double x, long long N);

// the pieces behind the ratios, for callers that want the raw sum and the
// Farey data of the frequency together
struct RatioParts {
    std::complex<double> S;
    FareyArc arc;
    double dist;  // |q x - a| at x mod 1, exact via the dyadic expansion
};
RatioParts prop31_parts(const lattice::RatQuadForm& Q, double alpha, double beta, double x,
                        long long N);

struct HlParts {
    std::complex<double> S;
    FareyArc arc;
};
HlParts hl_parts(double x, long long N);

// Seeded sweep protocol shared by the CLI and the verification suite: a
// single mt19937_64 stream seeded with `seed` draws, per sample, x then
// alpha then beta (hl: x only), each as (rng() >> 11) * 2^-53.  The same
// seed therefore yields the same sample list at every N, making sup-ratio
// comparisons across N sample-paired.
struct SweepSample {
    double x, alpha, beta;
    long long a, q;
    double abs_sum;
    double ratio;
};

std::vector<SweepSample> prop31_sweep(const lattice::RatQuadForm& Q, long long N, int samples,
                                      uint64_t seed, int jobs = 1);
std::vector<SweepSample> hl_sweep(long long N, int samples, uint64_t seed, int jobs = 1);

}  // namespace paralat::expsum
