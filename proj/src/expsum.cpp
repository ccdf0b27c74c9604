#include "paralat/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "paralat/int128.hpp"
#include "paralat/parallel.hpp"

namespace paralat::expsum {

namespace {

constexpr long double PI_L = 3.14159265358979323846264338327950288L;
constexpr long long ORDER_MAX = 1'000'000'000;
constexpr long long N_MAX = 1'000'000;

// Kahan-compensated accumulator for the unit-vector sums, where the final
// value is orders of magnitude below the term count
struct Compensated {
    long double s = 0, c = 0;
    void add(long double v) {
        long double t = v - c;
        long double u = s + t;
        c = (u - s) - t;
        s = u;
    }
};

struct IntBinary {
    long long a, b, c;
    i128 absD;
};

IntBinary get_int_binary(const lattice::RatQuadForm& Q, const char* fn) {
    IntBinary ib{};
    if (!Q.integral_binary(&ib.a, &ib.b, &ib.c))
        throw std::invalid_argument(std::string(fn) + ": form must be integral binary");
    ib.absD = 4 * (i128)ib.a * ib.c - (i128)ib.b * ib.b;
    return ib;
}

// visit every (n1, n2) with Q(n1, n2) <= N; fn(n1, n2, Q value)
template <class F>
void for_each_under_cap(const IntBinary& ib, long long N, F&& fn) {
    if (N < 0) return;
    long long n1max = (long long)isqrt128(4 * (i128)ib.c * N / ib.absD) + 1;
    for (long long n1 = -n1max; n1 <= n1max; ++n1) {
        i128 disc = 4 * (i128)ib.c * N - ib.absD * (i128)n1 * n1;
        if (disc < 0) continue;
        long double r = sqrtl((long double)disc);
        long long lo = (long long)floorl((-(long double)ib.b * n1 - r) / (2.0L * ib.c)) - 1;
        long long hi = (long long)ceill((-(long double)ib.b * n1 + r) / (2.0L * ib.c)) + 1;
        for (long long n2 = lo; n2 <= hi; ++n2) {
            i128 Qv = (i128)ib.a * n1 * n1 + (i128)ib.b * n1 * n2 + (i128)ib.c * n2 * n2;
            if (Qv > N) continue;
            fn(n1, n2, (long long)Qv);
        }
    }
}

Rat rat_from_unit_double(double x) {
    if (x == 0.0) return Rat(0);
    int e;
    double f = std::frexp(x, &e);  // x in (0, 1) so e <= 0
    i128 M = (i128)std::ldexp(f, 53);
    int shift = 53 - e;
    // below 2^-60 the point sits inside the cusp arc of 0/1 for any order
    // up to 1e9, so the exact tail is irrelevant
    if (shift > 113) return Rat(0);
    return Rat::make(M, (i128)1 << shift);
}

}  // namespace

// frac(t * m) in [0, 1), computed from the exact dyadic expansion of t so
// that phases stay accurate even when t * m is far above 1
long double frac_mul(double t, i128 m) {
    if (t == 0.0 || m == 0) return 0.0L;
    if (iabs128(m) > ((i128)1 << 45)) throw std::invalid_argument("phase argument exceeds 2^45");
    int e;
    double f = std::frexp(t, &e);      // t = f 2^e, 0.5 <= |f| < 1
    i128 M = (i128)std::ldexp(f, 53);  // integer, |M| < 2^53
    int s = e - 53;
    i128 P = M * m;  // |P| < 2^98
    if (s >= 0) return 0.0L;           // t m is an integer
    int k = -s;
    long double frac;
    if (k >= 99) {
        frac = ldexpl((long double)P, s);  // |P 2^s| < 1 already
    } else {
        u128 r = (u128)P & ((((u128)1) << k) - 1);  // P mod 2^k, negatives included
        frac = ldexpl((long double)r, s);
    }
    if (frac < 0) frac += 1.0L;
    if (frac >= 1) frac -= 1.0L;
    return frac;
}

RatioParts prop31_parts(const lattice::RatQuadForm& Q, double alpha, double beta, double x,
                        long long N) {
    if (N < 2) throw std::invalid_argument("prop31_ratio: N must be >= 2");
    RatioParts p;
    p.S = theta_partial_sum(Q, alpha, beta, x, N);
    long long F = (long long)isqrt64((uint64_t)N);
    p.arc = farey_locate(x, F);
    double xr = x - std::floor(x);
    Rat xrat = rat_from_unit_double(xr);
    p.dist = (Rat(p.arc.q) * xrat - Rat(p.arc.a)).abs().to_double();
    return p;
}

HlParts hl_parts(double x, long long N) {
    if (N < 1 || N > N_MAX) throw std::invalid_argument("hl_ratio: N must be in [1, 1e6]");
    Compensated re, im;
    re.add(1.0L);  // n = 0 term; (-n)^2 = n^2 doubles the rest
    for (long long n = 1; n <= N; ++n) {
        long double ph = 2.0L * PI_L * frac_mul(x, (i128)n * n);
        re.add(2.0L * cosl(ph));
        im.add(2.0L * sinl(ph));
    }
    HlParts p;
    p.S = {(double)re.s, (double)im.s};
    p.arc = farey_locate(x, (long long)isqrt64((uint64_t)N));
    return p;
}

FareyArc farey_locate_rat(const Rat& x0, long long order) {
    if (order < 1 || order > ORDER_MAX)
        throw std::invalid_argument("farey_locate: order must be in [1, 1e9]");
    Rat x = x0 - Rat(x0.floor());
    i128 xn = x.num(), xd = x.den();
    i128 pl = 0, ql = 1, pr = 1, qr = 1;
    // Stern-Brocot descent with batched steps; invariant: pl/ql <= x < pr/qr,
    // pr ql - pl qr = 1, all denominators <= order
    while (ql + qr <= order) {
        i128 lhsm = checked_mul(xn, ql + qr, "farey");
        i128 rhsm = checked_mul(xd, pl + pr, "farey");
        if (lhsm >= rhsm) {
            // x at or right of the mediant: advance the left endpoint
            i128 tF = (order - ql) / qr;
            i128 coef = checked_mul(pr, xd, "farey") - checked_mul(xn, qr, "farey");  // > 0
            i128 numt = checked_mul(xn, ql, "farey") - checked_mul(pl, xd, "farey");  // >= 0
            i128 t = std::min(tF, numt / coef);
            if (t < 1) t = 1;
            pl += t * pr;
            ql += t * qr;
        } else {
            // x left of the mediant: advance the right endpoint, keeping pr/qr > x
            i128 tF = (order - qr) / ql;
            i128 coefB = checked_mul(xn, ql, "farey") - checked_mul(pl, xd, "farey");  // >= 0
            i128 t;
            if (coefB == 0) {
                t = tF;  // x == pl/ql exactly; any advance keeps the invariant
            } else {
                i128 Apos = checked_mul(pr, xd, "farey") - checked_mul(xn, qr, "farey");  // > 0
                t = std::min(tF, (Apos - 1) / coefB);
            }
            if (t < 1) t = 1;
            pr += t * pl;
            qr += t * ql;
        }
    }
    // pl/ql and pr/qr are now Farey-consecutive at this order
    Rat med = Rat::make(pl + pr, ql + qr);
    FareyArc out;
    if (x < med) {
        out.a = (long long)pl;
        out.q = (long long)ql;
        i128 k = (order + qr) / ql;
        out.lo = Rat::make(pl + (k * pl - pr), ql + (k * ql - qr));
        out.hi = med;
    } else {
        out.a = (long long)pr;
        out.q = (long long)qr;
        i128 k = (order + ql) / qr;
        out.lo = med;
        out.hi = Rat::make(pr + (k * pr - pl), qr + (k * qr - ql));
    }
    return out;
}

FareyArc farey_locate(double x, long long order) {
    if (!std::isfinite(x)) throw std::invalid_argument("farey_locate: x must be finite");
    double xr = x - std::floor(x);
    if (xr >= 1.0) xr = 0.0;  // guards the floor rounding edge for x just below an integer
    return farey_locate_rat(rat_from_unit_double(xr), order);
}

std::complex<double> weighted_rep_sum(const lattice::RatQuadForm& Q, long long n, double alpha,
                                      double beta) {
    IntBinary ib = get_int_binary(Q, "weighted_rep_sum");
    if (n < 0) throw std::invalid_argument("weighted_rep_sum: n must be >= 0");
    if (n > 1'000'000'000'000LL) throw std::invalid_argument("weighted_rep_sum: n must be <= 1e12");
    if (n == 0) return {1.0, 0.0};
    Compensated re, im;
    i128 ymax = isqrt128(4 * (i128)ib.a * n / ib.absD);
    for (i128 y = -ymax; y <= ymax; ++y) {
        i128 disc = 4 * (i128)ib.a * n - ib.absD * y * y;
        if (disc < 0) continue;
        i128 s;
        if (!is_square128(disc, &s)) continue;
        i128 twoa = 2 * (i128)ib.a;
        for (int sign = (s == 0 ? 0 : -1); sign <= (s == 0 ? 0 : 1); sign += 2) {
            i128 xnum = -(i128)ib.b * y + sign * s;
            if (xnum % twoa != 0) continue;
            i128 xv = xnum / twoa;
            long double ph = 2.0L * PI_L *
                             fmodl(frac_mul(alpha, xv) + frac_mul(beta, y), 1.0L);
            re.add(cosl(ph));
            im.add(sinl(ph));
            if (s == 0) break;
        }
    }
    return {(double)re.s, (double)im.s};
}

std::complex<double> theta_partial_sum(const lattice::RatQuadForm& Q, double alpha, double beta,
                                       double x, long long N) {
    IntBinary ib = get_int_binary(Q, "theta_partial_sum");
    if (N < 0 || N > N_MAX)
        throw std::invalid_argument("theta_partial_sum: N must be in [0, 1e6]");
    Compensated re, im;
    for_each_under_cap(ib, N, [&](long long n1, long long n2, long long Qv) {
        long double ph = frac_mul(alpha, n1) + frac_mul(beta, n2) + frac_mul(x, Qv);
        ph -= floorl(ph);
        long double ang = 2.0L * PI_L * ph;
        re.add(cosl(ang));
        im.add(sinl(ang));
    });
    return {(double)re.s, (double)im.s};
}

double prop31_ratio(const lattice::RatQuadForm& Q, double alpha, double beta, double x,
                    long long N) {
    RatioParts p = prop31_parts(Q, alpha, beta, x, N);
    double L = std::log((double)N);
    return std::abs(p.S) * ((double)p.arc.q + (double)N * p.dist) / ((double)N * L * L);
}

double hl_ratio(double x, long long N) {
    HlParts p = hl_parts(x, N);
    return std::abs(p.S) * std::sqrt((double)p.arc.q) / (double)N;
}

std::vector<SweepSample> prop31_sweep(const lattice::RatQuadForm& Q, long long N, int samples,
                                      uint64_t seed, int jobs) {
    if (samples < 0) throw std::invalid_argument("prop31_sweep: samples must be >= 0");
    std::mt19937_64 rng(seed);
    auto unit = [&rng] { return (double)(rng() >> 11) * 0x1.0p-53; };
    std::vector<SweepSample> out((size_t)samples);
    for (auto& s : out) {
        s.x = unit();
        s.alpha = unit();
        s.beta = unit();
    }
    parallel_for(jobs, samples, [&](long long i) {
        SweepSample& s = out[(size_t)i];
        RatioParts p = prop31_parts(Q, s.alpha, s.beta, s.x, N);
        s.a = p.arc.a;
        s.q = p.arc.q;
        s.abs_sum = std::abs(p.S);
        double L = std::log((double)N);
        s.ratio = s.abs_sum * ((double)p.arc.q + (double)N * p.dist) / ((double)N * L * L);
    });
    return out;
}

std::vector<SweepSample> hl_sweep(long long N, int samples, uint64_t seed, int jobs) {
    if (samples < 0) throw std::invalid_argument("hl_sweep: samples must be >= 0");
    std::mt19937_64 rng(seed);
    auto unit = [&rng] { return (double)(rng() >> 11) * 0x1.0p-53; };
    std::vector<SweepSample> out((size_t)samples);
    for (auto& s : out) {
        s.x = unit();
        s.alpha = 0;
        s.beta = 0;
    }
    parallel_for(jobs, samples, [&](long long i) {
        SweepSample& s = out[(size_t)i];
        HlParts p = hl_parts(s.x, N);
        s.a = p.arc.a;
        s.q = p.arc.q;
        s.abs_sum = std::abs(p.S);
        s.ratio = s.abs_sum * std::sqrt((double)p.arc.q) / (double)N;
    });
    return out;
}

}  // namespace paralat::expsum
