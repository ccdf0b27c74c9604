#include "paralat/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace paralat::lattice {

namespace {

constexpr long double PI_L = 3.14159265358979323846264338327950288L;
constexpr long long R_MAX = 10'000'000;
constexpr i128 DEN_MAX = 1'000'000'000;

Rat det_of(std::vector<Rat> m, int k) {
    Rat det(1);
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int r = col; r < k; ++r) {
            if (!m[(size_t)r * k + col].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            for (int cc = 0; cc < k; ++cc) std::swap(m[(size_t)piv * k + cc], m[(size_t)col * k + cc]);
            det = -det;
        }
        Rat p = m[(size_t)col * k + col];
        det *= p;
        for (int r = col + 1; r < k; ++r) {
            Rat f = m[(size_t)r * k + col] / p;
            if (f.is_zero()) continue;
            for (int cc = col; cc < k; ++cc)
                m[(size_t)r * k + cc] -= f * m[(size_t)col * k + cc];
        }
    }
    return det;
}

// volume of the k-dimensional unit ball, omega_k = omega_{k-2} * 2 pi / k
double unit_ball_volume(int k) {
    long double v0 = 1, v1 = 2;
    if (k == 0) return (double)v0;
    long double prev = v0, cur = v1;
    for (int i = 2; i <= k; ++i) {
        long double next = prev * 2.0L * PI_L / i;
        prev = cur;
        cur = next;
    }
    return (double)cur;
}

// Exact fiberwise counter over the integerized lattice.  All loop-body
// arithmetic is raw __int128; run() is only entered after check_widths()
// has bounded the worst-case |w^T A w| * c_den against the 128-bit range.
struct ExactCounter {
    int k = 0;
    std::vector<i128> Aint;  // k*k, A * DA
    std::vector<i128> aint;  // alpha * Dal, in [0, Dal)
    i128 Dal = 1;
    i128 cden = 1;
    i128 rhs = 0;        // c_num * R^2 * DA * Dal^2
    i128 fiber_div = 1;  // c_den * DA * Dal^2 * R
    std::vector<long long> lo, hi;

    bool want_boundary = false;
    i128 total = 0;
    i128 boundary = 0;

    std::vector<i128> w;

    void check_widths() const {
        i128 maxw = 0;
        for (int i = 0; i < k; ++i) {
            i128 span = std::max<i128>(iabs128(lo[i]), iabs128(hi[i])) + 1;
            maxw = std::max(maxw, checked_mul(Dal, span, "count widths"));
        }
        i128 maxA = 0;
        for (const i128& v : Aint) maxA = std::max(maxA, iabs128(v));
        i128 worst = checked_mul(checked_mul((i128)k * k, maxA, "count widths"),
                                 checked_mul(maxw, maxw, "count widths"), "count widths");
        worst = checked_mul(worst, cden, "count widths");
        (void)checked_add(worst, iabs128(rhs), "count widths");
    }

    void run() {
        w.assign(k, 0);
        double fibers = 1;
        for (int i = 0; i + 1 < k; ++i) fibers *= std::max(0.0, (double)(hi[i] - lo[i] + 1));
        if (fibers > 2e9) throw std::invalid_argument("lattice count: fiber box exceeds 2e9 cells");
        check_widths();
        if (k == 1) {
            inner();
        } else {
            outer(0);
        }
    }

    void outer(int dim) {
        for (long long n = lo[dim]; n <= hi[dim]; ++n) {
            w[dim] = Dal * n + aint[dim];
            if (dim + 2 < k) outer(dim + 1);
            else inner();
        }
    }

    void inner() {
        int last = k - 1;
        i128 P = 0, L = 0;
        for (int i = 0; i < last; ++i) {
            L += Aint[(size_t)last * k + i] * w[i];
            i128 rowsum = 0;
            for (int j = 0; j < last; ++j) rowsum += Aint[(size_t)i * k + j] * w[j];
            P += rowsum * w[i];
        }
        i128 akk = Aint[(size_t)last * k + last];
        // window for cden*(akk w^2 + 2 L w + P) <= rhs from the real roots,
        // padded and then confirmed pointwise in exact arithmetic
        long double a2 = (long double)cden * (long double)akk;
        long double b2 = (long double)cden * (long double)L;
        long double c2 = (long double)cden * (long double)P - (long double)rhs;
        long double disc = b2 * b2 - a2 * c2;
        long long nlo, nhi;
        if (disc < 0) {
            long double nv = (-b2 / a2 - (long double)aint[last]) / (long double)Dal;
            nlo = (long long)floorl(nv) - 1;
            nhi = (long long)ceill(nv) + 1;
        } else {
            long double r = sqrtl(disc);
            nlo = (long long)floorl(((-b2 - r) / a2 - (long double)aint[last]) / (long double)Dal) - 1;
            nhi = (long long)ceill(((-b2 + r) / a2 - (long double)aint[last]) / (long double)Dal) + 1;
        }
        if (nlo < lo[last]) nlo = lo[last];
        if (nhi > hi[last]) nhi = hi[last];
        for (long long n = nlo; n <= nhi; ++n) {
            i128 wl = Dal * n + aint[last];
            i128 s = rhs - ((akk * wl + 2 * L) * wl + P) * cden;
            if (s < 0) continue;
            if (want_boundary) {
                if (s == 0) boundary += 1;
                else if (s % fiber_div == 0) boundary += 2;
            } else {
                total += 2 * (s / fiber_div) + 1;
            }
        }
    }
};

// shared setup of the integerized counter for the exact-beta path
ExactCounter make_exact_counter(const ParaboloidSpec& spec, long long R) {
    int k = spec.d - 1;
    ExactCounter ec;
    ec.k = k;

    std::vector<Rat> alpha(k);
    for (int i = 0; i < k; ++i) {
        Rat t = Rat(R) * spec.beta_rat[i];
        alpha[i] = t - Rat(t.floor());
    }

    i128 DA = 1, Dal = 1;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) DA = lcm128(DA, spec.Q.at(i, j).den(), "count denom");
    for (int i = 0; i < k; ++i) Dal = lcm128(Dal, alpha[i].den(), "count denom");
    if (DA > DEN_MAX || Dal > DEN_MAX)
        throw std::invalid_argument("lattice count: common denominator exceeds 1e9");

    ec.Aint.resize((size_t)k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Rat& e = spec.Q.at(i, j);
            ec.Aint[(size_t)i * k + j] = checked_mul(e.num(), DA / e.den(), "count scale");
        }
    ec.aint.resize(k);
    for (int i = 0; i < k; ++i) ec.aint[i] = checked_mul(alpha[i].num(), Dal / alpha[i].den(), "count scale");
    ec.Dal = Dal;
    ec.cden = spec.c.den();

    i128 R2 = checked_mul((i128)R, (i128)R, "count scale");
    ec.rhs = checked_mul(checked_mul(spec.c.num(), R2, "count scale"),
                         checked_mul(DA, checked_mul(Dal, Dal, "count scale"), "count scale"),
                         "count scale");
    ec.fiber_div = checked_mul(checked_mul(ec.cden, DA, "count scale"),
                               checked_mul(checked_mul(Dal, Dal, "count scale"), (i128)R, "count scale"),
                               "count scale");

    Rat T = spec.c * Rat((long long)R) * Rat((long long)R);
    ec.lo.resize(k);
    ec.hi.resize(k);
    for (int i = 0; i < k; ++i) {
        Rat Bi = T * spec.Q.inverse_diag(i);
        long double e = sqrtl(Bi.to_long_double());
        long double al = alpha[i].to_long_double();
        ec.lo[i] = (long long)floorl(-al - e) - 1;
        ec.hi[i] = (long long)ceill(-al + e) + 1;
    }
    return ec;
}

CountResult count_float(const ParaboloidSpec& spec, long long R) {
    int k = spec.d - 1;
    std::vector<long double> alpha(k);
    for (int i = 0; i < k; ++i) {
        long double t = fmodl((long double)R * (long double)spec.beta_real[i], 1.0L);
        if (t < 0) t += 1.0L;
        alpha[i] = t;
    }
    std::vector<long double> A((size_t)k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) A[(size_t)i * k + j] = spec.Q.at(i, j).to_long_double();

    long double T = spec.c.to_long_double() * (long double)R * (long double)R;
    std::vector<long long> lo(k), hi(k);
    double cells = 1;
    for (int i = 0; i < k; ++i) {
        Rat Bi = spec.c * Rat(R) * Rat(R) * spec.Q.inverse_diag(i);
        long double e = sqrtl(Bi.to_long_double());
        lo[i] = (long long)floorl(-alpha[i] - e) - 1;
        hi[i] = (long long)ceill(-alpha[i] + e) + 1;
        cells *= std::max(0.0, (double)(hi[i] - lo[i] + 1));
    }
    if (cells > 2e9) throw std::invalid_argument("lattice count: fiber box exceeds 2e9 cells");

    i128 total = 0;
    long long ambiguous = 0;
    std::vector<long long> n(k, 0);
    std::vector<long double> v(k, 0);

    // odometer over the box; fibers where the membership ratio sits within
    // 1e-9 of an integer are flagged, since the floor there is not trustworthy
    auto visit = [&](auto&& self, int dim) -> void {
        if (dim == k) {
            long double Qv = 0;
            for (int i = 0; i < k; ++i) {
                long double row = 0;
                for (int j = 0; j < k; ++j) row += A[(size_t)i * k + j] * v[j];
                Qv += row * v[i];
            }
            long double t = (T - Qv) / (long double)R;
            // a tie matters only at a decision boundary: membership flips at
            // t = 0, the fiber width flips at each positive integer; a fiber
            // near a negative integer is decided either way
            if (roundl(t) >= 0 && fabsl(t - roundl(t)) < 1e-9L) ++ambiguous;
            if (t >= 0) total += 2 * (i128)floorl(t) + 1;
            return;
        }
        for (n[dim] = lo[dim]; n[dim] <= hi[dim]; ++n[dim]) {
            v[dim] = (long double)n[dim] + alpha[dim];
            self(self, dim + 1);
        }
    };
    visit(visit, 0);
    return {total, ambiguous};
}

void validate_R(long long R) {
    if (R < 1) throw std::invalid_argument("lattice count: R must be >= 1");
    if (R > R_MAX) throw std::invalid_argument("lattice count: R must be <= 1e7");
}

}  // namespace

RatQuadForm::RatQuadForm(int k, std::vector<Rat> entries) : k_(k), a_(std::move(entries)) {
    if (k < 1) throw std::invalid_argument("quadratic form: dimension must be >= 1");
    if (a_.size() != (size_t)k * k) throw std::invalid_argument("quadratic form: wrong entry count");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (at(i, j) != at(j, i)) throw std::invalid_argument("quadratic form: matrix must be symmetric");
    // positive definiteness via leading principal minors
    for (int m = 1; m <= k; ++m) {
        std::vector<Rat> sub((size_t)m * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) sub[(size_t)i * m + j] = at(i, j);
        if (det_of(std::move(sub), m).sign() <= 0)
            throw std::invalid_argument("quadratic form: matrix must be positive definite");
    }
}

RatQuadForm RatQuadForm::from_upper(int k, const std::vector<Rat>& upper) {
    if ((size_t)k * (k + 1) / 2 != upper.size())
        throw std::invalid_argument("quadratic form: expected k(k+1)/2 upper-triangle entries");
    std::vector<Rat> full((size_t)k * k);
    size_t idx = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            full[(size_t)i * k + j] = upper[idx];
            full[(size_t)j * k + i] = upper[idx];
            ++idx;
        }
    return RatQuadForm(k, std::move(full));
}

Rat RatQuadForm::eval(const std::vector<Rat>& x) const {
    if (x.size() != (size_t)k_) throw std::invalid_argument("quadratic form: wrong vector length");
    Rat s(0);
    for (int i = 0; i < k_; ++i) {
        Rat row(0);
        for (int j = 0; j < k_; ++j) row += at(i, j) * x[j];
        s += row * x[i];
    }
    return s;
}

Rat RatQuadForm::det() const { return det_of(a_, k_); }

Rat RatQuadForm::inverse_diag(int i) const {
    if (k_ == 1) return Rat(1) / at(0, 0);
    std::vector<Rat> sub((size_t)(k_ - 1) * (k_ - 1));
    int ri = 0;
    for (int r = 0; r < k_; ++r) {
        if (r == i) continue;
        int ci = 0;
        for (int c = 0; c < k_; ++c) {
            if (c == i) continue;
            sub[(size_t)ri * (k_ - 1) + ci] = at(r, c);
            ++ci;
        }
        ++ri;
    }
    return det_of(std::move(sub), k_ - 1) / det();
}

bool RatQuadForm::integral_binary(long long* a, long long* b, long long* c) const {
    if (k_ != 2) return false;
    Rat bb = at(0, 1) * Rat(2);
    if (!at(0, 0).is_integer() || !at(1, 1).is_integer() || !bb.is_integer()) return false;
    if (iabs128(at(0, 0).num()) > (i128)1e15 || iabs128(bb.num()) > (i128)1e15 ||
        iabs128(at(1, 1).num()) > (i128)1e15)
        return false;
    if (a) *a = (long long)at(0, 0).num();
    if (b) *b = (long long)bb.num();
    if (c) *c = (long long)at(1, 1).num();
    return true;
}

ParaboloidSpec ParaboloidSpec::centered(int d, RatQuadForm Q, Rat c) {
    return with_rational_shift(d, std::move(Q), c, std::vector<Rat>((size_t)d - 1, Rat(0)));
}

ParaboloidSpec ParaboloidSpec::with_rational_shift(int d, RatQuadForm Q, Rat c, std::vector<Rat> beta) {
    if (d < 2) throw std::invalid_argument("paraboloid: dimension must be >= 2");
    if (Q.dim() != d - 1) throw std::invalid_argument("paraboloid: form dimension must be d-1");
    if (c.sign() <= 0) throw std::invalid_argument("paraboloid: height c must be > 0");
    if (beta.size() != (size_t)d - 1) throw std::invalid_argument("paraboloid: shift must have d-1 entries");
    return ParaboloidSpec{d, std::move(Q), c, std::move(beta), {}, true};
}

ParaboloidSpec ParaboloidSpec::with_real_shift(int d, RatQuadForm Q, Rat c, std::vector<double> beta) {
    if (d < 2) throw std::invalid_argument("paraboloid: dimension must be >= 2");
    if (Q.dim() != d - 1) throw std::invalid_argument("paraboloid: form dimension must be d-1");
    if (c.sign() <= 0) throw std::invalid_argument("paraboloid: height c must be > 0");
    if (beta.size() != (size_t)d - 1) throw std::invalid_argument("paraboloid: shift must have d-1 entries");
    return ParaboloidSpec{d, std::move(Q), c, {}, std::move(beta), false};
}

i128 count_parabola_2d(const Rat& R) {
    if (R.sign() <= 0) throw std::invalid_argument("count_parabola_2d: R must be > 0");
    if (R > Rat(R_MAX)) throw std::invalid_argument("count_parabola_2d: R must be <= 1e7");
    if (R.den() > 1'000'000) throw std::invalid_argument("count_parabola_2d: denominator of R must be <= 1e6");
    i128 p = R.num(), q = R.den();
    // |m| <= R - n^2/R  <=>  |m| p q <= p^2 - n^2 q^2
    i128 p2 = checked_mul(p, p, "parabola count");
    i128 pq = p * q;
    long long nb = (long long)(p / q);
    i128 total = 0;
    for (long long n = -nb; n <= nb; ++n) {
        i128 s = p2 - (i128)n * n * q * q;
        total += 2 * (s / pq) + 1;
    }
    return total;
}

CountResult count_paraboloid(const ParaboloidSpec& spec, long long R) {
    validate_R(R);
    if (!spec.rational_beta) return count_float(spec, R);
    ExactCounter ec = make_exact_counter(spec, R);
    ec.run();
    return {ec.total, 0};
}

i128 boundary_count(const ParaboloidSpec& spec, long long R) {
    validate_R(R);
    if (!spec.rational_beta)
        throw std::invalid_argument(
            "boundary_count: irrational shift rejected (boundary equality is undecidable in floats)");
    ExactCounter ec = make_exact_counter(spec, R);
    ec.want_boundary = true;
    ec.run();
    return ec.boundary;
}

double volume(const ParaboloidSpec& spec) {
    int k = spec.d - 1;
    double slice = unit_ball_volume(k) / std::sqrt(spec.Q.det().to_double());
    return 4.0 * slice * std::pow(spec.c.to_double(), (spec.d + 1) / 2.0) / (spec.d + 1);
}

ErrorRecord error_record(const ParaboloidSpec& spec, long long R, long long* ambiguous) {
    CountResult cr = count_paraboloid(spec, R);
    if (ambiguous) *ambiguous = cr.ambiguous_fibers;
    if (iabs128(cr.count) > (i128)9'000'000'000'000'000'000LL)
        throw_overflow("error_record count");
    double vol = volume(spec) * std::pow((double)R, spec.d);
    double err = (double)((long double)cr.count - (long double)vol);
    return {R, (long long)cr.count, vol, err};
}

long long rep_count(const RatQuadForm& Q, long long n) {
    long long a, b, c;
    if (!Q.integral_binary(&a, &b, &c))
        throw std::invalid_argument("rep_count: form must be integral (a, b, c integers)");
    if (n < 0) throw std::invalid_argument("rep_count: n must be >= 0");
    if (n > 1'000'000'000'000LL) throw std::invalid_argument("rep_count: n must be <= 1e12");
    i128 absD = 4 * (i128)a * c - (i128)b * b;  // > 0 by positive definiteness
    if (n == 0) return 1;
    i128 ymax = isqrt128(4 * (i128)a * n / absD);
    long long count = 0;
    for (i128 y = -ymax; y <= ymax; ++y) {
        i128 disc = 4 * (i128)a * n - absD * y * y;
        if (disc < 0) continue;
        i128 s;
        if (!is_square128(disc, &s)) continue;
        i128 twoa = 2 * (i128)a;
        if (s == 0) {
            if ((-(i128)b * y) % twoa == 0) ++count;
        } else {
            if ((-(i128)b * y + s) % twoa == 0) ++count;
            if ((-(i128)b * y - s) % twoa == 0) ++count;
        }
    }
    return count;
}

}  // namespace paralat::lattice
