#include "doctest.h"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "oracles.hpp"
#include "paralat/arith.hpp"
#include "paralat/dirichlet.hpp"
#include "paralat/rational.hpp"

using paralat::Rat;
namespace dirichlet = paralat::dirichlet;
namespace arith = paralat::arith;

TEST_CASE("gauss sums match the naive evaluation") {
    for (long long N = 1; N <= 60; ++N)
        for (long long m = 1; m <= N; ++m) {
            auto fast = dirichlet::gauss_sum_direct(m, N);
            auto naive = oracles::gauss_sum_naive(m, N);
            CHECK_MESSAGE(std::abs(fast - naive) < 1e-9 * (double)N, "m = ", m, ", N = ", N);
        }
}

TEST_CASE("gauss sum known values") {
    auto g3 = dirichlet::gauss_sum_direct(1, 3);
    CHECK(g3.real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(g3.imag() == doctest::Approx(std::sqrt(3.0)));
    auto g4 = dirichlet::gauss_sum_direct(1, 4);
    CHECK(g4.real() == doctest::Approx(2.0));
    CHECK(g4.imag() == doctest::Approx(2.0));
    auto g5 = dirichlet::gauss_sum_direct(1, 5);
    CHECK(g5.real() == doctest::Approx(std::sqrt(5.0)));
    CHECK(g5.imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("closed-form imaginary part agrees with direct evaluation for odd moduli") {
    for (long long N = 1; N <= 301; N += 2)
        for (long long m = 1; m <= N; ++m) {
            double direct = dirichlet::gauss_sum_direct(m, N).imag();
            double closed = dirichlet::gauss_sum_im_closed(m, N);
            CHECK_MESSAGE(std::fabs(direct - closed) < 1e-8 * (double)N, "m = ", m, ", N = ", N);
        }
}

TEST_CASE("closed form encodes the vanishing pattern") {
    // N / gcd(m, N) = 1 mod 4 kills the imaginary part
    CHECK(dirichlet::gauss_sum_im_closed(1, 5) == 0.0);
    CHECK(dirichlet::gauss_sum_im_closed(3, 15) == 0.0);  // d_m = 5 = 1 mod 4
    // d_m = 3 survives via the reduced residue: (m/g / d_m) = (1/3) = +1,
    // matching G(5; 15) = 5 G(1; 3) = 5 sqrt(3) i
    CHECK(dirichlet::gauss_sum_im_closed(5, 15) == doctest::Approx(15.0 / std::sqrt(3.0)));
    CHECK(dirichlet::gauss_sum_im_closed(1, 3) == doctest::Approx(std::sqrt(3.0)));
    CHECK(dirichlet::gauss_sum_im_closed(2, 3) == doctest::Approx(-std::sqrt(3.0)));
}

TEST_CASE("normalized gauss sum magnitude is 1 for odd moduli") {
    // |G(m; N)|^2 = N gcd(m, N) whenever N is odd
    for (long long N = 1; N <= 99; N += 2)
        for (long long m = 1; m <= N; ++m) {
            double g = std::norm(dirichlet::gauss_sum_direct(m, N));
            long long gg = std::gcd(m, N);
            double ratio = g / ((double)N * (double)gg);
            CHECK_MESSAGE(std::fabs(ratio - 1.0) < 1e-6, "m = ", m, ", N = ", N);
        }
}

TEST_CASE("gauss sum input validation") {
    CHECK_THROWS_AS(dirichlet::gauss_sum_direct(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(dirichlet::gauss_sum_direct(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(dirichlet::gauss_sum_im_closed(1, 4), std::invalid_argument);
}

TEST_CASE("reduced forms match the exhaustive coefficient scan") {
    for (long long d : {3LL, 7LL, 11LL, 15LL, 23LL, 31LL, 47LL, 71LL, 95LL, 163LL, 479LL}) {
        auto got = dirichlet::reduced_forms(-d);
        auto want = oracles::reduced_forms_scan(-d);
        REQUIRE_MESSAGE(got.size() == want.size(), "d = ", d);
        for (size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].a == want[i][0]);
            CHECK(got[i].b == want[i][1]);
            CHECK(got[i].c == want[i][2]);
        }
    }
}

TEST_CASE("reduced form discriminants are the input discriminant") {
    for (auto& f : dirichlet::reduced_forms(-23)) CHECK(f.discriminant() == -23);
    for (auto& f : dirichlet::reduced_forms(-20)) CHECK(f.discriminant() == -20);
}

TEST_CASE("class numbers of small discriminants") {
    // h(-d) for the nine d with class number one, then a few larger ones
    long long one[] = {3, 7, 11, 19, 43, 67, 163};
    for (long long d : one) CHECK_MESSAGE(dirichlet::class_number(d) == 1, "d = ", d);
    CHECK(dirichlet::class_number(23) == 3);
    CHECK(dirichlet::class_number(31) == 3);
    CHECK(dirichlet::class_number(47) == 5);
    CHECK(dirichlet::class_number(71) == 7);
    CHECK(dirichlet::class_number(95) == 8);
    CHECK(dirichlet::class_number(479) == 25);
}

TEST_CASE("class number input validation") {
    CHECK_THROWS_AS(dirichlet::class_number(5), std::invalid_argument);   // 5 = 1 mod 4
    CHECK_THROWS_AS(dirichlet::class_number(27), std::invalid_argument);  // not squarefree
}

TEST_CASE("L-values against the truncated series") {
    for (uint64_t d : {3ULL, 7ULL, 11ULL, 23ULL, 27ULL, 75ULL, 163ULL}) {
        auto lv = dirichlet::l_value(d);
        double series = oracles::l_series_truncated(d, 600);
        CHECK_MESSAGE(std::fabs(lv.value - series) < 5e-3, "d = ", d, " value ", lv.value,
                      " series ", series);
    }
}

TEST_CASE("L-value rational parts on fundamental and non-fundamental d") {
    // fundamental: rational part is 2 h(-d) / w
    CHECK(dirichlet::l_value(3).rational_part == Rat(1, 3));    // h = 1, w = 6
    CHECK(dirichlet::l_value(7).rational_part == Rat(1));
    CHECK(dirichlet::l_value(23).rational_part == Rat(3));
    CHECK(dirichlet::l_value(163).rational_part == Rat(1));
    // 27 = 3 * 3^2: conductor drops to 3, euler factor at 3 is 1 - (-3/3)/3 = 1
    auto lv27 = dirichlet::l_value(27);
    CHECK(lv27.rational_part == Rat(1));
    CHECK(lv27.d0 == -3);
    CHECK(lv27.f == 3);
    // 75 = 3 * 5^2: euler factor at 5 is 1 - (-3/5)/5 = 6/5, so 5 * (1/3) * (6/5) = 2
    auto lv75 = dirichlet::l_value(75);
    CHECK(lv75.rational_part == Rat(2));
    CHECK(lv75.d0 == -3);
    CHECK(lv75.f == 5);
}

TEST_CASE("L-value satisfies the class number formula shape") {
    // value * sqrt(d) / pi must equal the rational part
    for (uint64_t d : {3ULL, 7ULL, 11ULL, 27ULL, 75ULL, 99ULL}) {
        auto lv = dirichlet::l_value(d);
        double recon = lv.rational_part.to_double() * std::acos(-1.0) / std::sqrt((double)d);
        CHECK(lv.value == doctest::Approx(recon).epsilon(1e-12));
    }
}
