#include "doctest.h"

#include <stdexcept>
#include <string>

#include "paralat/formula.hpp"
#include "paralat/lattice.hpp"
#include "paralat/rational.hpp"

using paralat::Rat;
namespace formula = paralat::formula;
namespace lattice = paralat::lattice;

TEST_CASE("error term at small odd radii") {
    CHECK(formula::error_term_exact(1) == Rat(7, 3));
    CHECK(formula::error_term_exact(3) == Rat(1));
    CHECK(formula::error_term_exact(5) == Rat(7, 3));
    CHECK(formula::error_term_exact(7) == Rat(-5, 3));
    CHECK(formula::error_term_exact(9) == Rat(5));
    CHECK(formula::error_term_exact(11) == Rat(-5, 3));
    CHECK(formula::error_term_exact(15) == Rat(-7));
}

TEST_CASE("error term reconstructs the exact count") {
    for (uint64_t N = 1; N <= 301; N += 2) {
        Rat total = Rat(8, 3) * Rat((long long)N) * Rat((long long)N) + formula::error_term_exact(N);
        CHECK_MESSAGE(Rat((paralat::i128)lattice::count_parabola_2d(Rat((long long)N))) == total,
                      "N = ", N);
    }
}

TEST_CASE("three times the error term is an integer") {
    for (uint64_t N = 1; N <= 501; N += 2) {
        Rat e3 = formula::error_term_exact(N) * Rat(3);
        CHECK_MESSAGE(e3.is_integer(), "N = ", N, " gives ", e3.str());
    }
}

TEST_CASE("restricted forms agree with the full formula on their domains") {
    for (uint64_t N : {1ULL, 5ULL, 13ULL, 25ULL, 65ULL, 85ULL, 169ULL, 325ULL})
        CHECK(formula::error_term_cor_4k1(N) == formula::error_term_exact(N));
    for (uint64_t N = 1; N <= 301; N += 2) {
        bool sqfree = true;
        for (uint64_t k = 2; k * k <= N; ++k)
            if (N % (k * k) == 0) sqfree = false;
        if (sqfree) CHECK(formula::error_term_cor_sqfree(N) == formula::error_term_exact(N));
    }
}

TEST_CASE("all-residues-1 form depends only on the square part") {
    // every prime factor of N is 1 mod 4, so E(N) = 1/3 + 2 sqrt(N*)
    CHECK(formula::error_term_cor_4k1(5) == Rat(7, 3));
    CHECK(formula::error_term_cor_4k1(25) == Rat(31, 3));   // 1/3 + 10
    CHECK(formula::error_term_cor_4k1(65) == Rat(7, 3));
    CHECK(formula::error_term_cor_4k1(169) == Rat(79, 3));  // 1/3 + 26
}

TEST_CASE("squarefree form is a class number sum") {
    // N = 21: divisors 3 mod 4 are 3 and 7; E = 7/3 - 4 (h(-3)/3 + h(-7))
    CHECK(formula::error_term_cor_sqfree(21) == Rat(-3));
    CHECK(formula::error_term_cor_sqfree(1) == Rat(7, 3));
    CHECK(formula::error_term_cor_sqfree(3) == Rat(1));
}

TEST_CASE("restricted forms reject inputs outside their domains") {
    CHECK_THROWS_WITH_AS(formula::error_term_cor_4k1(21),
                         doctest::Contains("prime 3 = 3 mod 4 divides N"), std::invalid_argument);
    CHECK_THROWS_AS(formula::error_term_cor_sqfree(9), std::invalid_argument);
    CHECK_THROWS_AS(formula::error_term_exact(4), std::invalid_argument);
    CHECK_THROWS_AS(formula::error_term_exact(0), std::invalid_argument);
}

TEST_CASE("verification sweep finds no mismatches") {
    CHECK(formula::verify_formula_range(301, 2).empty());
}
