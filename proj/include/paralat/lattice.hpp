#pragma once

// Exact lattice-point counting in dilated paraboloid regions
//   P = { (x, y) in R^(d-1) x R : |y| <= c - Q(x + beta) },
// dilated by R:  N(R) = #{ n in Z^d : n/R in P }.
//
// Counting is fiberwise: for each n in Z^(d-1) with Q(n + alpha) <= c R^2
// (alpha = R beta mod 1, by 1-periodicity of the shifted lattice) the fiber
// contributes 2 floor((c R^2 - Q(n + alpha)) / R) + 1 points.
//
// With rational A, beta, c everything is integerized: writing DA, Da for the
// common denominators of A and alpha, w = Da n + a_int, the membership test
//   Q(n + alpha) <= c R^2  <=>  (w^T A_int w) c_den <= c_num R^2 DA Da^2
// runs in raw __int128 after a one-time width check of the worst case, so
// the per-point loop carries no overflow-test overhead.

#include <cstdint>
#include <string>
#include <vector>

#include "paralat/rational.hpp"

namespace paralat::lattice {

// symmetric positive definite rational matrix, acting as the quadratic form
// Q(x) = x^T A x
class RatQuadForm {
  public:
    RatQuadForm(int k, std::vector<Rat> entries);  // row-major k*k, validated
    static RatQuadForm from_upper(int k, const std::vector<Rat>& upper);

    int dim() const { return k_; }
    const Rat& at(int i, int j) const { return a_[(size_t)i * k_ + j]; }
    Rat eval(const std::vector<Rat>& x) const;
    Rat det() const;
    Rat inverse_diag(int i) const;  // (A^{-1})_{ii}

    // Q = a x^2 + b xy + c y^2 with integer a, b, c (requires dim 2)
    bool integral_binary(long long* a, long long* b, long long* c) const;

  private:
    int k_;
    std::vector<Rat> a_;
};

struct ParaboloidSpec {
    int d;                          // ambient dimension, >= 2
    RatQuadForm Q;                  // dimension d-1
    Rat c;                          // height, > 0
    std::vector<Rat> beta_rat;      // exact path
    std::vector<double> beta_real;  // float path (empirical use only)
    bool rational_beta;

    static ParaboloidSpec centered(int d, RatQuadForm Q, Rat c);
    static ParaboloidSpec with_rational_shift(int d, RatQuadForm Q, Rat c, std::vector<Rat> beta);
    static ParaboloidSpec with_real_shift(int d, RatQuadForm Q, Rat c, std::vector<double> beta);
};

struct CountResult {
    i128 count;
    long long ambiguous_fibers;  // float path: fibers within 1e-9 of a membership tie
};

struct ErrorRecord {
    long long R;
    long long count;
    double volume_term;  // |P| R^d
    double error;        // count - volume_term
};

// N(R) for the model region P_2 (d = 2, Q = x^2, c = 1, beta = 0); R may be
// a positive rational, den <= 1e6, R <= 1e7
i128 count_parabola_2d(const Rat& R);

// N(R) for a general spec at integer R >= 1
CountResult count_paraboloid(const ParaboloidSpec& spec, long long R);

// #{ n in Z^d : n/R on the boundary |y| = c - Q(x + beta) }; rational beta only
i128 boundary_count(const ParaboloidSpec& spec, long long R);

// |P| = 2 vol(Q <= 1) c^((d+1)/2) * 2/(d+1), via vol(Q <= 1) = omega_{d-1}/sqrt(det A)
double volume(const ParaboloidSpec& spec);

// one scan row; ambiguous (if non-null) receives the float-path tie count
ErrorRecord error_record(const ParaboloidSpec& spec, long long R, long long* ambiguous = nullptr);

// r_Q(n) = #{ v in Z^2 : Q(v) = n } for integral binary Q; n <= 1e12
long long rep_count(const RatQuadForm& Q, long long n);

}  // namespace paralat::lattice
