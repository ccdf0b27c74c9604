#pragma once

// Exact rational arithmetic on 128-bit integers.
//
// Invariants: den > 0 and gcd(|num|, den) == 1 after every operation.
// Operations pre-reduce by cross gcds before multiplying, and all products
// are overflow-checked, so exhausting the 128-bit width throws instead of
// returning a wrong value.  With inputs kept inside the documented size
// guards of the counting routines (R <= 1e7, denominators <= 1e6) no
// legitimate computation reaches the limit.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "paralat/int128.hpp"

namespace paralat {

class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(int n) : num_(n), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(i128 n) : num_(n), den_(1) {}
    Rat(long long n, long long d) { init(n, d); }

    static Rat make(i128 n, i128 d) {
        Rat r;
        r.init(n, d);
        return r;
    }

    i128 num() const { return num_; }
    i128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rat operator+(const Rat& o) const {
        i128 g = gcd128(den_, o.den_);
        i128 db = den_ / g, ob = o.den_ / g;
        i128 n = checked_add(checked_mul(num_, ob, "rat add"),
                             checked_mul(o.num_, db, "rat add"), "rat add");
        i128 d = checked_mul(db, o.den_, "rat add");
        return make(n, d);
    }

    Rat operator-(const Rat& o) const { return *this + (-o); }

    Rat operator*(const Rat& o) const {
        i128 g1 = gcd128(num_, o.den_);
        i128 g2 = gcd128(o.num_, den_);
        Rat r;
        r.num_ = checked_mul(num_ / g1, o.num_ / g2, "rat mul");
        r.den_ = checked_mul(den_ / g2, o.den_ / g1, "rat mul");
        return r;
    }

    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        Rat inv;
        inv.num_ = o.den_;
        inv.den_ = o.num_;
        if (inv.den_ < 0) {
            inv.num_ = -inv.num_;
            inv.den_ = -inv.den_;
        }
        return *this * inv;
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    // three-way compare without building a common denominator blowup
    int cmp(const Rat& o) const {
        if (sign() != o.sign()) return sign() < o.sign() ? -1 : 1;
        i128 g = gcd128(den_, o.den_);
        i128 l = checked_mul(num_, o.den_ / g, "rat cmp");
        i128 r = checked_mul(o.num_, den_ / g, "rat cmp");
        return l < r ? -1 : (l > r ? 1 : 0);
    }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return cmp(o) < 0; }
    bool operator<=(const Rat& o) const { return cmp(o) <= 0; }
    bool operator>(const Rat& o) const { return cmp(o) > 0; }
    bool operator>=(const Rat& o) const { return cmp(o) >= 0; }

    i128 floor() const {
        i128 q = num_ / den_;
        if (num_ < 0 && num_ % den_ != 0) --q;
        return q;
    }

    i128 ceil() const {
        i128 q = num_ / den_;
        if (num_ > 0 && num_ % den_ != 0) ++q;
        return q;
    }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const { return (double)((long double)num_ / (long double)den_); }
    long double to_long_double() const { return (long double)num_ / (long double)den_; }

    std::string str() const {
        if (den_ == 1) return to_string_i128(num_);
        return to_string_i128(num_) + "/" + to_string_i128(den_);
    }

    // Accepts "p/q", plain integers, and decimal literals like "-0.25".
    static Rat parse(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty rational literal");
        size_t slash = s.find('/');
        if (slash != std::string_view::npos) {
            i128 n = parse_i128(s.substr(0, slash));
            i128 d = parse_i128(s.substr(slash + 1));
            return make(n, d);
        }
        size_t dot = s.find('.');
        if (dot == std::string_view::npos) return Rat(parse_i128(s));
        std::string digits(s.substr(0, dot));
        std::string_view frac = s.substr(dot + 1);
        if (frac.size() > 30) throw std::invalid_argument("decimal literal too long");
        digits.append(frac);
        i128 n = parse_i128(digits);
        i128 d = 1;
        for (size_t i = 0; i < frac.size(); ++i) d = checked_mul(d, 10, "rat parse");
        return make(n, d);
    }

  private:
    void init(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = n;
        den_ = d;
    }

    i128 num_;
    i128 den_;
};

inline Rat operator*(long long a, const Rat& b) { return Rat(a) * b; }
inline Rat operator+(long long a, const Rat& b) { return Rat(a) + b; }
inline Rat operator-(long long a, const Rat& b) { return Rat(a) - b; }

}  // namespace paralat
