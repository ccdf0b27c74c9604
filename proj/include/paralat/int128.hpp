#pragma once

// 128-bit integer helpers for the exact-arithmetic layer.  Every wide
// product or sum that could plausibly overflow goes through a checked_*
// wrapper, so a width violation surfaces as std::overflow_error instead of
// silently corrupting a count.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace paralat {

using i128 = __int128;
using u128 = unsigned __int128;

[[noreturn]] inline void throw_overflow(const char* ctx) {
    throw std::overflow_error(std::string("128-bit overflow in ") + ctx);
}

inline i128 checked_add(i128 a, i128 b, const char* ctx = "add") {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow(ctx);
    return r;
}

inline i128 checked_sub(i128 a, i128 b, const char* ctx = "sub") {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw_overflow(ctx);
    return r;
}

inline i128 checked_mul(i128 a, i128 b, const char* ctx = "mul") {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow(ctx);
    return r;
}

// |x|; callers stay far below the i128 minimum, where negation would wrap.
inline i128 iabs128(i128 x) { return x < 0 ? -x : x; }

inline i128 gcd128(i128 a, i128 b) {
    a = iabs128(a);
    b = iabs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i128 lcm128(i128 a, i128 b, const char* ctx = "lcm") {
    if (a == 0 || b == 0) return 0;
    i128 g = gcd128(a, b);
    return checked_mul(iabs128(a) / g, iabs128(b), ctx);
}

inline std::string to_string_i128(i128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    u128 v = neg ? (u128)0 - (u128)x : (u128)x;
    char buf[48];
    int i = 48;
    while (v > 0) {
        buf[--i] = char('0' + (int)(v % 10));
        v /= 10;
    }
    if (neg) buf[--i] = '-';
    return std::string(buf + i, buf + 48);
}

inline i128 parse_i128(std::string_view s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = (s[i] == '-');
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("empty integer literal");
    u128 v = 0;
    const u128 lim = ((u128)1 << 127) - (neg ? 0 : 1);  // |i128 min| or i128 max
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad digit in integer literal");
        int d = s[i] - '0';
        if (v > (lim - d) / 10) throw_overflow("integer literal");
        v = v * 10 + d;
    }
    return neg ? -(i128)v : (i128)v;
}

// floor(sqrt(n)); exact, double estimate plus correction steps.
inline uint64_t isqrt64(uint64_t n) {
    if (n == 0) return 0;
    uint64_t r = (uint64_t)sqrtl((long double)n);
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

inline i128 isqrt128(i128 n) {
    if (n < 0) throw std::domain_error("isqrt128 of negative value");
    if (n == 0) return 0;
    u128 v = (u128)n;
    u128 r = (u128)sqrtl((long double)v);
    if (r == 0) r = 1;
    // Newton step then local correction; converges from the float estimate.
    r = (r + v / r) / 2;
    while (r > v / r) r = (r + v / r) / 2;
    while ((r + 1) <= v / (r + 1)) ++r;
    return (i128)r;
}

inline bool is_square128(i128 n, i128* root = nullptr) {
    if (n < 0) return false;
    i128 r = isqrt128(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

}  // namespace paralat
