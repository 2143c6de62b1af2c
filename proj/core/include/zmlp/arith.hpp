#pragma once

#include <cstdint>
#include <stdexcept>
#include <gmpxx.h>

namespace zmlp {

// Lattice coordinates are checked 64-bit integers; coefficients are unbounded.
using Int = std::int64_t;
using BigInt = mpz_class;
using Rational = mpq_class;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("lattice coordinate overflow");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("lattice coordinate overflow");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("lattice coordinate overflow");
    return r;
}

inline Int abs_int(Int a) { return a < 0 ? checked_sub(0, a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Returns g = gcd(a, b) >= 0 and sets s, t with s*a + t*b = g.
inline Int ext_gcd(Int a, Int b, Int& s, Int& t) {
    Int old_r = a, r = b, old_s = 1, ss = 0, old_t = 0, tt = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * ss;
        old_s = ss;
        ss = tmp;
        tmp = old_t - q * tt;
        old_t = tt;
        tt = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    s = old_s;
    t = old_t;
    return old_r;
}

// Floor modulo with result in [0, |m|).
inline Int mod_floor(Int a, Int m) {
    m = abs_int(m);
    Int r = a % m;
    return r < 0 ? r + m : r;
}

inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace zmlp
