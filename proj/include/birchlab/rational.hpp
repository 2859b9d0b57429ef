#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

#include "birchlab/errors.hpp"

namespace birchlab {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

// p-adic valuation of a nonzero rational; INT64_MIN-free: callers must not
// pass zero (valuation of 0 is +infinity by convention).
inline long val_p(const Int& x, long p) {
    if (x == 0) fail(ErrorCode::internal, "val_p of zero integer");
    Int t = x;
    long v = 0;
    Int q, r;
    while (true) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), Int(p).get_mpz_t());
        if (r != 0) break;
        t = q;
        ++v;
    }
    return v;
}

inline long val_p(const Rat& x, long p) {
    if (x == 0) fail(ErrorCode::internal, "val_p of zero rational");
    return val_p(Int(x.get_num()), p) - val_p(Int(x.get_den()), p);
}

inline Int pow_int(long base, long exp) {
    if (exp < 0) fail(ErrorCode::internal, "pow_int negative exponent");
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

// p^k as a rational, k of either sign.
inline Rat pow_p(long p, long k) {
    if (k >= 0) return Rat(pow_int(p, k));
    Rat r(1);
    r /= Rat(pow_int(p, -k));
    return r;
}

inline Rat pow_rat(const Rat& x, long k) {
    if (k == 0) return Rat(1);
    if (x == 0) {
        if (k < 0) fail(ErrorCode::internal, "pow_rat: 0^negative");
        return Rat(0);
    }
    Rat base = x;
    long e = k;
    if (e < 0) {
        base = Rat(1) / base;
        e = -e;
    }
    Rat acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// Unit part of x mod p^m: for x with val_p(x) = 0 (a p-adic unit written as
// a rational), returns the residue of x in (Z/p^m)^x as a nonnegative long.
inline long unit_mod(const Rat& x, long p, long m) {
    Int mod = pow_int(p, m);
    Int num = x.get_num(), den = x.get_den();
    Int deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        fail(ErrorCode::internal, "unit_mod: denominator not invertible");
    Int r = (num % mod) * deninv % mod;
    if (r < 0) r += mod;
    long out = mpz_get_si(r.get_mpz_t());
    return out;
}

// Writes x = p^v * u and returns (v, u mod p^m) for nonzero rational x.
inline std::pair<long, long> val_unit_mod(const Rat& x, long p, long m) {
    long v = val_p(x, p);
    Rat u = x / pow_p(p, v);
    return {v, unit_mod(u, p, m)};
}

inline long lcm_long(long a, long b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), Int(a).get_mpz_t(), Int(b).get_mpz_t());
    return a / mpz_get_si(g.get_mpz_t()) * b;
}

inline long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            while (m % d == 0) m /= d;
            result -= result / d;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline long mod_pow_long(long base, long exp, long mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), Int(base).get_mpz_t(), Int(exp).get_mpz_t(),
             Int(mod).get_mpz_t());
    return mpz_get_si(r.get_mpz_t());
}

inline long mod_inv_long(long a, long mod) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), Int(a).get_mpz_t(), Int(mod).get_mpz_t()) == 0)
        fail(ErrorCode::internal, "mod_inv_long: not invertible");
    return mpz_get_si(r.get_mpz_t());
}

}  // namespace birchlab
