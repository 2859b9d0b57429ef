#pragma once

#include "birchlab/rational.hpp"

namespace birchlab {

// Scalar p^v * u with u a unit known mod p^L.  Addition tracks the loss of
// significant digits; dropping below one digit raises rather than returning
// an unreliable value.
class PadicScalar {
  public:
    PadicScalar(long p, long v, long unit, long L) : p_(p), v_(v), L_(L) {
        require(L >= 1, ErrorCode::precision_exhausted, "precision floor is one digit");
        long m = mod();
        u_ = ((unit % m) + m) % m;
        require(u_ % p != 0, ErrorCode::precondition, "unit part must be prime to p");
    }

    static PadicScalar from_rational(const Rat& x, long p, long L) {
        require(x != 0, ErrorCode::precondition, "zero has no finite-precision unit form");
        auto [v, u] = val_unit_mod(x, p, L);
        return PadicScalar(p, v, u, L);
    }

    long prime() const { return p_; }
    long valuation() const { return v_; }
    long unit() const { return u_; }
    long precision() const { return L_; }
    long mod() const { return mpz_get_si(pow_int(p_, L_).get_mpz_t()); }

    PadicScalar operator*(const PadicScalar& o) const {
        check(o);
        long L = std::min(L_, o.L_);
        long m = mpz_get_si(pow_int(p_, L).get_mpz_t());
        return PadicScalar(p_, v_ + o.v_, ((u_ % m) * (o.u_ % m)) % m, L);
    }

    PadicScalar inverse() const {
        return PadicScalar(p_, -v_, mod_inv_long(u_, mod()), L_);
    }

    // Addition cancels leading digits when valuations collide; the result's
    // precision shrinks accordingly and may exhaust.
    PadicScalar operator+(const PadicScalar& o) const {
        check(o);
        long v = std::min(v_, o.v_);
        long L = std::min(L_ + (v_ - v), o.L_ + (o.v_ - v));
        long m = mpz_get_si(pow_int(p_, L).get_mpz_t());
        long a = mod_pow_long(p_, v_ - v, m) * (u_ % m) % m;
        long b = mod_pow_long(p_, o.v_ - v, m) * (o.u_ % m) % m;
        long s = (a + b) % m;
        require(s != 0, ErrorCode::precision_exhausted,
                "sum is zero to working precision");
        long k = 0;
        while (s % p_ == 0) {
            s /= p_;
            ++k;
        }
        require(L - k >= 1, ErrorCode::precision_exhausted,
                "addition cancelled below the precision floor");
        return PadicScalar(p_, v + k, s, L - k);
    }

    bool congruent(const PadicScalar& o, long depth) const {
        check(o);
        if (v_ != o.v_) return false;  // for units-normalized comparison
        long m = mpz_get_si(pow_int(p_, depth).get_mpz_t());
        return (u_ - o.u_) % m == 0;
    }

  private:
    void check(const PadicScalar& o) const {
        require(p_ == o.p_, ErrorCode::precondition, "prime mismatch");
    }
    long p_, v_, u_, L_;
};

}  // namespace birchlab
