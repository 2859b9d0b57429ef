#pragma once

#include <map>
#include <vector>

#include "birchlab/rational.hpp"

namespace birchlab {

// Integer polynomial Phi_N (cyclotomic), cached per conductor.
const std::vector<Int>& cyclotomic_polynomial(long N);

// Element of Q(zeta_N), held as a sparse polynomial in zeta_N with exponents
// reduced mod N.  Canonical reduction mod Phi_N happens only on demand
// (equality tests, serialization), which keeps the hot summation loops cheap.
class Cyc {
  public:
    Cyc() : N_(1) {}
    explicit Cyc(const Rat& c, long N = 1) : N_(N) {
        if (c != 0) terms_[0] = c;
    }
    static Cyc zero(long N) { return Cyc(Rat(0), N); }
    static Cyc one(long N) { return Cyc(Rat(1), N); }
    // coeff * zeta_N^k
    static Cyc monomial(long N, long k, const Rat& coeff = Rat(1)) {
        Cyc z(Rat(0), N);
        if (coeff != 0) z.terms_[((k % N) + N) % N] = coeff;
        return z;
    }

    long conductor() const { return N_; }
    bool structurally_zero() const { return terms_.empty(); }

    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc operator+(const Cyc& o) const { Cyc r = *this; r += o; return r; }
    Cyc operator-(const Cyc& o) const { Cyc r = *this; r -= o; return r; }
    Cyc operator-() const;
    Cyc operator*(const Cyc& o) const;
    Cyc& operator*=(const Cyc& o) { *this = *this * o; return *this; }
    Cyc operator*(const Rat& c) const;
    Cyc& operator*=(const Rat& c) { *this = *this * c; return *this; }

    // acc += c * zeta^k * v  (fused hot-path step; v and acc share N).
    void add_scaled_monomial(const Rat& c, long k, const Cyc& v);

    // Canonical coefficient vector on the basis 1, zeta, ..., zeta^{phi(N)-1}.
    std::vector<Rat> canonical() const;

    bool is_zero() const;
    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    // Returns the rational value if the element lies in Q, else fails.
    Rat as_rational() const;
    bool is_rational(Rat* out = nullptr) const;

    // Image under zeta_N -> zeta_N^t for t coprime to N (Galois action).
    Cyc galois(long t) const;
    // Complex-conjugation automorphism zeta -> zeta^{-1}.
    Cyc conj() const { return galois(N_ - 1); }

    // Image in Q(zeta_M) for N | M under zeta_N -> zeta_M^{M/N}.
    Cyc embed(long M) const;

    const std::map<long, Rat>& raw_terms() const { return terms_; }

    std::string str() const;

  private:
    long N_;
    std::map<long, Rat> terms_;  // exponent (mod N) -> coefficient

    void check_same(const Cyc& o) const {
        require(N_ == o.N_, ErrorCode::internal,
                "cyclotomic conductor mismatch: " + std::to_string(N_) + " vs " +
                    std::to_string(o.N_));
    }
};

inline Cyc operator*(const Rat& c, const Cyc& z) { return z * c; }

}  // namespace birchlab
