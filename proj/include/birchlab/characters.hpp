#pragma once

#include <optional>
#include <vector>

#include "birchlab/cyclotomic.hpp"

namespace birchlab {

// Additive character of Q_p with conductor Z_p, normalized by
// psi(a/p^m) = zeta_{p^m}^a.  Values are taken in a fixed ambient Q(zeta_N);
// N must absorb every p-power depth that actually occurs.
class AdditiveCharacter {
  public:
    AdditiveCharacter(long p, long ambientN) : p_(p), N_(ambientN) {}

    long prime() const { return p_; }
    long ambient() const { return N_; }

    // zeta-exponent of psi(x) in zeta_N, or nullopt when psi(x) = 1.
    long exponent(const Rat& x) const {
        if (x == 0) return 0;
        long v = val_p(x, p_);
        if (v >= 0) return 0;
        long m = -v;
        Int pm = pow_int(p_, m);
        require(N_ % mpz_get_si(pm.get_mpz_t()) == 0, ErrorCode::window_insufficient,
                "additive character depth exceeds ambient cyclotomic field");
        long a = unit_mod(x * Rat(pm), p_, m);
        return a * (N_ / mpz_get_si(pm.get_mpz_t()));
    }

    Cyc operator()(const Rat& x) const { return Cyc::monomial(N_, exponent(x)); }

    // Extension to U_n(F): product of psi over the superdiagonal.
    template <typename MatrixLike>
    Cyc eval_unipotent(const MatrixLike& u) const {
        Rat s(0);
        for (int i = 0; i + 1 < u.size(); ++i) s += u.at(i, i + 1);
        return (*this)(s);
    }

    AdditiveCharacter inverse_character() const {
        AdditiveCharacter c(p_, N_);
        c.sign_ = -sign_;
        return c;
    }

    // +1 for psi, -1 for psi-bar; applied on top of exponent().
    int sign() const { return sign_; }
    Cyc eval_signed(const Rat& x) const { return Cyc::monomial(N_, sign_ * exponent(x)); }

  private:
    long p_;
    long N_;
    int sign_ = 1;
};

// Character of the units (Z/p^e)^x given by a table of root-of-unity
// exponents relative to a common order.  The stored exponent e is always the
// exact conductor exponent (the table is reduced at construction).
class UnitCharacter {
  public:
    // Trivial character.
    explicit UnitCharacter(long p) : p_(p), e_(0), order_(1) {}

    // Table constructor: exps[u] is defined for u in (Z/p^e)^x.
    UnitCharacter(long p, long e, long order, std::vector<long> exps);

    // Character sending a chosen generator system to given exponents:
    // p odd: g generates (Z/p^e)^x, value zeta_order^k.
    // p = 2, e >= 3: generators -1 and 5 with exponents (k_minus, k_five).
    static UnitCharacter cyclic(long p, long e, long order, long k);
    static UnitCharacter two_adic(long e, long order, long k_minus, long k_five);

    long prime() const { return p_; }
    long conductor_exponent() const { return e_; }
    long order() const { return order_; }
    bool trivial() const { return e_ == 0; }

    // zeta_N-exponent of the value at a unit u (u given mod p^m, m >= e_).
    long exponent_in(long ambientN, long u) const;
    Cyc eval(long ambientN, long u) const {
        return Cyc::monomial(ambientN, exponent_in(ambientN, u));
    }
    Cyc eval_rat(long ambientN, const Rat& x) const {
        if (e_ == 0) return Cyc::one(ambientN);
        return eval(ambientN, unit_mod(x, p_, e_));
    }

    UnitCharacter operator*(const UnitCharacter& o) const;
    UnitCharacter inverse() const;
    bool operator==(const UnitCharacter& o) const;

    long value_at_minus_one_sign() const;  // +1 or -1

  private:
    void reduce_to_conductor();
    long p_;
    long e_;      // exact conductor exponent
    long order_;  // values lie in mu_order
    std::vector<long> exps_;  // indexed by unit residues mod p^e (size p^e), only units used

    long modulus() const { return mpz_get_si(pow_int(p_, e_).get_mpz_t()); }
};

// Quasi-character of Q_p^x: unit-part character times a rational value at p.
class QuasiCharacter {
  public:
    QuasiCharacter(UnitCharacter unit, Rat value_at_p)
        : unit_(std::move(unit)), pi_(std::move(value_at_p)) {
        require(pi_ != 0, ErrorCode::precondition, "value at the uniformizer must be nonzero");
    }
    static QuasiCharacter trivial(long p) { return QuasiCharacter(UnitCharacter(p), Rat(1)); }

    long prime() const { return unit_.prime(); }
    long conductor_exponent() const { return unit_.conductor_exponent(); }
    const UnitCharacter& unit_part() const { return unit_; }
    const Rat& value_at_p() const { return pi_; }
    bool unramified() const { return unit_.trivial(); }

    Cyc eval(long ambientN, const Rat& x) const {
        long v = val_p(x, p());
        Rat u = x / pow_p(p(), v);
        Cyc r = unit_.eval_rat(ambientN, u);
        return r * pow_rat(pi_, v);
    }
    long p() const { return unit_.prime(); }

    QuasiCharacter operator*(const QuasiCharacter& o) const {
        return QuasiCharacter(unit_ * o.unit_, pi_ * o.pi_);
    }
    QuasiCharacter inverse() const {
        return QuasiCharacter(unit_.inverse(), Rat(1) / pi_);
    }

    // Minimal zeta-order needed to express values on units.
    long value_order() const { return unit_.order(); }

  private:
    UnitCharacter unit_;
    Rat pi_;
};

long least_primitive_root(long p, long e);

// Gauss sum G(chi) = sum_{x mod p^c} chi(x/p^c) psi(x/p^c); 1 for unramified chi.
Cyc gauss_sum(const QuasiCharacter& chi, const AdditiveCharacter& psi);

// sum over x in (O/p^m)^x of chi(x/g) psi(x/g), literal term-by-term sum.
Cyc twisted_char_sum_bruteforce(const QuasiCharacter& chi, const AdditiveCharacter& psi,
                                const Rat& g, long m);

// Closed form for the same sum via the vanishing relation; m is the modulus
// exponent of the summation range (must dominate both conductor and depth).
Cyc twisted_char_sum(const QuasiCharacter& chi, const AdditiveCharacter& psi,
                     const Rat& g, long m);

// Unit-character sum with an additive twist:
//   sum over gamma in (Z/p^m)^x of eta(gamma) * psi(c * gamma).
// This is the kernel of the torus summation; closed-form evaluation.
Cyc unit_sum_with_additive_twist(const QuasiCharacter& eta, const AdditiveCharacter& psi,
                                 const Rat& c, long m);

}  // namespace birchlab
