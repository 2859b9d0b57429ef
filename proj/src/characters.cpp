#include "birchlab/characters.hpp"

#include <numeric>

namespace birchlab {

UnitCharacter::UnitCharacter(long p, long e, long order, std::vector<long> exps)
    : p_(p), e_(e), order_(order), exps_(std::move(exps)) {
    require(e >= 0 && order >= 1, ErrorCode::precondition, "bad unit character data");
    if (e_ > 0)
        require(static_cast<long>(exps_.size()) == modulus(), ErrorCode::precondition,
                "unit character table has wrong size");
    reduce_to_conductor();
}

namespace {
std::vector<long> prime_divisors(long n) {
    std::vector<long> out;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    if (n > 1) out.push_back(n);
    return out;
}
}  // namespace

long least_primitive_root(long p, long e) {
    long m = mpz_get_si(pow_int(p, e).get_mpz_t());
    long phi = euler_phi(m);
    std::vector<long> qs = prime_divisors(phi);
    for (long cand = 2; cand < m; ++cand) {
        if (cand % p == 0) continue;
        bool prim = true;
        for (long q : qs)
            if (mod_pow_long(cand, phi / q, m) == 1) { prim = false; break; }
        if (prim) return cand;
    }
    fail(ErrorCode::internal, "no primitive root found");
}

UnitCharacter UnitCharacter::cyclic(long p, long e, long order, long k) {
    require(p % 2 == 1, ErrorCode::precondition, "cyclic constructor needs odd p");
    if (e == 0) return UnitCharacter(p);
    long m = mpz_get_si(pow_int(p, e).get_mpz_t());
    long phi = euler_phi(m);
    require(phi % order == 0, ErrorCode::precondition,
            "character order must divide the unit group order");
    long g = least_primitive_root(p, e);
    std::vector<long> exps(m, 0);
    long cur = 1;
    for (long i = 0; i < phi; ++i) {
        exps[cur] = ((i * k) % order + order) % order;
        cur = (cur * g) % m;
    }
    return UnitCharacter(p, e, order, std::move(exps));
}

UnitCharacter UnitCharacter::two_adic(long e, long order, long k_minus, long k_five) {
    if (e == 0) return UnitCharacter(2);
    long m = mpz_get_si(pow_int(2, e).get_mpz_t());
    std::vector<long> exps(m, 0);
    if (e == 1) return UnitCharacter(2, 1, order, std::move(exps));
    // (Z/2^e)^x = <-1> x <5>
    long half = m / 4;  // order of 5 mod 2^e is 2^{e-2}
    for (long s = 0; s <= 1; ++s) {
        long base = s == 0 ? 1 : m - 1;
        long cur = base;
        for (long i = 0; i < half; ++i) {
            exps[cur] = ((s * k_minus + i * k_five) % order + order) % order;
            cur = (cur * 5) % m;
        }
    }
    return UnitCharacter(2, e, order, std::move(exps));
}

void UnitCharacter::reduce_to_conductor() {
    while (e_ > 0) {
        long m = modulus();
        long msmall = m / p_;
        bool factors = true;
        for (long r = 0; r < msmall && factors; ++r) {
            long base = -1;
            for (long w = r; w < m; w += msmall) {
                if (w % p_ != 0) {
                    if (base < 0) base = exps_[w];
                    else if (exps_[w] != base) { factors = false; break; }
                }
            }
        }
        if (!factors) break;
        if (e_ == 1) {
            e_ = 0;
            order_ = 1;
            exps_.clear();
            return;
        }
        std::vector<long> small(msmall, 0);
        for (long u = 1; u < msmall; ++u)
            if (u % p_ != 0) small[u] = exps_[u];
        exps_ = std::move(small);
        --e_;
    }
    if (e_ > 0) {
        // express values with the minimal root-of-unity order
        long g = order_;
        for (long u = 0; u < modulus(); ++u)
            if (u % p_ != 0 && exps_[u] != 0) g = std::gcd(g, exps_[u]);
        if (g > 1) {
            for (auto& x : exps_) x /= g;
            order_ /= g;
        }
        if (order_ == 1) { e_ = 0; exps_.clear(); }
    }
}

long UnitCharacter::exponent_in(long ambientN, long u) const {
    if (e_ == 0) return 0;
    long m = modulus();
    long r = ((u % m) + m) % m;
    require(r % p_ != 0, ErrorCode::precondition, "evaluating unit character off units");
    require(ambientN % order_ == 0, ErrorCode::window_insufficient,
            "ambient cyclotomic field too small for character order");
    return exps_[r] * (ambientN / order_);
}

UnitCharacter UnitCharacter::operator*(const UnitCharacter& o) const {
    require(p_ == o.p_, ErrorCode::precondition, "prime mismatch in character product");
    if (e_ == 0 && o.e_ == 0) return UnitCharacter(p_);
    long e = std::max(e_, o.e_);
    long m = mpz_get_si(pow_int(p_, e).get_mpz_t());
    long ord = std::lcm(std::max<long>(order_, 1), std::max<long>(o.order_, 1));
    std::vector<long> exps(m, 0);
    for (long u = 0; u < m; ++u) {
        if (u % p_ != 0) {
            long a = e_ == 0 ? 0 : exps_[u % modulus()] * (ord / order_);
            long b = o.e_ == 0 ? 0 : o.exps_[u % o.modulus()] * (ord / o.order_);
            exps[u] = (a + b) % ord;
        }
    }
    return UnitCharacter(p_, e, ord, std::move(exps));
}

UnitCharacter UnitCharacter::inverse() const {
    if (e_ == 0) return *this;
    std::vector<long> exps(exps_.size(), 0);
    for (size_t u = 0; u < exps_.size(); ++u)
        if (u % p_ != 0) exps[u] = (order_ - exps_[u]) % order_;
    return UnitCharacter(p_, e_, order_, std::move(exps));
}

bool UnitCharacter::operator==(const UnitCharacter& o) const {
    if (p_ != o.p_ || e_ != o.e_) return false;
    if (e_ == 0) return true;
    long ord = std::lcm(order_, o.order_);
    for (size_t u = 0; u < exps_.size(); ++u)
        if (u % p_ != 0 && exps_[u] * (ord / order_) != o.exps_[u] * (ord / o.order_))
            return false;
    return true;
}

long UnitCharacter::value_at_minus_one_sign() const {
    if (e_ == 0) return 1;
    long m = modulus();
    long k = exps_[m - 1];
    // zeta_order^k with (-1)^2 = 1 forces k in {0, order/2}
    return k == 0 ? 1 : -1;
}

Cyc gauss_sum(const QuasiCharacter& chi, const AdditiveCharacter& psi) {
    long p = chi.p();
    require(p == psi.prime(), ErrorCode::precondition, "prime mismatch");
    long c = chi.conductor_exponent();
    long N = psi.ambient();
    if (c == 0) return Cyc::one(N);
    long m = mpz_get_si(pow_int(p, c).get_mpz_t());
    Cyc acc = Cyc::zero(N);
    Rat fc = pow_p(p, c);
    for (long x = 1; x < m; ++x) {
        if (x % p == 0) continue;
        // chi(x/p^c) psi(x/p^c)
        long e_chi = chi.unit_part().exponent_in(N, x);
        long e_psi = psi.sign() * psi.exponent(Rat(x) / fc);
        acc.add_scaled_monomial(Rat(1), e_chi + e_psi, Cyc::one(N));
    }
    return acc * pow_rat(chi.value_at_p(), -c);
}

Cyc twisted_char_sum_bruteforce(const QuasiCharacter& chi, const AdditiveCharacter& psi,
                                const Rat& g, long m) {
    require(g != 0, ErrorCode::precondition, "g must be nonzero");
    long p = chi.p();
    long N = psi.ambient();
    long mod = mpz_get_si(pow_int(p, m).get_mpz_t());
    Cyc acc = Cyc::zero(N);
    for (long x = 1; x < mod; ++x) {
        if (x % p == 0) continue;
        Rat arg = Rat(x) / g;
        acc += chi.eval(N, arg) * psi.eval_signed(arg);
    }
    return acc;
}

Cyc unit_sum_with_additive_twist(const QuasiCharacter& eta, const AdditiveCharacter& psi,
                                 const Rat& c, long m) {
    long p = eta.p();
    long N = psi.ambient();
    long e = eta.conductor_exponent();
    long phi_pm = mpz_get_si(pow_int(p, m).get_mpz_t()) / p * (p - 1);
    if (c == 0) {
        if (e == 0) return Cyc(Rat(phi_pm), N);
        return Cyc::zero(N);
    }
    long k = -val_p(c, p);  // depth of the additive twist
    require(k <= m, ErrorCode::precondition,
            "unit_sum_with_additive_twist: twist deeper than summation modulus");
    if (k <= 0) {
        // psi(c*gamma) = 1 on the whole range
        if (e == 0) return Cyc(Rat(phi_pm), N);
        return Cyc::zero(N);
    }
    if (e == 0) {
        // Ramanujan-type: sum over units of psi(c gamma)
        // = sum over all residues - sum over p-divisible ones
        if (k >= 2) return Cyc::zero(N);
        // k == 1: full sum 0, p-divisible part p^{m-1}
        return Cyc(Rat(-mpz_get_si(pow_int(p, m - 1).get_mpz_t())), N);
    }
    if (k != e) return Cyc::zero(N);
    // q^{m-k} * eta(c^{-1}) * G(eta)
    Cyc g = gauss_sum(eta, psi);
    Cyc etaval = eta.eval(N, Rat(1) / c);
    return g * etaval * Rat(pow_int(p, m - k));
}

Cyc twisted_char_sum(const QuasiCharacter& chi, const AdditiveCharacter& psi,
                     const Rat& g, long m) {
    require(g != 0, ErrorCode::precondition, "g must be nonzero");
    // substitute x = g * t: sum over x units mod p^m of chi(x/g) psi(x/g)
    //   = sum over units t of chi(t) psi(t/g') with the unit of g absorbed:
    // direct reduction: chi(x/g) psi(x/g) with x unit: x/g = (x * g^{-1});
    // write g = p^v u: chi(x/g) = chi(x) chi(g)^{-1}; psi(x/g) = psi(x * g^{-1}).
    long N = psi.ambient();
    Cyc chig_inv = chi.eval(N, Rat(1) / g);
    Cyc core = unit_sum_with_additive_twist(chi, psi, Rat(1) / g, m);
    // unit_sum computes sum chi(t) psi(t/g); multiply by chi(g^{-1}).
    return chig_inv * core;
}

}  // namespace birchlab
