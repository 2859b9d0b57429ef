#include "birchlab/cyclotomic.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

namespace birchlab {

namespace {

// Exact division of integer polynomials, used to build Phi_N from x^N - 1.
std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    std::vector<Int> q(num.size() - den.size() + 1, Int(0));
    for (long i = static_cast<long>(num.size()) - 1;
         i >= static_cast<long>(den.size()) - 1; --i) {
        Int c = num[i] / den.back();
        long shift = i - (static_cast<long>(den.size()) - 1);
        q[shift] = c;
        if (c != 0)
            for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    return q;
}

std::vector<Int> compute_phi(long N);

std::unordered_map<long, std::vector<Int>> phi_cache;
std::mutex phi_mutex;

std::vector<Int> compute_phi(long N) {
    if (N == 1) return {Int(-1), Int(1)};
    std::vector<Int> num(N + 1, Int(0));
    num[0] = -1;
    num[N] = 1;
    for (long d = 1; d < N; ++d) {
        if (N % d == 0) {
            const std::vector<Int>& phid = cyclotomic_polynomial(d);
            num = poly_divide_exact(std::move(num), phid);
        }
    }
    return num;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long N) {
    {
        std::lock_guard<std::mutex> lock(phi_mutex);
        auto it = phi_cache.find(N);
        if (it != phi_cache.end()) return it->second;
    }
    std::vector<Int> phi = compute_phi(N);
    std::lock_guard<std::mutex> lock(phi_mutex);
    return phi_cache.emplace(N, std::move(phi)).first->second;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
    check_same(o);
    Cyc r(Rat(0), N_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            long k = k1 + k2;
            if (k >= N_) k -= N_;
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                r.terms_.emplace(k, c1 * c2);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

Cyc Cyc::operator*(const Rat& c) const {
    Cyc r(Rat(0), N_);
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

void Cyc::add_scaled_monomial(const Rat& c, long k, const Cyc& v) {
    check_same(v);
    if (c == 0) return;
    k = ((k % N_) + N_) % N_;
    for (const auto& [kv, cv] : v.terms_) {
        long kk = kv + k;
        if (kk >= N_) kk -= N_;
        auto it = terms_.find(kk);
        if (it == terms_.end()) {
            terms_.emplace(kk, c * cv);
        } else {
            it->second += c * cv;
            if (it->second == 0) terms_.erase(it);
        }
    }
}

std::vector<Rat> Cyc::canonical() const {
    const std::vector<Int>& phi = cyclotomic_polynomial(N_);
    long deg = static_cast<long>(phi.size()) - 1;
    std::vector<Rat> dense(N_ == 1 ? 1 : N_, Rat(0));
    for (const auto& [k, c] : terms_) dense[k] += c;
    // Reduce mod Phi_N from the top.
    for (long i = static_cast<long>(dense.size()) - 1; i >= deg; --i) {
        if (dense[i] == 0) continue;
        Rat c = dense[i];  // phi is monic
        for (long j = 0; j <= deg; ++j) dense[i - deg + j] -= c * Rat(phi[j]);
    }
    dense.resize(deg);
    return dense;
}

bool Cyc::is_zero() const {
    if (terms_.empty()) return true;
    for (const Rat& c : canonical())
        if (c != 0) return false;
    return true;
}

bool Cyc::operator==(const Cyc& o) const {
    check_same(o);
    return (*this - o).is_zero();
}

bool Cyc::is_rational(Rat* out) const {
    std::vector<Rat> c = canonical();
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    if (out) *out = c.empty() ? Rat(0) : c[0];
    return true;
}

Rat Cyc::as_rational() const {
    Rat r;
    require(is_rational(&r), ErrorCode::internal, "cyclotomic value is not rational");
    return r;
}

Cyc Cyc::galois(long t) const {
    require(N_ == 1 || std::__gcd(((t % N_) + N_) % N_, N_) == 1, ErrorCode::internal,
            "galois exponent not coprime to conductor");
    Cyc r(Rat(0), N_);
    for (const auto& [k, c] : terms_) {
        long kk = ((k * (t % N_)) % N_ + N_) % N_;
        auto it = r.terms_.find(kk);
        if (it == r.terms_.end())
            r.terms_.emplace(kk, c);
        else
            it->second += c;
    }
    return r;
}

Cyc Cyc::embed(long M) const {
    require(M % N_ == 0, ErrorCode::precondition,
            "cyclotomic embedding requires divisible conductor");
    long s = M / N_;
    Cyc r(Rat(0), M);
    for (const auto& [k, c] : terms_) r.terms_[k * s] = c;
    return r;
}

std::string Cyc::str() const {
    std::vector<Rat> c = canonical();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        os << c[i].get_str();
        if (i > 0) os << "*z" << N_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace birchlab
