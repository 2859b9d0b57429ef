#pragma once

#include <map>

#include "birchlab/cyclotomic.hpp"

namespace birchlab {

// Laurent polynomial in Y = q^{1/2 - s} with cyclotomic coefficients.  All
// s-dependence in the local theory passes through integer powers of Y.
class YSeries {
  public:
    explicit YSeries(long N) : N_(N) {}
    static YSeries monomial(long N, long exp, const Cyc& c) {
        YSeries s(N);
        if (!c.is_zero()) s.coeffs_[exp] = c;
        return s;
    }

    long ambient() const { return N_; }
    bool empty() const { return coeffs_.empty(); }

    void add(long exp, const Cyc& c) {
        auto it = coeffs_.find(exp);
        if (it == coeffs_.end()) {
            if (!c.structurally_zero()) coeffs_.emplace(exp, c);
        } else {
            it->second += c;
        }
    }

    YSeries operator+(const YSeries& o) const {
        YSeries r = *this;
        for (auto& [e, c] : o.coeffs_) r.add(e, c);
        return r;
    }
    YSeries operator-() const {
        YSeries r(N_);
        for (auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
        return r;
    }
    YSeries operator-(const YSeries& o) const { return *this + (-o); }
    YSeries operator*(const YSeries& o) const {
        YSeries r(N_);
        for (auto& [e1, c1] : coeffs_)
            for (auto& [e2, c2] : o.coeffs_) r.add(e1 + e2, c1 * c2);
        return r;
    }
    YSeries operator*(const Cyc& c) const {
        YSeries r(N_);
        for (auto& [e, v] : coeffs_) r.add(e, v * c);
        return r;
    }
    YSeries operator*(const Rat& c) const {
        YSeries r(N_);
        for (auto& [e, v] : coeffs_) r.add(e, v * c);
        return r;
    }

    // Canonicalize: drop coefficients that reduce to zero mod Phi_N.
    YSeries normalized() const {
        YSeries r(N_);
        for (auto& [e, c] : coeffs_)
            if (!c.is_zero()) r.coeffs_.emplace(e, c);
        return r;
    }

    bool is_zero() const {
        for (auto& [e, c] : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool operator==(const YSeries& o) const { return (*this - o).is_zero(); }
    bool operator!=(const YSeries& o) const { return !(*this == o); }

    const std::map<long, Cyc>& coeffs() const { return coeffs_; }

    std::string str() const {
        std::string s;
        YSeries n = normalized();
        if (n.coeffs_.empty()) return "0";
        for (auto& [e, c] : n.coeffs_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")*Y^" + std::to_string(e);
        }
        return s;
    }

  private:
    long N_;
    std::map<long, Cyc> coeffs_;
};

// Truncated power series in X = q^{-s} with cyclotomic coefficients, for the
// unramified Euler factor comparisons.
class XSeries {
  public:
    XSeries(long N, long order) : N_(N), c_(order + 1, Cyc::zero(N)) {}
    static XSeries one(long N, long order) {
        XSeries s(N, order);
        s.c_[0] = Cyc::one(N);
        return s;
    }
    long order() const { return static_cast<long>(c_.size()) - 1; }
    Cyc& at(long k) { return c_[k]; }
    const Cyc& at(long k) const { return c_[k]; }

    XSeries operator*(const XSeries& o) const {
        XSeries r(N_, order());
        for (long i = 0; i <= order(); ++i)
            for (long j = 0; i + j <= order(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        return r;
    }
    XSeries operator+(const XSeries& o) const {
        XSeries r(N_, order());
        for (long i = 0; i <= order(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    // multiplicative inverse of a series with invertible rational constant term
    XSeries inverse() const {
        Rat c0 = c_[0].as_rational();
        require(c0 != 0, ErrorCode::precondition, "series not invertible");
        XSeries r(N_, order());
        r.c_[0] = Cyc(Rat(1) / c0, N_);
        for (long k = 1; k <= order(); ++k) {
            Cyc acc = Cyc::zero(N_);
            for (long j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
            r.c_[k] = acc * (Rat(-1) / c0);
        }
        return r;
    }
    bool operator==(const XSeries& o) const {
        for (long i = 0; i <= order(); ++i)
            if (!(c_[i] - o.c_[i]).is_zero()) return false;
        return true;
    }

  private:
    long N_;
    std::vector<Cyc> c_;
};

}  // namespace birchlab
