#pragma once

#include <vector>

#include "birchlab/rational.hpp"

namespace birchlab {

// Dense exact rational matrix; entries in our use have p-power denominators.
class Mat {
  public:
    Mat() : n_(0) {}
    explicit Mat(int n) : n_(n), a_(n * n, Rat(0)) {}
    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static Mat diag(const std::vector<Rat>& d) {
        Mat m(static_cast<int>(d.size()));
        for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
        return m;
    }
    // Permutation matrix for sigma under the convention (P x)_i = x_{sigma(i)},
    // i.e. P_{i,j} = [j == sigma(i)] with sigma 0-indexed.
    static Mat permutation(const std::vector<int>& sigma) {
        Mat m(static_cast<int>(sigma.size()));
        for (size_t i = 0; i < sigma.size(); ++i) m.at(i, sigma[i]) = 1;
        return m;
    }

    int size() const { return n_; }
    Rat& at(int i, int j) { return a_[i * n_ + j]; }
    const Rat& at(int i, int j) const { return a_[i * n_ + j]; }

    Mat operator*(const Mat& o) const {
        Mat r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const Rat& x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < n_; ++j)
                    if (o.at(k, j) != 0) r.at(i, j) += x * o.at(k, j);
            }
        return r;
    }
    Mat operator+(const Mat& o) const {
        Mat r(n_);
        for (int i = 0; i < n_ * n_; ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        Mat r(n_);
        for (int i = 0; i < n_ * n_; ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    Mat operator*(const Rat& c) const {
        Mat r(n_);
        for (int i = 0; i < n_ * n_; ++i) r.a_[i] = a_[i] * c;
        return r;
    }
    bool operator==(const Mat& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Rat det() const;
    Mat inverse() const;
    Mat transpose() const {
        Mat r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // All entries integral at p (valuation >= bound).
    bool entries_val_at_least(long p, long bound) const {
        for (const Rat& x : a_)
            if (x != 0 && val_p(x, p) < bound) return false;
        return true;
    }

    bool is_upper_triangular() const {
        for (int i = 1; i < n_; ++i)
            for (int j = 0; j < i; ++j)
                if (at(i, j) != 0) return false;
        return true;
    }
    bool is_unipotent_upper() const {
        if (!is_upper_triangular()) return false;
        for (int i = 0; i < n_; ++i)
            if (at(i, i) != 1) return false;
        return true;
    }

    // Membership in I^n_alpha: integral, invertible over Z_p, and upper
    // triangular mod p^alpha.
    bool in_iwahori(long p, long alpha) const;
    // Membership in the principal congruence subgroup 1 + p^k M_n(Z_p).
    bool in_principal_congruence(long p, long k) const;
    // Membership in GL_n(Z_p).
    bool in_glnzp(long p) const;

    // Block embedding g -> diag(g, p^delta) into GL_{n+1}.
    Mat embed_corner(long p, long delta) const {
        Mat r(n_ + 1);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j);
        r.at(n_, n_) = pow_p(p, delta);
        return r;
    }

    std::string str() const;

  private:
    int n_;
    std::vector<Rat> a_;
};

inline std::vector<int> identity_perm(int n) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = i;
    return s;
}

inline std::vector<int> longest_perm(int n) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = n - 1 - i;
    return s;
}

std::vector<std::vector<int>> all_permutations(int n);

// b * omega * u with b upper triangular, omega a permutation matrix, u
// unipotent upper triangular; the cell omega is uniquely determined.
struct BruhatData {
    Mat b;
    std::vector<int> omega;  // sigma, 0-indexed: P_{i,sigma(i)} = 1
    Mat u;
    bool u_integral_at(long p) const { return u.entries_val_at_least(p, 0); }
};

BruhatData bruhat_decompose(const Mat& m);

}  // namespace birchlab
