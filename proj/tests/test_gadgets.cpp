#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "birchlab/gadgets.hpp"

using namespace birchlab;
using namespace birchlab::gadgets;

TEST_CASE("verbatim small matrices") {
    // C_2 with f = p: [[1,0],[p,-1]]
    Mat c2 = mat_C(2, 3, 1);
    CHECK(c2.at(0, 0) == 1);
    CHECK(c2.at(0, 1) == 0);
    CHECK(c2.at(1, 0) == 3);
    CHECK(c2.at(1, 1) == -1);
    // w_2 = [[0,1],[1,0]]
    Mat w2 = mat_w(2);
    CHECK(w2.at(0, 1) == 1);
    CHECK(w2.at(1, 0) == 1);
    CHECK(w2.at(0, 0) == 0);
    // t_x = diag(x^n, ..., x)
    Mat t = mat_t(3, Rat(2));
    CHECK(t.at(0, 0) == 8);
    CHECK(t.at(2, 2) == 2);
    // h_2 in GL_3(Z): w_2 block, ones in last column
    Mat h = mat_h(2);
    CHECK(h.at(0, 1) == 1);
    CHECK(h.at(0, 2) == 1);
    CHECK(h.at(2, 2) == 1);
    CHECK(h.at(2, 0) == 0);
    // h_n j_n(t_{-1}) lands in GL(Z_p): integral entries, unit determinant
    for (int n = 1; n <= 4; ++n) {
        Mat hh = mat_h(n) * mat_t(n, Rat(-1)).embed_corner(2, 0);
        CHECK(hh.in_glnzp(2));
        CHECK(hh.in_glnzp(3));
    }
}

TEST_CASE("lambda form evaluates the bottom-row pairing") {
    // lambda_2^0 on the identity with f = p: b_2^t . 1 . phi_2 = f^{-1}
    long p = 5, alpha = 1;
    Rat v = lambda_form(Mat::identity(2), p, alpha, 0);
    CHECK(v == Rat(1, 5));
    // the p^{-delta} prefactor
    CHECK(lambda_form(Mat::identity(2), p, alpha, 1) == Rat(1, 25));
    CHECK(lambda_form(Mat::identity(2), p, alpha, -1) == Rat(1));
}

TEST_CASE("B_n closed inverse and the BC recursion") {
    for (long p : {2L, 3L}) {
        for (long alpha : {1L, 2L}) {
            for (int n = 1; n <= 6; ++n) {
                Mat b = mat_B(n, p, alpha);
                CHECK(b * mat_B_inverse(n, p, alpha) == Mat::identity(n));
                CHECK(check_bc_recursion(n, p, alpha));
            }
        }
    }
    // the derived 3x3 instance: j_{2,0}(B_2^{-1}) C_3 = B_3^{-1}
    long p = 3;
    Mat lhs = mat_B_inverse(2, p, 1).embed_corner(p, 0) * mat_C(3, p, 1);
    CHECK(lhs.at(0, 0) == 1);
    CHECK(lhs.at(1, 0) == 3);
    CHECK(lhs.at(1, 1) == -1);
    CHECK(lhs.at(2, 0) == 9);
    CHECK(lhs.at(2, 1) == -3);
    CHECK(lhs.at(2, 2) == -1);
}

TEST_CASE("h decomposition congruence witness") {
    // n = 1, f = p: K = [[p^2+1, p],[p, 1]]
    for (long p : {2L, 3L, 5L}) {
        auto w = check_h_decomposition(1, p, 1);
        CHECK(w.K.at(0, 0) == Rat(p * p + 1));
        CHECK(w.K.at(0, 1) == Rat(p));
        CHECK(w.K.at(1, 0) == Rat(p));
        CHECK(w.K.at(1, 1) == 1);
        CHECK(w.congruent_to_identity);
    }
    for (int n = 1; n <= 3; ++n)
        for (long alpha : {1L, 2L}) {
            auto w = check_h_decomposition(n, 2, alpha);
            CHECK(w.in_glzp);
            CHECK(w.congruent_to_identity);
        }
    // determinant sanity for n <= 4
    for (int n = 1; n <= 4; ++n) {
        long p = 2, alpha = 1;
        Rat f = pow_p(p, alpha);
        Mat tf = mat_t(n, f).embed_corner(p, 0);
        Mat lhs = mat_h(n) * tf;
        Mat rhs = tf * mat_B_inverse(n + 1, p, alpha) * mat_D(n + 1, p, alpha) *
                  mat_w(n + 1) * mat_Etilde(n + 1, p, alpha);
        auto w = check_h_decomposition(n, p, alpha);
        CHECK(lhs.det() == rhs.det() * w.K.det());
    }
}

TEST_CASE("bruhat decomposition") {
    // upper triangular input: (m, id, 1)
    Mat m = Mat::identity(3);
    m.at(0, 1) = Rat(1, 2);
    m.at(1, 2) = 7;
    auto b = bruhat_decompose(m);
    CHECK(b.omega == identity_perm(3));
    CHECK(b.b == m);
    CHECK(b.u == Mat::identity(3));
    // permutation input: (1, w_n, 1)
    auto bw = bruhat_decompose(mat_w(3));
    CHECK(bw.omega == longest_perm(3));
    CHECK(bw.b == Mat::identity(3));
    CHECK(bw.u == Mat::identity(3));

    // round-trip on random invertible matrices over Q with p-power content
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 4; ++n) {
        int done = 0;
        while (done < 100) {
            Mat r(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    long num = static_cast<long>(rng() % 19) - 9;
                    long vp = static_cast<long>(rng() % 5) - 2;
                    r.at(i, j) = Rat(num) * pow_p(3, vp);
                }
            if (r.det() == 0) continue;
            ++done;
            auto d = bruhat_decompose(r);
            CHECK(d.b * Mat::permutation(d.omega) * d.u == r);
        }
    }
}
