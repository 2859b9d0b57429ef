#include "birchlab/gadgets.hpp"

namespace birchlab {
namespace gadgets {

Mat mat_A(int n, long p, long alpha) {
    Mat m = Mat::identity(n);
    Rat finv = pow_p(p, -alpha);
    for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = i == 0 ? finv : -finv;
    return m;
}

Mat mat_B(int n, long p, long alpha) {
    if (n == 0) return Mat(0);
    Mat m(n);
    Rat f = pow_p(p, alpha);
    m.at(0, 0) = 1;
    for (int i = 1; i < n; ++i) {
        m.at(i, i) = -1;
        m.at(i, i - 1) = f;
    }
    if (n == 1) m.at(0, 0) = 1;  // B_1 = 1 by convention
    return m;
}

Mat mat_B_inverse(int n, long p, long alpha) {
    if (n == 0) return Mat(0);
    return mat_B(n, p, alpha).inverse();
}

Mat mat_C(int n, long p, long alpha) {
    Mat m = Mat::identity(n);
    if (n == 1) return m;  // C_1 = 1 by convention
    for (int j = 0; j < n; ++j) {
        long e = n - 1 - j;
        m.at(n - 1, j) = (j == 0 ? Rat(1) : Rat(-1)) * pow_p(p, alpha * e);
    }
    return m;
}

Mat mat_D(int n, long p, long alpha) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = pow_p(p, alpha * (2 * i - (n - 1)));
    return m;
}

Mat mat_Etilde(int n1, long p, long alpha) {
    Mat m = Mat::identity(n1);
    for (int j = 1; j < n1; ++j) m.at(0, j) = -pow_p(p, alpha * j);
    for (int i = 1; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j) m.at(i, j) = pow_p(p, alpha * (j - i));
    return m;
}

Mat mat_h(int n) {
    Mat m(n + 1);
    Mat w = mat_w(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = w.at(i, j);
    for (int i = 0; i <= n; ++i) m.at(i, n) = 1;
    return m;
}

Mat mat_w(int n) { return Mat::permutation(longest_perm(n)); }

Mat mat_t(int n, const Rat& x) {
    std::vector<Rat> d(n);
    for (int i = 0; i < n; ++i) d[i] = pow_rat(x, n - i);
    return Mat::diag(d);
}

Mat mat_j(const Mat& g, long p, long delta) { return g.embed_corner(p, delta); }

std::vector<Rat> phi_column(int n, long p, long alpha) {
    std::vector<Rat> phi(n);
    for (int i = 0; i < n; ++i) phi[i] = pow_p(p, -alpha * (n - i));
    return phi;
}

Rat lambda_form(const Mat& g, long p, long alpha, long delta) {
    std::vector<Rat> phi = phi_column(g.size(), p, alpha);
    Rat s(0);
    int n = g.size();
    for (int j = 0; j < n; ++j) s += g.at(n - 1, j) * phi[j];
    return s * pow_p(p, -delta);
}

bool check_bc_recursion(int n, long p, long alpha) {
    if (n == 1) return true;  // both sides are the 1x1 identity conventions
    Mat lhs = mat_B_inverse(n - 1, p, alpha).embed_corner(p, 0) * mat_C(n, p, alpha);
    Mat rhs = mat_B_inverse(n, p, alpha);
    return lhs == rhs;
}

CongruenceWitness check_h_decomposition(int n, long p, long alpha) {
    require(alpha >= 1, ErrorCode::precondition, "conductor exponent must be positive");
    Rat f = pow_p(p, alpha);
    Mat tf = mat_t(n, f);
    Mat lhs = mat_h(n) * tf.embed_corner(p, 0);
    Mat main = tf.embed_corner(p, 0) * mat_B_inverse(n + 1, p, alpha) *
               mat_D(n + 1, p, alpha) * mat_w(n + 1) * mat_Etilde(n + 1, p, alpha);
    Mat K = main.inverse() * lhs;
    CongruenceWitness w;
    w.K = K;
    w.in_glzp = K.in_glnzp(p);
    w.congruent_to_identity = K.in_principal_congruence(p, alpha);
    require(w.in_glzp && w.congruent_to_identity, ErrorCode::certification_failure,
            "h-decomposition witness is not congruent to the identity mod f");
    return w;
}

}  // namespace gadgets
}  // namespace birchlab
