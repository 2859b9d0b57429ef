#pragma once

#include "birchlab/matrix.hpp"

namespace birchlab {

// Explicit level-f matrices on GL(n) / GL(n+1); f = p^alpha throughout.
namespace gadgets {

Mat mat_A(int n, long p, long alpha);       // upper bidiagonal with f^{-1} band
Mat mat_B(int n, long p, long alpha);       // lower bidiagonal, diag (1,-1,..,-1)
Mat mat_B_inverse(int n, long p, long alpha);
Mat mat_C(int n, long p, long alpha);       // identity with last row (f^{n-1},..,-1)
Mat mat_D(int n, long p, long alpha);       // diag(f^{-(n-1)},...,f^{n-1})
Mat mat_Etilde(int n1, long p, long alpha); // size n1 = n+1, unipotent upper
Mat mat_h(int n);                           // in GL(n+1), w_n block with 1-column
Mat mat_w(int n);                           // longest Weyl element
Mat mat_t(int n, const Rat& x);             // diag(x^n, ..., x)
Mat mat_j(const Mat& g, long p, long delta);// diag(g, p^delta)
std::vector<Rat> phi_column(int n, long p, long alpha);

// lambda_n^delta(g) = p^{-delta} * (last row of g) . phi_n
Rat lambda_form(const Mat& g, long p, long alpha, long delta);

// j_{n-1,0}(B_{n-1}^{-1}) C_n = B_n^{-1}
bool check_bc_recursion(int n, long p, long alpha);

// h_n j_n(t_f) = j_n(t_f) B_{n+1}^{-1} D_{n+1} w_{n+1} Etilde_{n+1} * K with
// K = 1 mod f; returns the witness K.
struct CongruenceWitness {
    Mat K;
    bool in_glzp;
    bool congruent_to_identity;  // mod p^alpha
};
CongruenceWitness check_h_decomposition(int n, long p, long alpha);

}  // namespace gadgets

}  // namespace birchlab
