#include "birchlab/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace birchlab {

Rat Mat::det() const {
    Mat m = *this;
    Rat d(1);
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int row = col; row < n_; ++row)
            if (m.at(row, col) != 0) { pivot = row; break; }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            for (int j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Rat inv = Rat(1) / m.at(col, col);
        for (int row = col + 1; row < n_; ++row) {
            if (m.at(row, col) == 0) continue;
            Rat f = m.at(row, col) * inv;
            for (int j = col; j < n_; ++j) m.at(row, j) -= f * m.at(col, j);
        }
    }
    return d;
}

Mat Mat::inverse() const {
    Mat m = *this;
    Mat inv = Mat::identity(n_);
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int row = col; row < n_; ++row)
            if (m.at(row, col) != 0) { pivot = row; break; }
        require(pivot >= 0, ErrorCode::precondition, "matrix is singular");
        if (pivot != col)
            for (int j = 0; j < n_; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rat f = Rat(1) / m.at(col, col);
        for (int j = 0; j < n_; ++j) {
            m.at(col, j) *= f;
            inv.at(col, j) *= f;
        }
        for (int row = 0; row < n_; ++row) {
            if (row == col || m.at(row, col) == 0) continue;
            Rat g = m.at(row, col);
            for (int j = 0; j < n_; ++j) {
                m.at(row, j) -= g * m.at(col, j);
                inv.at(row, j) -= g * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool Mat::in_glnzp(long p) const {
    if (!entries_val_at_least(p, 0)) return false;
    Rat d = det();
    return d != 0 && val_p(d, p) == 0;
}

bool Mat::in_iwahori(long p, long alpha) const {
    if (!in_glnzp(p)) return false;
    for (int i = 1; i < n_; ++i)
        for (int j = 0; j < i; ++j)
            if (at(i, j) != 0 && val_p(at(i, j), p) < alpha) return false;
    return true;
}

bool Mat::in_principal_congruence(long p, long k) const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Rat d = at(i, j) - (i == j ? Rat(1) : Rat(0));
            if (d != 0 && val_p(d, p) < k) return false;
        }
    return true;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < n_; ++j) os << (j ? "," : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> s = identity_perm(n);
    std::vector<std::vector<int>> out;
    do out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

namespace {

int rank_of(const Mat& m, int row_from, int col_to) {
    // rank of the submatrix rows row_from..n-1, cols 0..col_to
    int n = m.size();
    std::vector<std::vector<Rat>> rows;
    for (int i = row_from; i < n; ++i) {
        std::vector<Rat> r(col_to + 1);
        for (int j = 0; j <= col_to; ++j) r[j] = m.at(i, j);
        rows.push_back(std::move(r));
    }
    int rank = 0;
    for (int col = 0; col <= col_to; ++col) {
        int pivot = -1;
        for (size_t i = rank; i < rows.size(); ++i)
            if (rows[i][col] != 0) { pivot = static_cast<int>(i); break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        Rat inv = Rat(1) / rows[rank][col];
        for (size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            Rat f = rows[i][col] * inv;
            for (int j = col; j <= col_to; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

BruhatData bruhat_decompose(const Mat& m) {
    int n = m.size();
    require(m.det() != 0, ErrorCode::precondition, "bruhat_decompose needs invertible input");
    // Cell detection by rank profile: sigma^{-1}(j) is the row where the rank
    // of the lower-left block jumps as the column range grows.
    std::vector<int> sigma_inv(n, -1);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            int r1 = rank_of(m, i, j);
            int r2 = i + 1 < n ? rank_of(m, i + 1, j) : 0;
            int r3 = j > 0 ? rank_of(m, i, j - 1) : 0;
            int r4 = (i + 1 < n && j > 0) ? rank_of(m, i + 1, j - 1) : 0;
            if (r1 - r2 - r3 + r4 == 1) { sigma_inv[j] = i; break; }
        }
        require(sigma_inv[j] >= 0, ErrorCode::internal, "bruhat cell detection failed");
    }
    std::vector<int> sigma(n);
    for (int j = 0; j < n; ++j) sigma[sigma_inv[j]] = j;

    // Clear columns left-to-right with earlier columns so that column j of the
    // result is supported on rows <= sigma^{-1}(j); the operations assemble
    // u^{-1} acting on the right.
    Mat work = m;
    Mat uinv = Mat::identity(n);
    std::vector<int> col_of_pivot_row(n, -1);
    for (int j = 0; j < n; ++j) {
        // Clear bottom-up so each subtraction only disturbs rows above its pivot.
        for (int i = n - 1; i > sigma_inv[j]; --i) {
            if (work.at(i, j) == 0) continue;
            int jp = col_of_pivot_row[i];
            require(jp >= 0, ErrorCode::internal,
                    "bruhat clearing: no earlier pivot for a residual row");
            Rat f = work.at(i, j) / work.at(i, jp);
            for (int r = 0; r < n; ++r) {
                work.at(r, j) -= f * work.at(r, jp);
                uinv.at(r, j) -= f * uinv.at(r, jp);
            }
        }
        col_of_pivot_row[sigma_inv[j]] = j;
    }
    BruhatData out;
    out.omega = sigma;
    out.u = uinv.inverse();
    out.b = work * Mat::permutation(sigma).inverse();
    require(out.b.is_upper_triangular(), ErrorCode::internal, "bruhat b not triangular");
    require(out.u.is_unipotent_upper(), ErrorCode::internal, "bruhat u not unipotent");
    require(out.b * Mat::permutation(sigma) * out.u == m, ErrorCode::internal,
            "bruhat recomposition failed");
    return out;
}

}  // namespace birchlab
