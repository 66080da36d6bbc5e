#ifndef SURJ_SNF_HPP
#define SURJ_SNF_HPP

#include <string>
#include <vector>

#include "surj/rational.hpp"

namespace surj {

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Integer> a;  // row-major

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Integer(0)) {}

    Integer& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows_in) {
        if (rows_in.empty()) return IntMatrix();
        IntMatrix m(rows_in.size(), rows_in[0].size());
        for (std::size_t i = 0; i < rows_in.size(); ++i) {
            if (rows_in[i].size() != m.cols) throw error("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = Integer(rows_in[i][j]);
        }
        return m;
    }

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

inline IntMatrix operator*(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols != B.rows) throw error("matrix product shape mismatch");
    IntMatrix C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            if (A.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j) C.at(i, j) += A.at(i, k) * B.at(k, j);
        }
    return C;
}

// Determinant by fraction-free (Bareiss) elimination.
inline Integer det(IntMatrix m) {
    if (m.rows != m.cols) throw error("determinant of non-square matrix");
    std::size_t n = m.rows;
    if (n == 0) return Integer(1);
    Integer prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return Integer(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;  // exact by Bareiss
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

// U * A * V = D with U, V unimodular, D diagonal with d_1 | d_2 | ... and
// nonnegative diagonal entries.
struct SmithNormalForm {
    IntMatrix d, u, v;

    std::vector<Integer> diagonal() const {
        std::vector<Integer> out;
        for (std::size_t i = 0; i < std::min(d.rows, d.cols); ++i) out.push_back(d.at(i, i));
        return out;
    }
    std::size_t rank() const {
        std::size_t r = 0;
        for (const auto& x : diagonal())
            if (x != 0) ++r;
        return r;
    }
};

inline SmithNormalForm smith_normal_form(const IntMatrix& A) {
    SmithNormalForm s;
    s.d = A;
    s.u = IntMatrix::identity(A.rows);
    s.v = IntMatrix::identity(A.cols);
    IntMatrix& D = s.d;
    IntMatrix& U = s.u;
    IntMatrix& V = s.v;
    const std::size_t m = A.rows, n = A.cols;
    const std::size_t nmin = std::min(m, n);

    auto swap_rows = [&](IntMatrix& M, std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < M.cols; ++k) std::swap(M.at(i, k), M.at(j, k));
    };
    auto swap_cols = [&](IntMatrix& M, std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < M.rows; ++k) std::swap(M.at(k, i), M.at(k, j));
    };
    auto add_row = [&](IntMatrix& M, std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t k = 0; k < M.cols; ++k) M.at(dst, k) += f * M.at(src, k);
    };
    auto add_col = [&](IntMatrix& M, std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t k = 0; k < M.rows; ++k) M.at(k, dst) += f * M.at(k, src);
    };

    for (std::size_t sdx = 0; sdx < nmin; ++sdx) {
        for (;;) {
            // Smallest nonzero |entry| in the trailing block, ties by (row, col).
            bool found = false;
            std::size_t pi = sdx, pj = sdx;
            Integer best;
            for (std::size_t i = sdx; i < m; ++i)
                for (std::size_t j = sdx; j < n; ++j) {
                    if (D.at(i, j) == 0) continue;
                    Integer v_ = abs(D.at(i, j));
                    if (!found || v_ < best) {
                        found = true;
                        best = v_;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) break;  // trailing block is zero

            bool lone = true;
            for (std::size_t i = sdx + 1; i < m && lone; ++i)
                if (D.at(i, sdx) != 0) lone = false;
            for (std::size_t j = sdx + 1; j < n && lone; ++j)
                if (D.at(sdx, j) != 0) lone = false;
            if (lone && D.at(sdx, sdx) != 0) {
                // Enforce the divisibility chain before moving on.
                bool divides_all = true;
                std::size_t bi = 0, bj = 0;
                for (std::size_t i = sdx + 1; i < m && divides_all; ++i)
                    for (std::size_t j = sdx + 1; j < n; ++j)
                        if (D.at(i, j) % D.at(sdx, sdx) != 0) {
                            divides_all = false;
                            bi = i;
                            bj = j;
                            break;
                        }
                (void)bj;
                if (divides_all) break;
                add_row(D, sdx, bi, Integer(1));
                add_row(U, sdx, bi, Integer(1));
                continue;
            }

            if (pi != sdx) {
                swap_rows(D, sdx, pi);
                swap_rows(U, sdx, pi);
            }
            if (pj != sdx) {
                swap_cols(D, sdx, pj);
                swap_cols(V, sdx, pj);
            }
            for (std::size_t i = sdx + 1; i < m; ++i) {
                if (D.at(i, sdx) == 0) continue;
                Integer f = -(D.at(i, sdx) / D.at(sdx, sdx));
                add_row(D, i, sdx, f);
                add_row(U, i, sdx, f);
            }
            for (std::size_t j = sdx + 1; j < n; ++j) {
                if (D.at(sdx, j) == 0) continue;
                Integer f = -(D.at(sdx, j) / D.at(sdx, sdx));
                add_col(D, j, sdx, f);
                add_col(V, j, sdx, f);
            }
        }
        if (D.at(sdx, sdx) < 0) {
            for (std::size_t k = 0; k < n; ++k) D.at(sdx, k) = -D.at(sdx, k);
            for (std::size_t k = 0; k < U.cols; ++k) U.at(sdx, k) = -U.at(sdx, k);
        }
    }
    return s;
}

inline std::size_t integer_rank(const IntMatrix& A) {
    if (A.rows == 0 || A.cols == 0) return 0;
    return smith_normal_form(A).rank();
}

// Canonical basis for the row space under left multiplication by GL(Z):
// row-style Hermite normal form (positive pivots, entries above a pivot
// reduced into [0, pivot)). Zero rows sink to the bottom.
inline IntMatrix hermite_rows(IntMatrix M) {
    std::size_t r0 = 0;
    for (std::size_t col = 0; col < M.cols && r0 < M.rows; ++col) {
        for (;;) {
            std::size_t piv = M.rows;
            Integer best;
            for (std::size_t i = r0; i < M.rows; ++i) {
                if (M.at(i, col) == 0) continue;
                Integer v = abs(M.at(i, col));
                if (piv == M.rows || v < best) {
                    piv = i;
                    best = v;
                }
            }
            if (piv == M.rows) break;  // column clear below r0
            if (piv != r0)
                for (std::size_t k = 0; k < M.cols; ++k) std::swap(M.at(r0, k), M.at(piv, k));
            bool reduced = true;
            for (std::size_t i = r0 + 1; i < M.rows; ++i) {
                if (M.at(i, col) == 0) continue;
                Integer f = -(M.at(i, col) / M.at(r0, col));
                for (std::size_t k = 0; k < M.cols; ++k) M.at(i, k) += f * M.at(r0, k);
                if (M.at(i, col) != 0) reduced = false;
            }
            if (reduced) {
                if (M.at(r0, col) < 0)
                    for (std::size_t k = 0; k < M.cols; ++k) M.at(r0, k) = -M.at(r0, k);
                for (std::size_t i = 0; i < r0; ++i) {
                    // floor division keeps entries above the pivot in [0, pivot)
                    Integer f;
                    mpz_fdiv_q(f.get_mpz_t(), M.at(i, col).get_mpz_t(),
                               M.at(r0, col).get_mpz_t());
                    if (f != 0)
                        for (std::size_t k = 0; k < M.cols; ++k)
                            M.at(i, k) -= f * M.at(r0, k);
                }
                ++r0;
                break;
            }
        }
    }
    return M;
}

}  // namespace surj

#endif
