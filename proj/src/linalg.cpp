#include "gammalab/linalg.hpp"

#include "gammalab/errors.hpp"

namespace gammalab {

QMat q_identity(int n) {
    QMat m(n, std::vector<BigRat>(n, BigRat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat q_mul(const QMat& a, const QMat& b) {
    int n = int(a.size()), k = int(b.size()), m = int(b[0].size());
    QMat r(n, std::vector<BigRat>(m, BigRat(0)));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

std::vector<BigRat> vec_mul(const std::vector<BigRat>& v, const QMat& a) {
    int k = int(a.size()), m = int(a[0].size());
    std::vector<BigRat> r(m, BigRat(0));
    for (int t = 0; t < k; ++t) {
        if (v[t] == 0) continue;
        for (int j = 0; j < m; ++j) r[j] += v[t] * a[t][j];
    }
    return r;
}

QMat q_inverse(const QMat& a) {
    int n = int(a.size());
    QMat m = a, inv = q_identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw Error(ExitCode::usage, "q_inverse: singular matrix");
        std::swap(m[col], m[piv]);
        std::swap(inv[col], inv[piv]);
        BigRat d = m[col][col];
        for (int j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            BigRat f = m[i][col];
            for (int j = 0; j < n; ++j) {
                m[i][j] -= f * m[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

BigRat q_det(const QMat& a) {
    int n = int(a.size());
    QMat m = a;
    BigRat det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return BigRat(0);
        if (piv != col) {
            std::swap(m[col], m[piv]);
            det = -det;
        }
        det *= m[col][col];
        BigRat d = m[col][col];
        for (int i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            BigRat f = m[i][col] / d;
            for (int j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

ZMat hnf_rows(const std::vector<std::vector<BigInt>>& rows_in, int n) {
    std::vector<std::vector<BigInt>> rows = rows_in;
    // eliminate columns right to left; pivot for column c ends in slot c
    int next_slot = int(rows.size()) - 1;
    for (int col = n - 1; col >= 0; --col) {
        // gcd-combine all rows [0 .. next_slot] with nonzero entry at col
        int piv = -1;
        for (int i = next_slot; i >= 0; --i)
            if (rows[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw Error(ExitCode::usage, "hnf_rows: rank deficient");
        std::swap(rows[piv], rows[next_slot]);
        for (int i = 0; i < next_slot; ++i) {
            if (rows[i][col] == 0) continue;
            BigInt a = rows[next_slot][col], b = rows[i][col], g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
                       b.get_mpz_t());
            BigInt ag = a / g, bg = b / g;
            for (int j = 0; j < n; ++j) {
                BigInt u = rows[next_slot][j], v = rows[i][j];
                rows[next_slot][j] = s * u + t * v;
                rows[i][j] = -bg * u + ag * v;
            }
        }
        if (rows[next_slot][col] < 0)
            for (int j = 0; j < n; ++j) rows[next_slot][j] = -rows[next_slot][j];
        --next_slot;
    }
    // the last n rows now form a lower-triangular basis
    ZMat h(n, std::vector<BigInt>(n));
    int base = int(rows.size()) - n;
    for (int i = 0; i < n; ++i) h[i] = rows[base + i];
    // reduce entries below each pivot; descending column order keeps the
    // already-reduced entries canonical
    for (int j = 1; j < n; ++j) {
        for (int i = j - 1; i >= 0; --i) {
            if (h[j][i] == 0) continue;
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), h[j][i].get_mpz_t(), h[i][i].get_mpz_t());
            if (q == 0) continue;
            for (int k = 0; k <= i; ++k) h[j][k] -= q * h[i][k];
        }
    }
    return h;
}

namespace {

BigInt invmod(const BigInt& a, const BigInt& p) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw Error(ExitCode::usage, "invmod: not invertible");
    return r;
}

} // namespace

ZMat zp_left_kernel(const ZMat& a, const BigInt& p) {
    // transpose, then right kernel by rref
    int r = int(a.size());
    if (r == 0) return {};
    int c = int(a[0].size());
    ZMat m(c, std::vector<BigInt>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            BigInt v = a[i][j] % p;
            if (v < 0) v += p;
            m[j][i] = v;
        }

    std::vector<int> pivot_of_col(r, -1);
    int rank = 0;
    for (int col = 0; col < r && rank < c; ++col) {
        int piv = -1;
        for (int i = rank; i < c; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        BigInt inv = invmod(m[rank][col], p);
        for (int j = 0; j < r; ++j) m[rank][j] = m[rank][j] * inv % p;
        for (int i = 0; i < c; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            BigInt f = m[i][col];
            for (int j = 0; j < r; ++j) {
                m[i][j] = (m[i][j] - f * m[rank][j]) % p;
                if (m[i][j] < 0) m[i][j] += p;
            }
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    ZMat kernel;
    for (int col = 0; col < r; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<BigInt> v(r, BigInt(0));
        v[col] = 1;
        for (int c2 = 0; c2 < r; ++c2) {
            int pr = pivot_of_col[c2];
            if (pr >= 0) v[c2] = (p - m[pr][col]) % p;
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

ZMat zp_mul(const ZMat& a, const ZMat& b, const BigInt& p) {
    int n = int(a.size()), k = int(b.size()), m = int(b[0].size());
    ZMat r(n, std::vector<BigInt>(m, BigInt(0)));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < m; ++j) r[i][j] = (r[i][j] + a[i][t] * b[t][j]) % p;
        }
    return r;
}

} // namespace gammalab
