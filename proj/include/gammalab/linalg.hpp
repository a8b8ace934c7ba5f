#ifndef GAMMALAB_LINALG_HPP
#define GAMMALAB_LINALG_HPP

#include "gammalab/intmath.hpp"

#include <cstdint>
#include <vector>

namespace gammalab {

// Small exact dense matrices for the maximal-order computation.
// Rows-of-vectors; element vectors are row vectors throughout.
using QMat = std::vector<std::vector<BigRat>>;
using ZMat = std::vector<std::vector<BigInt>>;

QMat q_identity(int n);
QMat q_mul(const QMat& a, const QMat& b);
std::vector<BigRat> vec_mul(const std::vector<BigRat>& v, const QMat& a);
QMat q_inverse(const QMat& a);  // throws on singular input
BigRat q_det(const QMat& a);

// Row-style Hermite normal form of the lattice spanned by `rows` inside Z^n.
// Requires full rank n; returns a lower-triangular n x n basis with positive
// diagonal and the entries below each pivot reduced modulo it.
ZMat hnf_rows(const std::vector<std::vector<BigInt>>& rows, int n);

// F_p linear algebra at arbitrary prime p (entries reduced mod p).

// Basis of { x : x * a = 0 } (left null space), rows of the result.
ZMat zp_left_kernel(const ZMat& a, const BigInt& p);

ZMat zp_mul(const ZMat& a, const ZMat& b, const BigInt& p);

} // namespace gammalab

#endif
